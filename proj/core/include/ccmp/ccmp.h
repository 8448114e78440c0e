// Copyright 2026 The ccmp-icbc Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef CCMP_CCMP_H_
#define CCMP_CCMP_H_

// CCMP frame protection (IEEE 802.11 non-QoS profile, no A4, M = 8, L = 2).
//
//   B0       flags 0x59 | priority | A2 | PN (big-endian) | Dlen (big-endian)
//   AAD 1    0x0016 | masked FC | A1 | A2
//   AAD 2    A3 | masked SC | 8 zero octets
//   Ctr(i)   flags 0x01 | priority | A2 | PN | i (big-endian)
//
// The MIC is the first 8 octets of the CBC-MAC over B0, the AAD blocks and
// the zero-padded payload. Ctr(0) encrypts the MIC; Ctr(i + 1) encrypts
// payload block i.
//
// The MIC comparison in CcmpDecrypt is not constant time.

#include <algorithm>
#include <array>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "ccmp/aes.h"
#include "ccmp/block.h"
#include "ccmp/icbc.h"

namespace ccmp {

// Largest payload a frame may carry.
inline constexpr std::size_t kMaxPayload = 2296;
inline constexpr std::uint64_t kMaxPacketNumber = (std::uint64_t{1} << 48) - 1;
inline constexpr std::uint8_t kMaxPriority = 15;

using MacAddress = std::array<std::uint8_t, 6>;

// Header fields CCMP consumes. `fc` and `sc` hold the 16-bit field values;
// on the wire (and in the AAD) they are little-endian.
struct MpduHeader {
  std::uint16_t fc = 0;
  MacAddress a1{};
  MacAddress a2{};
  MacAddress a3{};
  std::uint16_t sc = 0;
  std::uint8_t priority = 0;
  std::uint64_t pn = 0;

  // Throws RangeError if pn >= 2^48 or priority > 15.
  void Validate() const;

  friend bool operator==(const MpduHeader&, const MpduHeader&) = default;
};

struct Mpdu {
  MpduHeader header;
  std::vector<std::uint8_t> payload;

  friend bool operator==(const Mpdu&, const Mpdu&) = default;
};

struct ProtectedMpdu {
  MpduHeader header;
  std::vector<std::uint8_t> ciphertext;
  MicTag encrypted_mic{};

  friend bool operator==(const ProtectedMpdu&, const ProtectedMpdu&) = default;
};

// Frame-control bits zeroed in the AAD: subtype b4-b6, retry b11,
// power management b12, more data b13.
inline constexpr std::uint16_t kFcMaskedBits = 0x0070 | 0x3800;
inline constexpr std::uint16_t kFcProtectedBit = 0x4000;
// Sequence-control bits zeroed in the AAD: the sequence number b4-b15.
inline constexpr std::uint16_t kScMaskedBits = 0xFFF0;

Block ConstructMicIv(const MpduHeader& header, std::size_t payload_len);
Block ConstructMicHeader1(const MpduHeader& header);
Block ConstructMicHeader2(const MpduHeader& header);
Block ConstructCtrPreload(const MpduHeader& header, std::uint32_t counter);

// Benchmark-only variant of ConstructMicIv with no upper bound: the length
// field carries payload_len mod 2^16. Frames built this way are not valid
// CCMP; it exists so the harness can time oversize payloads with exact
// cipher-call counts.
Block ConstructMicIvUnbounded(const MpduHeader& header,
                              std::size_t payload_len);

// Sequential CBC-MAC over B0, both AAD blocks and the zero-padded payload.
template <aes::BlockCipher Cipher>
MicTag CalculateMic(const Cipher& cipher, const Block& b0, const Block& aad1,
                    const Block& aad2, std::span<const std::uint8_t> payload) {
  Block x = icbc::PrefixChain(cipher, b0, aad1, aad2);
  const std::size_t blocks = BlockCount(payload.size());
  for (std::size_t i = 0; i < blocks; ++i) {
    XorPayloadBlock(x, payload, i);
    cipher.EncryptInPlace(x);
  }
  return TruncateToMic(x);
}

// XORs `in` with the keystream E(Ctr(1)), E(Ctr(2)), ... derived from the
// counter-0 preload. The 16-bit counter wraps past 0xFFFF; that only
// happens for oversize benchmark payloads.
template <aes::BlockCipher Cipher>
void ApplyKeystream(const Cipher& cipher, const Block& preload,
                    std::span<const std::uint8_t> in,
                    std::span<std::uint8_t> out) {
  constexpr std::size_t kBatch = 32;
  std::array<Block, kBatch> keystream;
  const std::size_t blocks = BlockCount(in.size());
  for (std::size_t first = 0; first < blocks; first += kBatch) {
    const std::size_t n = std::min(kBatch, blocks - first);
    for (std::size_t i = 0; i < n; ++i) {
      const std::size_t counter = (first + i + 1) & 0xFFFF;
      keystream[i] = preload;
      keystream[i][14] = static_cast<std::uint8_t>(counter >> 8);
      keystream[i][15] = static_cast<std::uint8_t>(counter);
    }
    cipher.EncryptIndependent(std::span<Block>(keystream).first(n));
    for (std::size_t i = 0; i < n; ++i) {
      const std::size_t offset = (first + i) * kBlockSize;
      const std::size_t len = std::min(kBlockSize, in.size() - offset);
      for (std::size_t b = 0; b < len; ++b) {
        out[offset + b] = in[offset + b] ^ keystream[i][b];
      }
    }
  }
}

// Counter-mode stage given a ready counter-0 preload: keystream over the
// payload and E(Ctr(0)) over the MIC. No length bound.
template <aes::BlockCipher Cipher>
ProtectedMpdu EncryptWithPreload(const Cipher& cipher, const Block& preload,
                                 const MpduHeader& header,
                                 std::span<const std::uint8_t> payload,
                                 const MicTag& mic) {
  ProtectedMpdu out;
  out.header = header;
  out.ciphertext.resize(payload.size());
  ApplyKeystream(cipher, preload, payload, out.ciphertext);
  const Block s0 = cipher.Encrypt(preload);
  for (std::size_t i = 0; i < kMicSize; ++i) {
    out.encrypted_mic[i] = mic[i] ^ s0[i];
  }
  return out;
}

// Encrypts payload and MIC. Throws LengthError above kMaxPayload.
template <aes::BlockCipher Cipher>
ProtectedMpdu EncryptMpdu(const Cipher& cipher, const MpduHeader& header,
                          std::span<const std::uint8_t> payload,
                          const MicTag& mic) {
  if (payload.size() > kMaxPayload) {
    throw LengthError("payload of " + std::to_string(payload.size()) +
                      " bytes exceeds " + std::to_string(kMaxPayload));
  }
  return EncryptWithPreload(cipher, ConstructCtrPreload(header, 0), header,
                            payload, mic);
}

// Selects how the MIC is computed: the standard sequential CBC-MAC or the
// N-lane interleaved variant.
class MicEngine {
 public:
  static MicEngine Sequential() { return MicEngine(std::nullopt); }
  static MicEngine Interleaved(const icbc::IcbcConfig& config) {
    config.Validate();
    return MicEngine(config);
  }

  bool interleaved() const { return config_.has_value(); }
  std::size_t lanes() const { return config_ ? config_->lanes : 1; }
  std::size_t workers() const { return config_ ? config_->workers : 1; }
  // "sequential" or "icbc".
  std::string Label() const { return config_ ? "icbc" : "sequential"; }

  template <aes::BlockCipher Cipher>
  MicTag Compute(const Cipher& cipher, const Block& b0, const Block& aad1,
                 const Block& aad2,
                 std::span<const std::uint8_t> payload) const {
    if (config_) {
      return icbc::InterleavedCbcMac(cipher, b0, aad1, aad2, payload, *config_);
    }
    return CalculateMic(cipher, b0, aad1, aad2, payload);
  }

 private:
  explicit MicEngine(std::optional<icbc::IcbcConfig> config)
      : config_(config) {}

  std::optional<icbc::IcbcConfig> config_;
};

ProtectedMpdu CcmpEncrypt(const aes::Aes128& cipher, const Mpdu& mpdu,
                          const MicEngine& engine);
ProtectedMpdu CcmpEncrypt(const Key128& key, const Mpdu& mpdu,
                          const MicEngine& engine);

// Returns the plaintext frame, or nullopt when the MIC does not verify.
// A failure carries no detail about what was wrong.
std::optional<Mpdu> CcmpDecrypt(const aes::Aes128& cipher,
                                const ProtectedMpdu& frame,
                                const MicEngine& engine);
std::optional<Mpdu> CcmpDecrypt(const Key128& key, const ProtectedMpdu& frame,
                                const MicEngine& engine);

}  // namespace ccmp

#endif  // CCMP_CCMP_H_
