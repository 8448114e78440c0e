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

#include "ccmp/ccmp.h"

#include <algorithm>
#include <string>

namespace ccmp {
namespace {

constexpr std::uint8_t kMicIvFlags = 0x59;
constexpr std::uint8_t kCtrFlags = 0x01;
constexpr std::uint16_t kAadLength = 22;

void CheckPayloadLength(std::size_t length) {
  if (length > kMaxPayload) {
    throw LengthError("payload of " + std::to_string(length) +
                      " bytes exceeds " + std::to_string(kMaxPayload));
  }
}

// flags | priority | A2 | PN, then a 16-bit big-endian trailer.
Block NonceBlock(std::uint8_t flags, const MpduHeader& header,
                 std::uint16_t trailer) {
  header.Validate();
  Block block{};
  block[0] = flags;
  block[1] = header.priority;
  std::copy(header.a2.begin(), header.a2.end(), block.begin() + 2);
  for (int i = 0; i < 6; ++i) {
    block[8 + i] = static_cast<std::uint8_t>(header.pn >> (8 * (5 - i)));
  }
  block[14] = static_cast<std::uint8_t>(trailer >> 8);
  block[15] = static_cast<std::uint8_t>(trailer);
  return block;
}

}  // namespace

void MpduHeader::Validate() const {
  if (pn > kMaxPacketNumber) throw RangeError("packet number exceeds 48 bits");
  if (priority > kMaxPriority) {
    throw RangeError("priority must be <= 15, got " + std::to_string(priority));
  }
}

Block ConstructMicIv(const MpduHeader& header, std::size_t payload_len) {
  CheckPayloadLength(payload_len);
  return NonceBlock(kMicIvFlags, header,
                    static_cast<std::uint16_t>(payload_len));
}

Block ConstructMicIvUnbounded(const MpduHeader& header,
                              std::size_t payload_len) {
  return NonceBlock(kMicIvFlags, header,
                    static_cast<std::uint16_t>(payload_len & 0xFFFF));
}

Block ConstructMicHeader1(const MpduHeader& header) {
  const std::uint16_t fc =
      static_cast<std::uint16_t>((header.fc & ~kFcMaskedBits) |
                                 kFcProtectedBit);
  Block block{};
  block[0] = static_cast<std::uint8_t>(kAadLength >> 8);
  block[1] = static_cast<std::uint8_t>(kAadLength);
  block[2] = static_cast<std::uint8_t>(fc);
  block[3] = static_cast<std::uint8_t>(fc >> 8);
  std::copy(header.a1.begin(), header.a1.end(), block.begin() + 4);
  std::copy(header.a2.begin(), header.a2.end(), block.begin() + 10);
  return block;
}

Block ConstructMicHeader2(const MpduHeader& header) {
  const std::uint16_t sc = header.sc & ~kScMaskedBits;
  Block block{};
  std::copy(header.a3.begin(), header.a3.end(), block.begin());
  block[6] = static_cast<std::uint8_t>(sc);
  block[7] = static_cast<std::uint8_t>(sc >> 8);
  return block;
}

Block ConstructCtrPreload(const MpduHeader& header, std::uint32_t counter) {
  if (counter > 0xFFFF) {
    throw RangeError("counter must be <= 0xFFFF, got " +
                     std::to_string(counter));
  }
  return NonceBlock(kCtrFlags, header, static_cast<std::uint16_t>(counter));
}

ProtectedMpdu CcmpEncrypt(const aes::Aes128& cipher, const Mpdu& mpdu,
                          const MicEngine& engine) {
  CheckPayloadLength(mpdu.payload.size());
  const Block b0 = ConstructMicIv(mpdu.header, mpdu.payload.size());
  const Block aad1 = ConstructMicHeader1(mpdu.header);
  const Block aad2 = ConstructMicHeader2(mpdu.header);
  const MicTag mic = engine.Compute(cipher, b0, aad1, aad2, mpdu.payload);
  return EncryptMpdu(cipher, mpdu.header, mpdu.payload, mic);
}

ProtectedMpdu CcmpEncrypt(const Key128& key, const Mpdu& mpdu,
                          const MicEngine& engine) {
  return CcmpEncrypt(aes::Aes128(key), mpdu, engine);
}

std::optional<Mpdu> CcmpDecrypt(const aes::Aes128& cipher,
                                const ProtectedMpdu& frame,
                                const MicEngine& engine) {
  CheckPayloadLength(frame.ciphertext.size());
  // Counter mode is its own inverse: run the encryption stage on the
  // ciphertext and encrypted MIC.
  const Block preload = ConstructCtrPreload(frame.header, 0);
  ProtectedMpdu opened = EncryptWithPreload(
      cipher, preload, frame.header, frame.ciphertext, frame.encrypted_mic);

  const Block b0 = ConstructMicIv(frame.header, opened.ciphertext.size());
  const MicTag expected =
      engine.Compute(cipher, b0, ConstructMicHeader1(frame.header),
                     ConstructMicHeader2(frame.header), opened.ciphertext);
  if (expected != opened.encrypted_mic) return std::nullopt;
  return Mpdu{frame.header, std::move(opened.ciphertext)};
}

std::optional<Mpdu> CcmpDecrypt(const Key128& key, const ProtectedMpdu& frame,
                                const MicEngine& engine) {
  return CcmpDecrypt(aes::Aes128(key), frame, engine);
}

}  // namespace ccmp
