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

#ifndef CCMP_AES_H_
#define CCMP_AES_H_

// AES-128 forward cipher.
//
// The round operations work on a flat 16-byte state (see Block). Only the
// forward direction exists: CCM uses the block cipher for both directions.
//
// NOT CONSTANT TIME. The portable path indexes the S-box with secret data
// and the GF(2^8) multiply branches on data. Do not use this library where
// cache or timing side channels matter.

#include <array>
#include <concepts>
#include <cstddef>
#include <cstdint>
#include <span>

#include "ccmp/block.h"

namespace ccmp::aes {

inline constexpr int kRounds = 10;

// Multiplication by x in GF(2^8) modulo x^8 + x^4 + x^3 + x + 1.
constexpr std::uint8_t Xtime(std::uint8_t a) {
  return static_cast<std::uint8_t>((a << 1) ^ ((a & 0x80) ? 0x1B : 0x00));
}

// Shift-and-add product built from Xtime.
constexpr std::uint8_t GfMul(std::uint8_t a, std::uint8_t b) {
  std::uint8_t product = 0;
  while (b != 0) {
    if (b & 1) product ^= a;
    a = Xtime(a);
    b >>= 1;
  }
  return product;
}

// Builds the S-box from its definition: multiplicative inverse (0 maps to 0)
// followed by the affine transform with constant 0x63.
std::array<std::uint8_t, 256> GenerateSbox();

// The operational S-box. GenerateSbox() must reproduce it; the selftest and
// the unit tests check that.
extern const std::array<std::uint8_t, 256> kSbox;

// Round key i occupies round_keys[i]; round_keys[0] is the cipher key.
struct RoundKeySchedule {
  std::array<Block, kRounds + 1> round_keys{};

  friend bool operator==(const RoundKeySchedule&,
                         const RoundKeySchedule&) = default;
};

Block SubBytes(const Block& state);
Block ShiftRows(const Block& state);
Block MixColumns(const Block& state);
Block AddRoundKey(const Block& state, const Block& round_key);

RoundKeySchedule ExpandKey(const Key128& key);

// Reference round pipeline built from the four operations above.
Block EncryptBlock(const RoundKeySchedule& schedule, const Block& plaintext);

// Minimal interface the MIC and counter-mode code needs from a cipher.
//
//  Encrypt            one block on a sequential chain.
//  EncryptInPlace     the same, overwriting its argument.
//  EncryptLanes       independent chaining values, blocks[i] belonging to
//                     lane first_lane + i. Lets a backend overlap the lanes.
//  EncryptIndependent independent blocks with no chaining relation (counter
//                     mode keystream).
template <typename C>
concept BlockCipher = requires(const C& cipher, const Block& block,
                               std::span<Block> blocks, std::size_t lane) {
  { cipher.Encrypt(block) } -> std::same_as<Block>;
  cipher.EncryptInPlace(blocks.front());
  cipher.EncryptLanes(blocks, lane);
  cipher.EncryptIndependent(blocks);
};

// Keyed AES-128 with a selectable implementation. Every backend produces
// bit-identical output; kAesNi is an optional accelerated path.
class Aes128 {
 public:
  enum class Backend { kAuto, kPortable, kAesNi };

  explicit Aes128(const Key128& key, Backend backend = Backend::kAuto);
  explicit Aes128(const RoundKeySchedule& schedule,
                  Backend backend = Backend::kAuto);

  Block Encrypt(const Block& block) const;
  // Same as block = Encrypt(block). Keeps a chained state in memory rather
  // than bouncing it through general registers on every step.
  void EncryptInPlace(Block& block) const;
  void EncryptLanes(std::span<Block> blocks, std::size_t first_lane) const;
  void EncryptIndependent(std::span<Block> blocks) const;

  Backend backend() const { return backend_; }
  const RoundKeySchedule& schedule() const { return schedule_; }

  // True when the CPU supports the AES instruction set and the library was
  // built with the accelerated path.
  static bool AesNiAvailable();

 private:
  RoundKeySchedule schedule_;
  Backend backend_;
};

const char* BackendName(Aes128::Backend backend);

}  // namespace ccmp::aes

#endif  // CCMP_AES_H_
