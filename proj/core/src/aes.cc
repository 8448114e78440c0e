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

#include "ccmp/aes.h"

#include <stdexcept>

namespace ccmp::aes {
namespace internal {
// Defined in aes_ni.cc.
bool CpuHasAesNi();
void EncryptBlocksAesNi(const RoundKeySchedule& schedule,
                        std::span<Block> blocks);
}  // namespace internal

// clang-format off
const std::array<std::uint8_t, 256> kSbox = {
    0x63, 0x7c, 0x77, 0x7b, 0xf2, 0x6b, 0x6f, 0xc5, 0x30, 0x01, 0x67, 0x2b, 0xfe, 0xd7, 0xab, 0x76,
    0xca, 0x82, 0xc9, 0x7d, 0xfa, 0x59, 0x47, 0xf0, 0xad, 0xd4, 0xa2, 0xaf, 0x9c, 0xa4, 0x72, 0xc0,
    0xb7, 0xfd, 0x93, 0x26, 0x36, 0x3f, 0xf7, 0xcc, 0x34, 0xa5, 0xe5, 0xf1, 0x71, 0xd8, 0x31, 0x15,
    0x04, 0xc7, 0x23, 0xc3, 0x18, 0x96, 0x05, 0x9a, 0x07, 0x12, 0x80, 0xe2, 0xeb, 0x27, 0xb2, 0x75,
    0x09, 0x83, 0x2c, 0x1a, 0x1b, 0x6e, 0x5a, 0xa0, 0x52, 0x3b, 0xd6, 0xb3, 0x29, 0xe3, 0x2f, 0x84,
    0x53, 0xd1, 0x00, 0xed, 0x20, 0xfc, 0xb1, 0x5b, 0x6a, 0xcb, 0xbe, 0x39, 0x4a, 0x4c, 0x58, 0xcf,
    0xd0, 0xef, 0xaa, 0xfb, 0x43, 0x4d, 0x33, 0x85, 0x45, 0xf9, 0x02, 0x7f, 0x50, 0x3c, 0x9f, 0xa8,
    0x51, 0xa3, 0x40, 0x8f, 0x92, 0x9d, 0x38, 0xf5, 0xbc, 0xb6, 0xda, 0x21, 0x10, 0xff, 0xf3, 0xd2,
    0xcd, 0x0c, 0x13, 0xec, 0x5f, 0x97, 0x44, 0x17, 0xc4, 0xa7, 0x7e, 0x3d, 0x64, 0x5d, 0x19, 0x73,
    0x60, 0x81, 0x4f, 0xdc, 0x22, 0x2a, 0x90, 0x88, 0x46, 0xee, 0xb8, 0x14, 0xde, 0x5e, 0x0b, 0xdb,
    0xe0, 0x32, 0x3a, 0x0a, 0x49, 0x06, 0x24, 0x5c, 0xc2, 0xd3, 0xac, 0x62, 0x91, 0x95, 0xe4, 0x79,
    0xe7, 0xc8, 0x37, 0x6d, 0x8d, 0xd5, 0x4e, 0xa9, 0x6c, 0x56, 0xf4, 0xea, 0x65, 0x7a, 0xae, 0x08,
    0xba, 0x78, 0x25, 0x2e, 0x1c, 0xa6, 0xb4, 0xc6, 0xe8, 0xdd, 0x74, 0x1f, 0x4b, 0xbd, 0x8b, 0x8a,
    0x70, 0x3e, 0xb5, 0x66, 0x48, 0x03, 0xf6, 0x0e, 0x61, 0x35, 0x57, 0xb9, 0x86, 0xc1, 0x1d, 0x9e,
    0xe1, 0xf8, 0x98, 0x11, 0x69, 0xd9, 0x8e, 0x94, 0x9b, 0x1e, 0x87, 0xe9, 0xce, 0x55, 0x28, 0xdf,
    0x8c, 0xa1, 0x89, 0x0d, 0xbf, 0xe6, 0x42, 0x68, 0x41, 0x99, 0x2d, 0x0f, 0xb0, 0x54, 0xbb, 0x16,
};
// clang-format on

namespace {

constexpr std::uint8_t RotateLeft(std::uint8_t v, int n) {
  return static_cast<std::uint8_t>((v << n) | (v >> (8 - n)));
}

// a^254 = a^-1 for nonzero a; maps 0 to 0.
std::uint8_t GfInverse(std::uint8_t a) {
  std::uint8_t result = 1;
  std::uint8_t base = a;
  for (int exponent = 254; exponent != 0; exponent >>= 1) {
    if (exponent & 1) result = GfMul(result, base);
    base = GfMul(base, base);
  }
  return a == 0 ? 0 : result;
}

}  // namespace

std::array<std::uint8_t, 256> GenerateSbox() {
  std::array<std::uint8_t, 256> table{};
  for (int x = 0; x < 256; ++x) {
    const std::uint8_t b = GfInverse(static_cast<std::uint8_t>(x));
    table[x] = b ^ RotateLeft(b, 1) ^ RotateLeft(b, 2) ^ RotateLeft(b, 3) ^
               RotateLeft(b, 4) ^ 0x63;
  }
  return table;
}

Block SubBytes(const Block& state) {
  Block out;
  for (std::size_t i = 0; i < kBlockSize; ++i) out[i] = kSbox[state[i]];
  return out;
}

Block ShiftRows(const Block& state) {
  // Row r of column c moves to column (c - r) mod 4.
  Block out;
  for (std::size_t col = 0; col < 4; ++col) {
    for (std::size_t row = 0; row < 4; ++row) {
      out[4 * col + row] = state[4 * ((col + row) % 4) + row];
    }
  }
  return out;
}

Block MixColumns(const Block& state) {
  Block out;
  for (std::size_t col = 0; col < 4; ++col) {
    const std::uint8_t* c = &state[4 * col];
    for (std::size_t row = 0; row < 4; ++row) {
      const std::uint8_t a0 = c[row];
      const std::uint8_t a1 = c[(row + 1) % 4];
      const std::uint8_t a2 = c[(row + 2) % 4];
      const std::uint8_t a3 = c[(row + 3) % 4];
      // {02}a0 + {03}a1 + a2 + a3
      out[4 * col + row] = Xtime(a0) ^ Xtime(a1) ^ a1 ^ a2 ^ a3;
    }
  }
  return out;
}

Block AddRoundKey(const Block& state, const Block& round_key) {
  return XorBlocks(state, round_key);
}

RoundKeySchedule ExpandKey(const Key128& key) {
  std::array<std::array<std::uint8_t, 4>, 4 * (kRounds + 1)> words{};
  for (std::size_t i = 0; i < 4; ++i) {
    for (std::size_t j = 0; j < 4; ++j) words[i][j] = key.bytes[4 * i + j];
  }
  std::uint8_t rcon = 0x01;
  for (std::size_t i = 4; i < words.size(); ++i) {
    std::array<std::uint8_t, 4> temp = words[i - 1];
    if (i % 4 == 0) {
      // RotWord, SubWord, Rcon.
      temp = {static_cast<std::uint8_t>(kSbox[temp[1]] ^ rcon), kSbox[temp[2]],
              kSbox[temp[3]], kSbox[temp[0]]};
      rcon = Xtime(rcon);
    }
    for (std::size_t j = 0; j < 4; ++j) words[i][j] = words[i - 4][j] ^ temp[j];
  }

  RoundKeySchedule schedule;
  for (std::size_t round = 0; round <= kRounds; ++round) {
    for (std::size_t w = 0; w < 4; ++w) {
      for (std::size_t j = 0; j < 4; ++j) {
        schedule.round_keys[round][4 * w + j] = words[4 * round + w][j];
      }
    }
  }
  return schedule;
}

Block EncryptBlock(const RoundKeySchedule& schedule, const Block& plaintext) {
  Block state = AddRoundKey(plaintext, schedule.round_keys[0]);
  for (int round = 1; round < kRounds; ++round) {
    state = AddRoundKey(MixColumns(ShiftRows(SubBytes(state))),
                        schedule.round_keys[round]);
  }
  return AddRoundKey(ShiftRows(SubBytes(state)), schedule.round_keys[kRounds]);
}

bool Aes128::AesNiAvailable() { return internal::CpuHasAesNi(); }

namespace {

Aes128::Backend Resolve(Aes128::Backend requested) {
  switch (requested) {
    case Aes128::Backend::kAuto:
      return Aes128::AesNiAvailable() ? Aes128::Backend::kAesNi
                                      : Aes128::Backend::kPortable;
    case Aes128::Backend::kAesNi:
      if (!Aes128::AesNiAvailable()) {
        throw std::runtime_error("AES-NI backend requested but unavailable");
      }
      return requested;
    case Aes128::Backend::kPortable:
      return requested;
  }
  return Aes128::Backend::kPortable;
}

}  // namespace

Aes128::Aes128(const Key128& key, Backend backend)
    : Aes128(ExpandKey(key), backend) {}

Aes128::Aes128(const RoundKeySchedule& schedule, Backend backend)
    : schedule_(schedule), backend_(Resolve(backend)) {}

Block Aes128::Encrypt(const Block& block) const {
  Block out = block;
  EncryptInPlace(out);
  return out;
}

void Aes128::EncryptInPlace(Block& block) const {
  if (backend_ == Backend::kAesNi) {
    internal::EncryptBlocksAesNi(schedule_, std::span<Block>(&block, 1));
    return;
  }
  block = EncryptBlock(schedule_, block);
}

void Aes128::EncryptLanes(std::span<Block> blocks, std::size_t) const {
  EncryptIndependent(blocks);
}

void Aes128::EncryptIndependent(std::span<Block> blocks) const {
  if (backend_ == Backend::kAesNi) {
    internal::EncryptBlocksAesNi(schedule_, blocks);
    return;
  }
  for (Block& block : blocks) block = EncryptBlock(schedule_, block);
}

const char* BackendName(Aes128::Backend backend) {
  switch (backend) {
    case Aes128::Backend::kAuto:
      return "auto";
    case Aes128::Backend::kPortable:
      return "portable";
    case Aes128::Backend::kAesNi:
      return "aesni";
  }
  return "unknown";
}

}  // namespace ccmp::aes
