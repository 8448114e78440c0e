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

#ifndef CCMP_TESTS_REFERENCE_CHAIN_H_
#define CCMP_TESTS_REFERENCE_CHAIN_H_

// Straight-line reference computations for the MIC and keystream. They use
// only the single-block reference cipher and spell out every link, sharing
// none of the chaining, padding or lane code under test.

#include <cstdint>
#include <span>
#include <vector>

#include "ccmp/aes.h"
#include "ccmp/block.h"

namespace ccmp::testing {

inline Block RefXor(const Block& a, const Block& b) {
  Block out;
  for (int i = 0; i < 16; ++i) out[i] = a[i] ^ b[i];
  return out;
}

inline std::vector<Block> RefSplitPadded(std::span<const std::uint8_t> data) {
  std::vector<Block> blocks;
  for (std::size_t off = 0; off < data.size(); off += 16) {
    Block b{};
    for (std::size_t i = 0; i < 16 && off + i < data.size(); ++i) {
      b[i] = data[off + i];
    }
    blocks.push_back(b);
  }
  return blocks;
}

// Full 16-byte CBC-MAC state over B0, AAD1, AAD2 and the payload.
inline Block RefCbcMacState(const aes::RoundKeySchedule& ks, const Block& b0,
                            const Block& aad1, const Block& aad2,
                            std::span<const std::uint8_t> payload) {
  Block x = aes::EncryptBlock(ks, b0);
  x = aes::EncryptBlock(ks, RefXor(x, aad1));
  x = aes::EncryptBlock(ks, RefXor(x, aad2));
  for (const Block& p : RefSplitPadded(payload)) {
    x = aes::EncryptBlock(ks, RefXor(x, p));
  }
  return x;
}

// Two-lane interleaved MIC state: lane 0 takes even blocks, lane 1 odd
// blocks; lane 1 starts from the prefix with its last byte flipped by 1.
inline Block RefTwoLaneState(const aes::RoundKeySchedule& ks, const Block& b0,
                             const Block& aad1, const Block& aad2,
                             std::span<const std::uint8_t> payload) {
  Block p = aes::EncryptBlock(ks, b0);
  p = aes::EncryptBlock(ks, RefXor(p, aad1));
  p = aes::EncryptBlock(ks, RefXor(p, aad2));
  const std::vector<Block> blocks = RefSplitPadded(payload);
  if (blocks.empty()) return p;
  Block lane0 = p;
  Block lane1 = p;
  lane1[15] ^= 0x01;
  bool lane1_used = false;
  for (std::size_t j = 0; j < blocks.size(); ++j) {
    if (j % 2 == 0) {
      lane0 = aes::EncryptBlock(ks, RefXor(lane0, blocks[j]));
    } else {
      lane1 = aes::EncryptBlock(ks, RefXor(lane1, blocks[j]));
      lane1_used = true;
    }
  }
  return lane1_used ? RefXor(lane0, lane1) : lane0;
}

// Keystream block for counter value `counter` given the counter-0 preload.
inline Block RefKeystream(const aes::RoundKeySchedule& ks, Block preload,
                          std::uint16_t counter) {
  preload[14] = static_cast<std::uint8_t>(counter >> 8);
  preload[15] = static_cast<std::uint8_t>(counter);
  return aes::EncryptBlock(ks, preload);
}

}  // namespace ccmp::testing

#endif  // CCMP_TESTS_REFERENCE_CHAIN_H_
