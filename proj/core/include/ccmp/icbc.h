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

#ifndef CCMP_ICBC_H_
#define CCMP_ICBC_H_

// N-way interleaved CBC-MAC.
//
// After the shared three-block prefix (B0 and the two AAD blocks), payload
// block j joins lane j mod N. Each lane runs its own CBC chain from a start
// state derived from the prefix, and the lane results are XORed into one
// 16-byte tag before truncation to the MIC. With N = 1 the construction is
// exactly the CCMP CBC-MAC.
//
// The mode is not interoperable with standard CCMP peers for N >= 2, and no
// claim is made about the forgery resistance of the XOR merge.

#include <algorithm>
#include <array>
#include <cstddef>
#include <cstdint>
#include <span>
#include <thread>
#include <vector>

#include "ccmp/aes.h"
#include "ccmp/block.h"

namespace ccmp::icbc {

inline constexpr std::size_t kMaxLanes = 16;

// Below this many payload blocks lanes always run on the calling thread.
inline constexpr std::size_t kConcurrencyThreshold = 64;

struct IcbcConfig {
  std::size_t lanes = 2;
  // Upper bound on concurrent lane executors.
  std::size_t workers = 1;

  // Throws RangeError unless 1 <= lanes <= 16 and 1 <= workers <= lanes.
  void Validate() const;

  friend bool operator==(const IcbcConfig&, const IcbcConfig&) = default;
};

struct LaneState {
  std::size_t index = 0;
  Block chain{};
};

// E(E(E(b0) ^ aad1) ^ aad2).
template <aes::BlockCipher Cipher>
Block PrefixChain(const Cipher& cipher, const Block& b0, const Block& aad1,
                  const Block& aad2) {
  Block x = b0;
  cipher.EncryptInPlace(x);
  XorInto(x, aad1);
  cipher.EncryptInPlace(x);
  XorInto(x, aad2);
  cipher.EncryptInPlace(x);
  return x;
}

// Start chain of lane k: the prefix with its last byte XORed with k.
inline Block LaneStartChain(const Block& prefix, std::size_t k) {
  Block chain = prefix;
  chain[kBlockSize - 1] ^= static_cast<std::uint8_t>(k);
  return chain;
}

// Start states of lanes 0..n-1. Throws RangeError unless 1 <= n <= 16.
std::vector<LaneState> DeriveLaneStates(const Block& prefix, std::size_t n);

// Bytewise XOR fold. Throws ArgumentError on an empty sequence.
Block MergeTags(std::span<const Block> tags);

// Sequential cipher calls on the longest dependency chain of an N-lane MIC
// over m payload blocks: 3 + ceil(m / n), or 3 when m = 0.
std::uint64_t CriticalPathCipherCalls(std::uint64_t m, std::size_t n);

// Executors actually used for a MIC over `payload_blocks` blocks: 1 below
// the concurrency threshold or for a single lane, otherwise `workers`
// capped by the hardware thread count.
std::size_t EffectiveWorkers(const IcbcConfig& config,
                             std::size_t payload_blocks);

namespace internal {

// Runs lanes [first, last) in lockstep: at every step each still-active lane
// absorbs its next block and the whole group goes through one EncryptLanes
// call. Lanes that are active at a step always form a prefix of the lane
// range, because block j belongs to lane j mod N.
template <aes::BlockCipher Cipher>
void RunLaneGroup(const Cipher& cipher, std::span<const std::uint8_t> payload,
                  std::size_t lanes, std::size_t first, std::size_t last,
                  std::span<Block> chains) {
  const std::size_t m = BlockCount(payload.size());
  for (std::size_t base = 0; base < m; base += lanes) {
    const std::size_t end = std::min(last, m - base);
    if (end <= first) break;
    for (std::size_t k = first; k < end; ++k) {
      XorPayloadBlock(chains[k], payload, base + k);
    }
    cipher.EncryptLanes(chains.subspan(first, end - first), first);
  }
}

}  // namespace internal

// Full 16-byte merged tag from a given prefix, running the lanes on exactly
// `executors` executors (the caller plus executors - 1 threads). The result
// does not depend on `executors`.
template <aes::BlockCipher Cipher>
Block InterleavedTag(const Cipher& cipher, const Block& prefix,
                     std::span<const std::uint8_t> payload, std::size_t lanes,
                     std::size_t executors) {
  IcbcConfig{lanes, executors}.Validate();
  const std::size_t m = BlockCount(payload.size());
  if (m == 0) return prefix;

  std::array<Block, kMaxLanes> storage;
  const std::span<Block> chains = std::span<Block>(storage).first(lanes);
  for (std::size_t k = 0; k < lanes; ++k) {
    chains[k] = LaneStartChain(prefix, k);
  }

  if (executors == 1) {
    internal::RunLaneGroup(cipher, payload, lanes, 0, lanes, chains);
  } else {
    std::vector<std::jthread> threads;
    threads.reserve(executors - 1);
    for (std::size_t e = 1; e < executors; ++e) {
      const std::size_t first = e * lanes / executors;
      const std::size_t last = (e + 1) * lanes / executors;
      threads.emplace_back([&cipher, payload, lanes, first, last, chains] {
        internal::RunLaneGroup(cipher, payload, lanes, first, last, chains);
      });
    }
    internal::RunLaneGroup(cipher, payload, lanes, 0, lanes / executors,
                           chains);
    threads.clear();  // joins
  }

  // Lanes that received no block contribute the zero block.
  return MergeTags(chains.first(std::min(m, lanes)));
}

// MIC over B0, the two AAD blocks and the payload with the given lane
// configuration. With no payload blocks the prefix itself is truncated.
template <aes::BlockCipher Cipher>
MicTag InterleavedCbcMac(const Cipher& cipher, const Block& b0,
                         const Block& aad1, const Block& aad2,
                         std::span<const std::uint8_t> payload,
                         const IcbcConfig& config) {
  config.Validate();
  const Block prefix = PrefixChain(cipher, b0, aad1, aad2);
  const std::size_t executors =
      EffectiveWorkers(config, BlockCount(payload.size()));
  return TruncateToMic(
      InterleavedTag(cipher, prefix, payload, config.lanes, executors));
}

}  // namespace ccmp::icbc

#endif  // CCMP_ICBC_H_
