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

#ifndef CCMP_COUNTING_CIPHER_H_
#define CCMP_COUNTING_CIPHER_H_

#include <algorithm>
#include <array>
#include <atomic>
#include <cstddef>
#include <cstdint>
#include <span>

#include "ccmp/aes.h"
#include "ccmp/block.h"

namespace ccmp {

// Wraps a cipher and counts block-cipher invocations by dependency class.
//
// Calls through Encrypt() form one sequential chain. Calls through
// EncryptLanes() are attributed to their lane; lanes are mutually
// independent, so the critical path is the sequential count plus the
// longest lane. EncryptIndependent() calls have no dependency at all and
// only add to the total.
//
// Counters are atomic so lane workers on different threads may share one
// instance.
template <aes::BlockCipher Inner>
class CountingCipher {
 public:
  static constexpr std::size_t kMaxLanes = 16;

  explicit CountingCipher(const Inner& inner) : inner_(inner) {}

  Block Encrypt(const Block& block) const {
    sequential_.fetch_add(1, std::memory_order_relaxed);
    return inner_.Encrypt(block);
  }

  void EncryptInPlace(Block& block) const {
    sequential_.fetch_add(1, std::memory_order_relaxed);
    inner_.EncryptInPlace(block);
  }

  void EncryptLanes(std::span<Block> blocks, std::size_t first_lane) const {
    for (std::size_t i = 0; i < blocks.size(); ++i) {
      lanes_[first_lane + i].fetch_add(1, std::memory_order_relaxed);
    }
    inner_.EncryptLanes(blocks, first_lane);
  }

  void EncryptIndependent(std::span<Block> blocks) const {
    independent_.fetch_add(blocks.size(), std::memory_order_relaxed);
    inner_.EncryptIndependent(blocks);
  }

  std::uint64_t sequential_calls() const { return sequential_.load(); }
  std::uint64_t lane_calls(std::size_t lane) const {
    return lanes_[lane].load();
  }
  std::uint64_t independent_calls() const { return independent_.load(); }

  std::uint64_t total_calls() const {
    std::uint64_t total = sequential_.load() + independent_.load();
    for (const auto& lane : lanes_) total += lane.load();
    return total;
  }

  // Longest chain of dependent chaining calls: the sequential chain plus the
  // longest lane. Independent calls are excluded.
  std::uint64_t critical_path_calls() const {
    std::uint64_t longest_lane = 0;
    for (const auto& lane : lanes_) {
      longest_lane = std::max<std::uint64_t>(longest_lane, lane.load());
    }
    return sequential_.load() + longest_lane;
  }

  void Reset() {
    sequential_ = 0;
    independent_ = 0;
    for (auto& lane : lanes_) lane = 0;
  }

 private:
  const Inner& inner_;
  mutable std::atomic<std::uint64_t> sequential_{0};
  mutable std::atomic<std::uint64_t> independent_{0};
  mutable std::array<std::atomic<std::uint64_t>, kMaxLanes> lanes_{};
};

}  // namespace ccmp

#endif  // CCMP_COUNTING_CIPHER_H_
