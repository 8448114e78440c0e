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

#include "ccmp/icbc.h"

#include <string>

namespace ccmp::icbc {

void IcbcConfig::Validate() const {
  if (lanes < 1 || lanes > kMaxLanes) {
    throw RangeError("lanes must be in [1, 16], got " + std::to_string(lanes));
  }
  if (workers < 1 || workers > lanes) {
    throw RangeError("workers must be in [1, lanes], got " +
                     std::to_string(workers));
  }
}

std::vector<LaneState> DeriveLaneStates(const Block& prefix, std::size_t n) {
  if (n < 1 || n > kMaxLanes) {
    throw RangeError("lane count must be in [1, 16], got " + std::to_string(n));
  }
  std::vector<LaneState> states(n);
  for (std::size_t k = 0; k < n; ++k) {
    states[k].index = k;
    states[k].chain = LaneStartChain(prefix, k);
  }
  return states;
}

Block MergeTags(std::span<const Block> tags) {
  if (tags.empty()) throw ArgumentError("MergeTags needs at least one tag");
  Block merged{};
  for (const Block& tag : tags) XorInto(merged, tag);
  return merged;
}

std::uint64_t CriticalPathCipherCalls(std::uint64_t m, std::size_t n) {
  if (n < 1 || n > kMaxLanes) {
    throw RangeError("lane count must be in [1, 16], got " + std::to_string(n));
  }
  return 3 + (m + n - 1) / n;
}

std::size_t EffectiveWorkers(const IcbcConfig& config,
                             std::size_t payload_blocks) {
  config.Validate();
  if (config.lanes == 1 || config.workers == 1 ||
      payload_blocks < kConcurrencyThreshold) {
    return 1;
  }
  // hardware_concurrency() reads sysfs on every call.
  static const std::size_t hardware =
      std::max<std::size_t>(1, std::thread::hardware_concurrency());
  return std::min(config.workers, hardware);
}

}  // namespace ccmp::icbc
