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

#ifndef CCMP_BLOCK_H_
#define CCMP_BLOCK_H_

#include <algorithm>
#include <array>
#include <cstddef>
#include <cstdint>
#include <cstring>
#include <span>
#include <stdexcept>

namespace ccmp {

inline constexpr std::size_t kBlockSize = 16;

// A 16-byte cipher block. Interpreted as the AES state, byte i sits at row
// i % 4, column i / 4.
using Block = std::array<std::uint8_t, kBlockSize>;

// AES-128 cipher key.
struct Key128 {
  std::array<std::uint8_t, 16> bytes{};

  friend bool operator==(const Key128&, const Key128&) = default;
};

// Truncated CBC-MAC output carried in every frame.
inline constexpr std::size_t kMicSize = 8;
using MicTag = std::array<std::uint8_t, kMicSize>;

// dst ^= 16 bytes at src, as two 64-bit words.
inline void XorBytesInto(Block& dst, const std::uint8_t* src) {
#if defined(__GNUC__) || defined(__clang__)
  // One 16-byte store, so a following 16-byte load of dst is forwarded.
  using Vec = std::uint64_t __attribute__((vector_size(16)));
  Vec d, s;
  std::memcpy(&d, dst.data(), kBlockSize);
  std::memcpy(&s, src, kBlockSize);
  d ^= s;
  std::memcpy(dst.data(), &d, kBlockSize);
#else
  std::uint64_t d[2], s[2];
  std::memcpy(d, dst.data(), kBlockSize);
  std::memcpy(s, src, kBlockSize);
  d[0] ^= s[0];
  d[1] ^= s[1];
  std::memcpy(dst.data(), d, kBlockSize);
#endif
}

inline void XorInto(Block& dst, const Block& src) {
  XorBytesInto(dst, src.data());
}

inline Block XorBlocks(const Block& a, const Block& b) {
  Block out = a;
  XorInto(out, b);
  return out;
}

// Number of 16-byte blocks covering `length` bytes.
inline constexpr std::size_t BlockCount(std::size_t length) {
  return (length + kBlockSize - 1) / kBlockSize;
}

// Block `index` of `data`, zero-padded when it runs past the end.
inline Block LoadPaddedBlock(std::span<const std::uint8_t> data,
                             std::size_t index) {
  Block block{};
  const std::size_t offset = index * kBlockSize;
  const std::size_t n = std::min(kBlockSize, data.size() - offset);
  std::copy_n(data.begin() + static_cast<std::ptrdiff_t>(offset), n,
              block.begin());
  return block;
}

// dst ^= block `index` of `data`, zero-padded.
inline void XorPayloadBlock(Block& dst, std::span<const std::uint8_t> data,
                            std::size_t index) {
  const std::size_t offset = index * kBlockSize;
  if (offset + kBlockSize <= data.size()) {
    XorBytesInto(dst, data.data() + offset);
  } else {
    XorInto(dst, LoadPaddedBlock(data, index));
  }
}

inline MicTag TruncateToMic(const Block& block) {
  MicTag mic;
  std::copy_n(block.begin(), kMicSize, mic.begin());
  return mic;
}

// Error taxonomy. Callers can catch the std base classes.
class LengthError : public std::length_error {
 public:
  using std::length_error::length_error;
};

class RangeError : public std::out_of_range {
 public:
  using std::out_of_range::out_of_range;
};

class ArgumentError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

}  // namespace ccmp

#endif  // CCMP_BLOCK_H_
