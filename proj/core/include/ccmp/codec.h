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

#ifndef CCMP_CODEC_H_
#define CCMP_CODEC_H_

// Text and byte encodings used by the command-line tool.
//
// Serialized header, 29 octets:
//
//   offset  size  field
//   0       2     fc, little-endian (on-air order)
//   2       6     a1
//   8       6     a2
//   14      6     a3
//   20      2     sc, little-endian (on-air order)
//   22      1     priority
//   23      6     pn, big-endian

#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "ccmp/block.h"
#include "ccmp/ccmp.h"

namespace ccmp {

inline constexpr std::size_t kSerializedHeaderSize = 29;

// Lowercase hex.
std::string HexEncode(std::span<const std::uint8_t> bytes);

// Case-insensitive. Throws ArgumentError on odd length or a non-hex digit.
std::vector<std::uint8_t> HexDecode(std::string_view hex);

std::array<std::uint8_t, kSerializedHeaderSize> SerializeHeader(
    const MpduHeader& header);

// Throws ArgumentError on a wrong size and RangeError on priority > 15.
MpduHeader ParseHeader(std::span<const std::uint8_t> bytes);

}  // namespace ccmp

#endif  // CCMP_CODEC_H_
