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

#include "ccmp/codec.h"

#include <algorithm>

namespace ccmp {
namespace {

int HexValue(char c) {
  if (c >= '0' && c <= '9') return c - '0';
  if (c >= 'a' && c <= 'f') return c - 'a' + 10;
  if (c >= 'A' && c <= 'F') return c - 'A' + 10;
  return -1;
}

}  // namespace

std::string HexEncode(std::span<const std::uint8_t> bytes) {
  static constexpr char kDigits[] = "0123456789abcdef";
  std::string out;
  out.reserve(2 * bytes.size());
  for (std::uint8_t b : bytes) {
    out.push_back(kDigits[b >> 4]);
    out.push_back(kDigits[b & 0x0F]);
  }
  return out;
}

std::vector<std::uint8_t> HexDecode(std::string_view hex) {
  if (hex.size() % 2 != 0) {
    throw ArgumentError("hex string has odd length " +
                        std::to_string(hex.size()));
  }
  std::vector<std::uint8_t> out(hex.size() / 2);
  for (std::size_t i = 0; i < out.size(); ++i) {
    const int hi = HexValue(hex[2 * i]);
    const int lo = HexValue(hex[2 * i + 1]);
    if (hi < 0 || lo < 0) {
      throw ArgumentError("invalid hex digit near offset " +
                          std::to_string(2 * i));
    }
    out[i] = static_cast<std::uint8_t>(hi << 4 | lo);
  }
  return out;
}

std::array<std::uint8_t, kSerializedHeaderSize> SerializeHeader(
    const MpduHeader& header) {
  std::array<std::uint8_t, kSerializedHeaderSize> out{};
  out[0] = static_cast<std::uint8_t>(header.fc);
  out[1] = static_cast<std::uint8_t>(header.fc >> 8);
  std::copy(header.a1.begin(), header.a1.end(), out.begin() + 2);
  std::copy(header.a2.begin(), header.a2.end(), out.begin() + 8);
  std::copy(header.a3.begin(), header.a3.end(), out.begin() + 14);
  out[20] = static_cast<std::uint8_t>(header.sc);
  out[21] = static_cast<std::uint8_t>(header.sc >> 8);
  out[22] = header.priority;
  for (int i = 0; i < 6; ++i) {
    out[23 + i] = static_cast<std::uint8_t>(header.pn >> (8 * (5 - i)));
  }
  return out;
}

MpduHeader ParseHeader(std::span<const std::uint8_t> bytes) {
  if (bytes.size() != kSerializedHeaderSize) {
    throw ArgumentError("serialized header must be " +
                        std::to_string(kSerializedHeaderSize) +
                        " bytes, got " + std::to_string(bytes.size()));
  }
  MpduHeader header;
  header.fc = static_cast<std::uint16_t>(bytes[0] | bytes[1] << 8);
  std::copy_n(bytes.begin() + 2, 6, header.a1.begin());
  std::copy_n(bytes.begin() + 8, 6, header.a2.begin());
  std::copy_n(bytes.begin() + 14, 6, header.a3.begin());
  header.sc = static_cast<std::uint16_t>(bytes[20] | bytes[21] << 8);
  header.priority = bytes[22];
  for (int i = 0; i < 6; ++i) header.pn = header.pn << 8 | bytes[23 + i];
  header.Validate();
  return header;
}

}  // namespace ccmp
