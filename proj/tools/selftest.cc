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

// Built-in known-answer vectors.

#include <functional>
#include <ostream>
#include <random>
#include <string>
#include <vector>

#include "ccmp/aes.h"
#include "ccmp/ccmp.h"
#include "ccmp/codec.h"
#include "ccmp/icbc.h"
#include "cli.h"

namespace ccmp::cli {
namespace {

Block BlockFromHex(const std::string& hex) {
  const std::vector<std::uint8_t> bytes = HexDecode(hex);
  Block block{};
  std::copy(bytes.begin(), bytes.end(), block.begin());
  return block;
}

Key128 KeyFromHex(const std::string& hex) {
  Key128 key;
  key.bytes = BlockFromHex(hex);
  return key;
}

// Returns an empty string on success, otherwise a mismatch description.
using Check = std::function<std::string()>;

std::string Expect(const std::string& what, std::span<const std::uint8_t> got,
                   const std::string& expected_hex) {
  const std::string got_hex = HexEncode(got);
  if (got_hex == expected_hex) return {};
  return what + ": expected " + expected_hex + ", got " + got_hex;
}

std::string CheckSbox() {
  const auto generated = aes::GenerateSbox();
  for (std::size_t i = 0; i < generated.size(); ++i) {
    if (generated[i] != aes::kSbox[i]) {
      return "S-box entry " + std::to_string(i) + ": table " +
             std::to_string(aes::kSbox[i]) + ", generated " +
             std::to_string(generated[i]);
    }
  }
  return {};
}

std::string CheckFips197() {
  const Key128 b_key = KeyFromHex("2b7e151628aed2a6abf7158809cf4f3c");
  const aes::RoundKeySchedule schedule = aes::ExpandKey(b_key);
  std::string r = Expect("round key 1", schedule.round_keys[1],
                         "a0fafe1788542cb123a339392a6c7605");
  if (r.empty()) {
    r = Expect("round key 10", schedule.round_keys[10],
               "d014f9a8c9ee2589e13f0cc8b6630ca6");
  }
  if (r.empty()) {
    r = Expect("cipher example",
               aes::EncryptBlock(schedule,
                                 BlockFromHex("3243f6a8885a308d313198a2e0370734")),
               "3925841d02dc09fbdc118597196a0b32");
  }
  if (r.empty()) {
    r = Expect("AES-128 example",
               aes::EncryptBlock(
                   aes::ExpandKey(KeyFromHex("000102030405060708090a0b0c0d0e0f")),
                   BlockFromHex("00112233445566778899aabbccddeeff")),
               "69c4e0d86a7b0430d8cdb78070b4c55a");
  }
  return r;
}

std::string CheckBackends() {
  if (!aes::Aes128::AesNiAvailable()) return {};
  std::mt19937_64 rng(1);
  for (int trial = 0; trial < 64; ++trial) {
    Key128 key;
    Block block;
    for (auto& b : key.bytes) b = static_cast<std::uint8_t>(rng());
    for (auto& b : block) b = static_cast<std::uint8_t>(rng());
    const aes::Aes128 portable(key, aes::Aes128::Backend::kPortable);
    const aes::Aes128 accelerated(key, aes::Aes128::Backend::kAesNi);
    if (portable.Encrypt(block) != accelerated.Encrypt(block)) {
      return "aesni and portable disagree on trial " + std::to_string(trial);
    }
  }
  return {};
}

std::string CheckCcmpGolden() {
  // 802.11 CCMP test frame.
  Mpdu mpdu;
  mpdu.header = ParseHeader(HexDecode(
      "08480fd2e128a57c5030f1844408abaea5b8fcba803300b5039776e70c"));
  mpdu.payload = HexDecode("f8ba1a55d02f85ae967bb62fb6cda8eb7e78a050");
  const ProtectedMpdu frame = CcmpEncrypt(
      KeyFromHex("c97c1f67ce371185514a8a19f2bdd52f"), mpdu,
      MicEngine::Sequential());
  std::string r = Expect("ciphertext", frame.ciphertext,
                         "f3d0a2fe9a3dbf2342a643e43246e80c3c04d019");
  if (r.empty()) {
    r = Expect("encrypted MIC", frame.encrypted_mic, "7845ce0b16f97623");
  }
  return r;
}

std::string CheckSingleLaneEquivalence() {
  std::mt19937_64 rng(7);
  Key128 key;
  for (auto& b : key.bytes) b = static_cast<std::uint8_t>(rng());
  const aes::Aes128 cipher(key);
  MpduHeader header;
  header.pn = rng() & kMaxPacketNumber;
  for (std::size_t len = 0; len <= 64; ++len) {
    std::vector<std::uint8_t> payload(len);
    for (auto& b : payload) b = static_cast<std::uint8_t>(rng());
    const Block b0 = ConstructMicIv(header, len);
    const Block aad1 = ConstructMicHeader1(header);
    const Block aad2 = ConstructMicHeader2(header);
    if (CalculateMic(cipher, b0, aad1, aad2, payload) !=
        icbc::InterleavedCbcMac(cipher, b0, aad1, aad2, payload, {1, 1})) {
      return "N=1 MIC differs from CBC-MAC at payload length " +
             std::to_string(len);
    }
  }
  return {};
}

}  // namespace

bool RunSelftest(std::ostream& out) {
  const std::vector<std::pair<std::string, Check>> groups = {
      {"aes-sbox", CheckSbox},
      {"aes-fips197", CheckFips197},
      {"aes-backends", CheckBackends},
      {"ccmp-golden", CheckCcmpGolden},
      {"icbc-single-lane", CheckSingleLaneEquivalence},
  };
  bool all_pass = true;
  for (const auto& [name, check] : groups) {
    std::string failure;
    try {
      failure = check();
    } catch (const std::exception& e) {
      failure = std::string("exception: ") + e.what();
    }
    if (failure.empty()) {
      out << "PASS " << name << '\n';
    } else {
      out << "FAIL " << name << ": " << failure << '\n';
      all_pass = false;
    }
  }
  return all_pass;
}

}  // namespace ccmp::cli
