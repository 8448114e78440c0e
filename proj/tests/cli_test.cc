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

#include "cli.h"

#include <gtest/gtest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

#include "ccmp/bench.h"
#include "ccmp/codec.h"
#include "test_util.h"

namespace ccmp::cli {
namespace {

struct Result {
  int code;
  std::string out;
  std::string err;
};

Result Invoke(const std::vector<std::string>& args) {
  std::ostringstream out, err;
  const int code = Run(args, out, err);
  return {code, out.str(), err.str()};
}

std::vector<std::string> Lines(const std::string& text) {
  std::vector<std::string> lines;
  std::istringstream in(text);
  for (std::string line; std::getline(in, line);) lines.push_back(line);
  return lines;
}

const std::string kZeroKey(32, '0');
const std::string kZeroHeader(2 * kSerializedHeaderSize, '0');

TEST(CliTest, SelftestPasses) {
  const Result r = Invoke({"selftest"});
  EXPECT_EQ(r.code, kExitOk) << r.out << r.err;
  const std::vector<std::string> lines = Lines(r.out);
  EXPECT_GE(lines.size(), 3u);
  for (const std::string& line : lines) {
    EXPECT_EQ(line.rfind("PASS", 0), 0u) << line;
  }
}

TEST(CliTest, EncryptEmptyPayload) {
  const Result r = Invoke({"encrypt", "--key", kZeroKey, "--header",
                           kZeroHeader, "--payload", ""});
  ASSERT_EQ(r.code, kExitOk) << r.err;
  const std::vector<std::string> lines = Lines(r.out);
  ASSERT_EQ(lines.size(), 2u);
  EXPECT_EQ(lines[0], "");
  EXPECT_EQ(lines[1].size(), 16u);
}

TEST(CliTest, GoldenFrame) {
  const Mpdu golden = testing::GoldenFrame();
  const std::string header = HexEncode(SerializeHeader(golden.header));
  const Result r = Invoke({"encrypt", "--key",
                           "c97c1f67ce371185514a8a19f2bdd52f", "--header",
                           header, "--payload",
                           "f8ba1a55d02f85ae967bb62fb6cda8eb7e78a050"});
  ASSERT_EQ(r.code, kExitOk) << r.err;
  EXPECT_EQ(r.out,
            "f3d0a2fe9a3dbf2342a643e43246e80c3c04d019\n7845ce0b16f97623\n");
}

TEST(CliTest, RoundTripAndTamper) {
  const std::string key = "000102030405060708090a0b0c0d0e0f";
  const std::string payload = "00112233445566778899aabbccddeeff0102030405";
  for (const char* lanes : {"1", "2", "4"}) {
    const Result enc = Invoke({"encrypt", "--key", key, "--header",
                               kZeroHeader, "--payload", payload, "--lanes",
                               lanes});
    ASSERT_EQ(enc.code, kExitOk) << enc.err;
    const std::vector<std::string> ct = Lines(enc.out);
    ASSERT_EQ(ct.size(), 2u);

    const Result dec = Invoke({"decrypt", "--key", key, "--header",
                               kZeroHeader, "--ciphertext", ct[0], "--mic",
                               ct[1], "--lanes", lanes});
    EXPECT_EQ(dec.code, kExitOk) << dec.err;
    EXPECT_EQ(dec.out, payload + "\n");

    std::string bad = ct[0];
    bad[0] = bad[0] == '0' ? '1' : '0';
    const Result tampered = Invoke({"decrypt", "--key", key, "--header",
                                    kZeroHeader, "--ciphertext", bad, "--mic",
                                    ct[1], "--lanes", lanes});
    EXPECT_EQ(tampered.code, kExitAuthFailure);
    EXPECT_EQ(tampered.out, "AUTH-FAIL\n");
  }
}

TEST(CliTest, WrongLaneCountFailsAuthentication) {
  // Eight blocks, so every lane of either configuration absorbs data.
  const Result enc = Invoke({"encrypt", "--key", kZeroKey, "--header",
                             kZeroHeader, "--payload", std::string(256, 'a'),
                             "--lanes", "2"});
  ASSERT_EQ(enc.code, kExitOk);
  const std::vector<std::string> ct = Lines(enc.out);
  const Result dec = Invoke({"decrypt", "--key", kZeroKey, "--header",
                             kZeroHeader, "--ciphertext", ct[0], "--mic",
                             ct[1], "--lanes", "3"});
  EXPECT_EQ(dec.code, kExitAuthFailure);
}

TEST(CliTest, MicMatchesSequentialOracle) {
  const Result r = Invoke({"mic", "--key", kZeroKey, "--header", kZeroHeader,
                           "--payload", "000102030405060708090a0b0c0d0e0f"});
  ASSERT_EQ(r.code, kExitOk) << r.err;
  EXPECT_EQ(r.out, "c3990a1bd5aced92\n");
}

TEST(CliTest, MalformedInputNamesTheFlag) {
  struct Case {
    std::vector<std::string> args;
    std::string flag;
  };
  const std::vector<Case> cases = {
      {{"encrypt", "--key", "zz", "--header", kZeroHeader, "--payload", ""},
       "--key"},
      {{"encrypt", "--key", "00", "--header", kZeroHeader, "--payload", ""},
       "--key"},
      {{"encrypt", "--key", kZeroKey, "--header", "0011", "--payload", ""},
       "--header"},
      {{"encrypt", "--key", kZeroKey, "--header", kZeroHeader, "--payload",
        "abc"},
       "--payload"},
      {{"decrypt", "--key", kZeroKey, "--header", kZeroHeader, "--ciphertext",
        "", "--mic", "00"},
       "--mic"},
      {{"encrypt", "--key", kZeroKey, "--header", kZeroHeader, "--payload", "",
        "--lanes", "17"},
       "lanes"},
  };
  for (const Case& c : cases) {
    const Result r = Invoke(c.args);
    EXPECT_EQ(r.code, kExitUsage) << c.flag;
    EXPECT_NE(r.err.find(c.flag), std::string::npos) << r.err;
  }
  EXPECT_EQ(Invoke({"encrypt"}).code, kExitUsage);
  EXPECT_EQ(Invoke({"nonsense"}).code, kExitUsage);
}

TEST(CliTest, OversizePayloadRejected) {
  const Result r = Invoke({"encrypt", "--key", kZeroKey, "--header",
                           kZeroHeader, "--payload", std::string(2 * 2297, '0')});
  EXPECT_EQ(r.code, kExitUsage);
}

TEST(CliTest, BenchWritesCsvFiles) {
  const std::filesystem::path dir =
      std::filesystem::temp_directory_path() / "ccmp_cli_bench_test";
  std::filesystem::create_directories(dir);
  const std::filesystem::path csv = dir / "records.csv";
  const Result r = Invoke({"bench", "--sizes", "16", "64", "--reps", "10",
                           "--csv", csv.string()});
  ASSERT_EQ(r.code, kExitOk) << r.err;

  std::ifstream in(csv);
  std::string header;
  std::getline(in, header);
  EXPECT_EQ(header, bench::kRecordCsvHeader);
  in.seekg(0);
  EXPECT_EQ(bench::ReadRecordsCsv(in).size(), 4u);
  EXPECT_TRUE(std::filesystem::exists(dir / "records_compare.csv"));

  const Result cmp = Invoke({"compare", "--csv", csv.string()});
  EXPECT_EQ(cmp.code, kExitOk) << cmp.err;
  EXPECT_EQ(cmp.out.rfind(bench::kComparisonCsvHeader, 0), 0u);
  std::filesystem::remove_all(dir);
}

TEST(CliTest, BenchUnwritablePath) {
  const Result r = Invoke({"bench", "--sizes", "16", "--reps", "2", "--csv",
                           "/nonexistent-dir/x/records.csv"});
  EXPECT_EQ(r.code, kExitUsage);
  EXPECT_FALSE(r.err.empty());
}

}  // namespace
}  // namespace ccmp::cli
