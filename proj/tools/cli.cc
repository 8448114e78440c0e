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

#include <CLI11.hpp>

#include <fstream>
#include <iomanip>
#include <iostream>
#include <optional>
#include <sstream>

#include "ccmp/bench.h"
#include "ccmp/ccmp.h"
#include "ccmp/codec.h"

namespace ccmp::cli {
namespace {

// An input error tied to the flag that caused it.
class UsageError : public std::runtime_error {
 public:
  UsageError(const std::string& flag, const std::string& what)
      : std::runtime_error(flag + ": " + what) {}
};

std::vector<std::uint8_t> DecodeFlag(const std::string& flag,
                                     const std::string& hex,
                                     std::optional<std::size_t> exact_bytes) {
  std::vector<std::uint8_t> bytes;
  try {
    bytes = HexDecode(hex);
  } catch (const ArgumentError& e) {
    throw UsageError(flag, e.what());
  }
  if (exact_bytes && bytes.size() != *exact_bytes) {
    throw UsageError(flag, "expected " + std::to_string(2 * *exact_bytes) +
                               " hex chars, got " + std::to_string(hex.size()));
  }
  return bytes;
}

Key128 ParseKey(const std::string& hex) {
  const std::vector<std::uint8_t> bytes = DecodeFlag("--key", hex, 16);
  Key128 key;
  std::copy(bytes.begin(), bytes.end(), key.bytes.begin());
  return key;
}

MpduHeader ParseHeaderFlag(const std::string& hex) {
  const std::vector<std::uint8_t> bytes =
      DecodeFlag("--header", hex, kSerializedHeaderSize);
  try {
    return ParseHeader(bytes);
  } catch (const std::exception& e) {
    throw UsageError("--header", e.what());
  }
}

std::vector<std::uint8_t> ParsePayloadFlag(const std::string& flag,
                                           const std::string& hex) {
  std::vector<std::uint8_t> bytes = DecodeFlag(flag, hex, std::nullopt);
  if (bytes.size() > kMaxPayload) {
    throw UsageError(flag, "payload of " + std::to_string(bytes.size()) +
                               " bytes exceeds " + std::to_string(kMaxPayload));
  }
  return bytes;
}

struct EngineFlags {
  std::size_t lanes = 1;
  std::optional<std::size_t> workers;

  MicEngine Engine() const {
    const icbc::IcbcConfig config{lanes, workers.value_or(lanes)};
    try {
      config.Validate();
    } catch (const RangeError& e) {
      throw UsageError(workers && lanes >= 1 && lanes <= icbc::kMaxLanes
                           ? "--workers"
                           : "--lanes",
                       e.what());
    }
    return lanes == 1 ? MicEngine::Sequential()
                      : MicEngine::Interleaved(config);
  }
};

void AddEngineFlags(CLI::App& cmd, EngineFlags& flags) {
  cmd.add_option("--lanes", flags.lanes, "Interleaved CBC-MAC lanes (1..16)")
      ->capture_default_str();
  cmd.add_option("--workers", flags.workers,
                 "Concurrent lane executors (1..lanes, default = lanes)");
}

std::string CompareCsvPath(const std::string& path) {
  const std::string suffix = ".csv";
  if (path.size() > suffix.size() &&
      path.compare(path.size() - suffix.size(), suffix.size(), suffix) == 0) {
    return path.substr(0, path.size() - suffix.size()) + "_compare.csv";
  }
  return path + "_compare.csv";
}

void PrintFits(std::ostream& out, const bench::ComparisonReport& report) {
  out << "engine,slope_ns_per_byte,intercept_ns,r_squared\n";
  const auto row = [&out](const char* name, const bench::LinearFit& fit) {
    out << name << ',' << fit.slope << ',' << fit.intercept << ','
        << fit.r_squared << '\n';
  };
  row("sequential", report.baseline_fit);
  row("icbc", report.optimized_fit);
}

}  // namespace

int Run(const std::vector<std::string>& args, std::ostream& out,
        std::ostream& err) {
  CLI::App app{"AES-CCMP frame protection with interleaved CBC-MAC", "ccmp"};
  app.require_subcommand(1);

  CLI::App* selftest = app.add_subcommand("selftest", "Run built-in vectors");

  std::string key_hex, header_hex, payload_hex, ciphertext_hex, mic_hex;
  EngineFlags encrypt_engine, decrypt_engine, mic_engine;

  CLI::App* encrypt = app.add_subcommand("encrypt", "Protect one frame");
  encrypt->add_option("--key", key_hex, "32 hex chars")->required();
  encrypt->add_option("--header", header_hex, "58 hex chars")->required();
  encrypt->add_option("--payload", payload_hex, "hex, up to 2296 bytes")
      ->required();
  AddEngineFlags(*encrypt, encrypt_engine);

  CLI::App* decrypt = app.add_subcommand("decrypt", "Verify and open a frame");
  decrypt->add_option("--key", key_hex, "32 hex chars")->required();
  decrypt->add_option("--header", header_hex, "58 hex chars")->required();
  decrypt->add_option("--ciphertext", ciphertext_hex, "hex")->required();
  decrypt->add_option("--mic", mic_hex, "16 hex chars")->required();
  AddEngineFlags(*decrypt, decrypt_engine);

  CLI::App* mic = app.add_subcommand("mic", "Print the plaintext MIC");
  mic->add_option("--key", key_hex, "32 hex chars")->required();
  mic->add_option("--header", header_hex, "58 hex chars")->required();
  mic->add_option("--payload", payload_hex, "hex, up to 2296 bytes")
      ->required();
  AddEngineFlags(*mic, mic_engine);

  bench::BenchConfig bench_config;
  std::size_t bench_lanes = 2;
  std::optional<std::size_t> bench_workers;
  std::optional<std::size_t> bench_warmup;
  std::string csv_path;
  CLI::App* bench_cmd =
      app.add_subcommand("bench", "Time sequential vs interleaved CCMP");
  bench_cmd->add_option("--sizes", bench_config.sizes, "Payload sizes (bytes)")
      ->delimiter(',')
      ->capture_default_str();
  bench_cmd->add_option("--reps", bench_config.reps, "Measured repetitions")
      ->capture_default_str();
  bench_cmd->add_option("--warmup", bench_warmup,
                        "Discarded repetitions (default 10% of reps, >= 3)");
  bench_cmd->add_option("--batch", bench_config.batch,
                        "Calls per timing bracket (1 = per call)")
      ->capture_default_str();
  bench_cmd->add_option("--lanes", bench_lanes, "Lanes of the interleaved arm")
      ->capture_default_str();
  bench_cmd->add_option("--workers", bench_workers,
                        "Lane executors (default = lanes)");
  bench_cmd->add_option("--csv", csv_path, "Record CSV output path")
      ->required();

  std::string compare_input;
  CLI::App* compare_cmd =
      app.add_subcommand("compare", "Compare the two arms of a record CSV");
  compare_cmd->add_option("--csv", compare_input, "Record CSV from bench")
      ->required();

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(std::move(reversed));
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  }

  try {
    if (*selftest) {
      return RunSelftest(out) ? kExitOk : kExitUsage;
    }

    if (*encrypt) {
      const Key128 key = ParseKey(key_hex);
      Mpdu mpdu{ParseHeaderFlag(header_hex),
                ParsePayloadFlag("--payload", payload_hex)};
      const ProtectedMpdu frame =
          CcmpEncrypt(key, mpdu, encrypt_engine.Engine());
      out << HexEncode(frame.ciphertext) << '\n'
          << HexEncode(frame.encrypted_mic) << '\n';
      return kExitOk;
    }

    if (*decrypt) {
      const Key128 key = ParseKey(key_hex);
      ProtectedMpdu frame;
      frame.header = ParseHeaderFlag(header_hex);
      frame.ciphertext = ParsePayloadFlag("--ciphertext", ciphertext_hex);
      const std::vector<std::uint8_t> tag = DecodeFlag("--mic", mic_hex, 8);
      std::copy(tag.begin(), tag.end(), frame.encrypted_mic.begin());
      const std::optional<Mpdu> opened =
          CcmpDecrypt(key, frame, decrypt_engine.Engine());
      if (!opened) {
        out << "AUTH-FAIL\n";
        return kExitAuthFailure;
      }
      out << HexEncode(opened->payload) << '\n';
      return kExitOk;
    }

    if (*mic) {
      const aes::Aes128 cipher(ParseKey(key_hex));
      const MpduHeader header = ParseHeaderFlag(header_hex);
      const std::vector<std::uint8_t> payload =
          ParsePayloadFlag("--payload", payload_hex);
      const MicTag tag = mic_engine.Engine().Compute(
          cipher, ConstructMicIv(header, payload.size()),
          ConstructMicHeader1(header), ConstructMicHeader2(header), payload);
      out << HexEncode(tag) << '\n';
      return kExitOk;
    }

    if (*bench_cmd) {
      bench_config.lanes = bench_lanes;
      bench_config.workers = bench_workers.value_or(bench_lanes);
      bench_config.warmup = bench_warmup;
      try {
        bench_config.Validate();
      } catch (const std::exception& e) {
        throw UsageError("bench", e.what());
      }
      std::ofstream records_file(csv_path);
      if (!records_file) throw UsageError("--csv", "cannot write " + csv_path);
      const std::string compare_path = CompareCsvPath(csv_path);
      std::ofstream compare_file(compare_path);
      if (!compare_file) {
        throw UsageError("--csv", "cannot write " + compare_path);
      }

      const std::vector<bench::BenchRecord> records =
          bench::RunSuite(bench_config);
      bench::WriteRecordsCsv(records_file, records);
      const auto [baseline, optimized] = bench::SplitByEngine(records);
      const bench::ComparisonReport report =
          bench::Compare(baseline, optimized);
      bench::WriteComparisonCsv(compare_file, report);
      if (!records_file.flush() || !compare_file.flush()) {
        throw UsageError("--csv", "write failed");
      }

      out << "size_bytes,seq_t_total_ns,icbc_t_total_ns,pct_time_change,"
             "pct_throughput_change,critical_path_ratio\n";
      out << std::fixed << std::setprecision(2);
      for (const bench::ComparisonRow& row : report.rows) {
        out << row.size_bytes << ',' << row.baseline_t_total_ns << ','
            << row.optimized_t_total_ns << ',' << row.pct_time_change << ','
            << row.pct_throughput_change << ',' << std::setprecision(4)
            << row.critical_path_ratio << std::setprecision(2) << '\n';
      }
      return kExitOk;
    }

    if (*compare_cmd) {
      std::ifstream in(compare_input);
      if (!in) throw UsageError("--csv", "cannot read " + compare_input);
      const std::vector<bench::BenchRecord> records =
          bench::ReadRecordsCsv(in);
      const auto [baseline, optimized] = bench::SplitByEngine(records);
      const bench::ComparisonReport report =
          bench::Compare(baseline, optimized);
      bench::WriteComparisonCsv(out, report);
      out << '\n';
      PrintFits(out, report);
      return kExitOk;
    }
  } catch (const UsageError& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  }
  return kExitUsage;
}

}  // namespace ccmp::cli
