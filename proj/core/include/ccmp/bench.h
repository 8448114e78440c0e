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

#ifndef CCMP_BENCH_H_
#define CCMP_BENCH_H_

// Encryption-time decomposition harness.
//
// Each iteration times the six frame-protection steps separately against a
// monotonic clock:
//
//   CBC-MAC time  = mic_iv + header1 + header2 + calc_mic
//   counter time  = ctr_preload + encrypt_mpdu
//   total         = CBC-MAC time + counter time
//   throughput    = payload bytes / total
//
// Per-component figures are arithmetic means over the measured repetitions.
// Wall-clock time stands in for energy; nothing here measures power.

#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "ccmp/block.h"
#include "ccmp/ccmp.h"

namespace ccmp::bench {

class MeasurementError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class ConfigurationError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

inline constexpr std::size_t kDefaultBatch = 1024;

// 1, 2, 3 and 4 blocks.
std::vector<std::size_t> SmallBlockSizes();
// SmallBlockSizes() plus 1 KiB, 16 KiB, 256 KiB and 1 MiB.
std::vector<std::size_t> DefaultSizes();

struct BenchConfig {
  std::vector<std::size_t> sizes = DefaultSizes();
  std::size_t reps = 1000;
  // Leading repetitions discarded. Unset means 10% of reps, at least 3.
  std::optional<std::size_t> warmup;
  // Lane configuration of the interleaved arm.
  std::size_t lanes = 2;
  std::size_t workers = 2;
  // 1 times every call individually. B > 1 times B back-to-back calls of
  // each component and divides by B.
  std::size_t batch = 1;

  void Validate() const;
  std::size_t WarmupReps() const;
};

struct BenchRecord {
  std::size_t size_bytes = 0;
  std::string engine;
  std::size_t lanes = 1;
  std::size_t workers = 1;
  std::size_t reps = 0;

  double t_mic_iv_ns = 0;
  double t_header1_ns = 0;
  double t_header2_ns = 0;
  double t_calc_mic_ns = 0;
  double t_cbc_mac_ns = 0;
  double t_ctr_preload_ns = 0;
  double t_encrypt_mpdu_ns = 0;
  double t_counter_ns = 0;
  double t_total_ns = 0;
  double stddev_total_ns = 0;
  double throughput_bps = 0;

  // MIC-path cipher calls, from one instrumented iteration.
  std::uint64_t cipher_calls_total = 0;
  std::uint64_t cipher_calls_critical_path = 0;
  // Counter-mode calls (keystream plus the MIC pad); not in the CSV.
  std::uint64_t counter_cipher_calls = 0;
};

// Smallest positive step observed on the steady clock, in nanoseconds.
double ClockResolutionNs();

// Bytes per second. Throws MeasurementError unless t_total_ns > 0.
double Throughput(double size_bytes, double t_total_ns);

// Deterministic payload for a size: the same size always yields the same
// bytes.
std::vector<std::uint8_t> MakePayload(std::size_t size);

// Times one frame. The payload is not bounded by kMaxPayload; oversize
// payloads use the unbounded B0 and a wrapping block counter.
// Throws ConfigurationError when the clock is coarser than 1 us and the
// config is not in batched mode.
BenchRecord TimeComponents(const Key128& key, const Mpdu& frame,
                           const BenchConfig& config, const MicEngine& engine);

// One sequential and one interleaved record per size, sizes ascending,
// sequential first.
std::vector<BenchRecord> RunSuite(const BenchConfig& config);

struct LinearFit {
  double slope = 0;
  double intercept = 0;
  double r_squared = 0;
};

// Ordinary least squares y = slope * x + intercept. Needs at least two
// distinct x values.
LinearFit FitLine(std::span<const double> x, std::span<const double> y);

struct ComparisonRow {
  std::size_t size_bytes = 0;
  std::size_t lanes = 1;
  std::size_t workers = 1;
  double baseline_t_total_ns = 0;
  double optimized_t_total_ns = 0;
  double baseline_throughput_bps = 0;
  double optimized_throughput_bps = 0;
  double baseline_t_calc_mic_ns = 0;
  double optimized_t_calc_mic_ns = 0;
  std::uint64_t baseline_critical_path = 0;
  std::uint64_t optimized_critical_path = 0;
  double pct_time_change = 0;
  double pct_throughput_change = 0;
  double pct_calc_mic_change = 0;
  double critical_path_ratio = 0;
};

struct ComparisonReport {
  std::vector<ComparisonRow> rows;
  LinearFit baseline_fit;
  LinearFit optimized_fit;
};

// Throws ArgumentError unless both lists cover the same sizes in the same
// order.
ComparisonReport Compare(std::span<const BenchRecord> baseline,
                         std::span<const BenchRecord> optimized);

// Splits RunSuite output into (sequential, interleaved) lists.
std::pair<std::vector<BenchRecord>, std::vector<BenchRecord>> SplitByEngine(
    std::span<const BenchRecord> records);

inline constexpr const char* kRecordCsvHeader =
    "engine,lanes,workers,size_bytes,reps,t_mic_iv_ns,t_header1_ns,"
    "t_header2_ns,t_calc_mic_ns,t_cbc_mac_ns,t_ctr_preload_ns,"
    "t_encrypt_mpdu_ns,t_counter_ns,t_total_ns,stddev_total_ns,"
    "throughput_Bps,cipher_calls_total,cipher_calls_critical_path";

inline constexpr const char* kComparisonCsvHeader =
    "size_bytes,lanes,workers,baseline_t_total_ns,optimized_t_total_ns,"
    "baseline_throughput_Bps,optimized_throughput_Bps,"
    "baseline_t_calc_mic_ns,optimized_t_calc_mic_ns,pct_calc_mic_change,"
    "baseline_critical_path,optimized_critical_path,pct_time_change,"
    "pct_throughput_change,critical_path_ratio";

void WriteRecordsCsv(std::ostream& out, std::span<const BenchRecord> records);
// Parses what WriteRecordsCsv wrote. Throws ArgumentError on a malformed
// header or row.
std::vector<BenchRecord> ReadRecordsCsv(std::istream& in);
void WriteComparisonCsv(std::ostream& out, const ComparisonReport& report);

}  // namespace ccmp::bench

#endif  // CCMP_BENCH_H_
