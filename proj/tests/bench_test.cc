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

#include "ccmp/bench.h"

#include <gtest/gtest.h>

#include <cmath>
#include <sstream>

#include "ccmp/icbc.h"
#include "test_util.h"

namespace ccmp::bench {
namespace {

BenchConfig QuickConfig() {
  BenchConfig config;
  config.sizes = {16, 64};
  config.reps = 20;
  config.warmup = 3;
  config.lanes = 2;
  config.workers = 2;
  return config;
}

BenchRecord Fixed(std::size_t size, double total, const char* engine) {
  BenchRecord r;
  r.size_bytes = size;
  r.engine = engine;
  r.t_calc_mic_ns = total / 2;
  r.t_total_ns = total;
  r.throughput_bps = Throughput(static_cast<double>(size), total);
  r.cipher_calls_critical_path = 7;
  return r;
}

TEST(ThroughputTest, Arithmetic) {
  EXPECT_DOUBLE_EQ(Throughput(64, 2000), 32'000'000.0);
  EXPECT_DOUBLE_EQ(Throughput(16, 1000), 16'000'000.0);
  EXPECT_DOUBLE_EQ(Throughput(128, 2000), 2 * Throughput(64, 2000));
  EXPECT_THROW(Throughput(16, 0), MeasurementError);
  EXPECT_THROW(Throughput(16, -5), MeasurementError);
}

TEST(BenchConfigTest, DefaultsAndValidation) {
  BenchConfig config;
  EXPECT_EQ(config.reps, 1000u);
  EXPECT_EQ(config.WarmupReps(), 100u);
  config.reps = 10;
  EXPECT_EQ(config.WarmupReps(), 3u);
  config.warmup = 0;
  EXPECT_EQ(config.WarmupReps(), 0u);
  config.reps = 0;
  EXPECT_THROW(config.Validate(), ArgumentError);
  config.reps = 1;
  config.workers = 3;
  EXPECT_THROW(config.Validate(), RangeError);
}

TEST(BenchConfigTest, DefaultSizesIncludeSmallBlockLadder) {
  const std::vector<std::size_t> sizes = DefaultSizes();
  for (std::size_t s : {16u, 32u, 48u, 64u, 1024u, 16384u, 262144u, 1048576u}) {
    EXPECT_NE(std::find(sizes.begin(), sizes.end(), s), sizes.end()) << s;
  }
}

TEST(ClockTest, ResolvesBelowOneMicrosecond) {
  EXPECT_GT(ClockResolutionNs(), 0.0);
  EXPECT_LT(ClockResolutionNs(), 1000.0);
}

TEST(TimeComponentsTest, RecordIdentitiesAndCallCounts) {
  const Mpdu frame{testing::GoldenFrame().header, MakePayload(64)};
  const BenchConfig config = QuickConfig();

  const BenchRecord seq =
      TimeComponents(Key128{}, frame, config, MicEngine::Sequential());
  EXPECT_EQ(seq.engine, "sequential");
  EXPECT_EQ(seq.reps, 20u);
  EXPECT_EQ(seq.cipher_calls_total, 7u);
  EXPECT_EQ(seq.cipher_calls_critical_path, 7u);
  EXPECT_EQ(seq.counter_cipher_calls, 5u);
  EXPECT_EQ(seq.t_total_ns, seq.t_cbc_mac_ns + seq.t_counter_ns);
  EXPECT_EQ(seq.t_cbc_mac_ns, seq.t_mic_iv_ns + seq.t_header1_ns +
                                  seq.t_header2_ns + seq.t_calc_mic_ns);
  EXPECT_EQ(seq.t_counter_ns, seq.t_ctr_preload_ns + seq.t_encrypt_mpdu_ns);
  EXPECT_NEAR(seq.throughput_bps * seq.t_total_ns * 1e-9 / 64.0, 1.0, 1e-9);
  EXPECT_GE(seq.stddev_total_ns, 0.0);

  const BenchRecord icbc = TimeComponents(Key128{}, frame, config,
                                          MicEngine::Interleaved({2, 2}));
  EXPECT_EQ(icbc.engine, "icbc");
  EXPECT_EQ(icbc.lanes, 2u);
  EXPECT_EQ(icbc.cipher_calls_total, 7u);
  EXPECT_EQ(icbc.cipher_calls_critical_path,
            icbc::CriticalPathCipherCalls(4, 2));
  EXPECT_EQ(icbc.cipher_calls_critical_path, 5u);
}

TEST(TimeComponentsTest, BatchedModeProducesConsistentRecord) {
  BenchConfig config = QuickConfig();
  config.batch = 16;
  config.reps = 5;
  const Mpdu frame{MpduHeader{}, MakePayload(48)};
  const BenchRecord r =
      TimeComponents(Key128{}, frame, config, MicEngine::Sequential());
  EXPECT_GT(r.t_total_ns, 0.0);
  EXPECT_EQ(r.t_total_ns, r.t_cbc_mac_ns + r.t_counter_ns);
  EXPECT_EQ(r.cipher_calls_total, 6u);
}

TEST(TimeComponentsTest, OversizePayloadsAreTimed) {
  BenchConfig config = QuickConfig();
  config.reps = 2;
  config.warmup = 0;
  const Mpdu frame{MpduHeader{}, MakePayload(100'000)};
  const BenchRecord r = TimeComponents(Key128{}, frame, config,
                                       MicEngine::Interleaved({4, 4}));
  EXPECT_EQ(r.cipher_calls_total, 3u + 6250u);
  EXPECT_EQ(r.cipher_calls_critical_path, 3u + 6250u / 4 + 1);
  EXPECT_EQ(r.counter_cipher_calls, 1u + 6250u);
}

TEST(RunSuiteTest, OneRowPerSizeAndEngineInOrder) {
  BenchConfig config = QuickConfig();
  config.sizes = {64, 16, 48};
  const std::vector<BenchRecord> records = RunSuite(config);
  ASSERT_EQ(records.size(), 6u);
  const std::size_t expected_sizes[] = {16, 16, 48, 48, 64, 64};
  for (std::size_t i = 0; i < records.size(); ++i) {
    EXPECT_EQ(records[i].size_bytes, expected_sizes[i]);
    EXPECT_EQ(records[i].engine, i % 2 == 0 ? "sequential" : "icbc");
    const BenchRecord& r = records[i];
    EXPECT_EQ(r.t_total_ns, r.t_cbc_mac_ns + r.t_counter_ns);
    EXPECT_NEAR(r.throughput_bps * r.t_total_ns * 1e-9,
                static_cast<double>(r.size_bytes),
                1e-9 * static_cast<double>(r.size_bytes));
  }
}

TEST(RunSuiteTest, PayloadsAreDeterministic) {
  EXPECT_EQ(MakePayload(1000), MakePayload(1000));
  EXPECT_NE(MakePayload(1000), std::vector<std::uint8_t>(1000));
  EXPECT_EQ(MakePayload(0).size(), 0u);
}

TEST(CompareTest, SelfComparisonIsZero) {
  const std::vector<BenchRecord> base = {Fixed(16, 100, "sequential"),
                                         Fixed(64, 250, "sequential")};
  const ComparisonReport report = Compare(base, base);
  for (const ComparisonRow& row : report.rows) {
    EXPECT_EQ(row.pct_time_change, 0.0);
    EXPECT_EQ(row.pct_throughput_change, 0.0);
    EXPECT_EQ(row.pct_calc_mic_change, 0.0);
    EXPECT_EQ(row.critical_path_ratio, 1.0);
  }
}

TEST(CompareTest, ThirtyPercentFaster) {
  std::vector<BenchRecord> base, opt;
  for (std::size_t s : {16, 32, 48, 64}) {
    base.push_back(Fixed(s, 100, "sequential"));
    opt.push_back(Fixed(s, 70, "icbc"));
  }
  const ComparisonReport report = Compare(base, opt);
  ASSERT_EQ(report.rows.size(), 4u);
  for (const ComparisonRow& row : report.rows) {
    EXPECT_NEAR(row.pct_time_change, -30.0, 1e-9);
    EXPECT_NEAR(row.pct_throughput_change, 42.857142857, 1e-6);
  }
}

TEST(CompareTest, CriticalPathRatio) {
  BenchRecord base = Fixed(64, 100, "sequential");
  BenchRecord opt = Fixed(64, 80, "icbc");
  base.cipher_calls_critical_path = icbc::CriticalPathCipherCalls(4, 1);
  opt.cipher_calls_critical_path = icbc::CriticalPathCipherCalls(4, 2);
  const ComparisonReport report = Compare(std::vector{base}, std::vector{opt});
  EXPECT_NEAR(report.rows[0].critical_path_ratio, 5.0 / 7.0, 1e-12);
}

TEST(CompareTest, SizeMismatchRejected) {
  const std::vector<BenchRecord> a = {Fixed(16, 1, "sequential")};
  const std::vector<BenchRecord> b = {Fixed(32, 1, "icbc")};
  EXPECT_THROW(Compare(a, b), ArgumentError);
  EXPECT_THROW(Compare(a, std::vector<BenchRecord>{}), ArgumentError);
}

TEST(FitLineTest, ExactLineAndNoise) {
  const std::vector<double> x = {1, 2, 3, 4};
  const std::vector<double> y = {5, 7, 9, 11};
  const LinearFit fit = FitLine(x, y);
  EXPECT_NEAR(fit.slope, 2.0, 1e-12);
  EXPECT_NEAR(fit.intercept, 3.0, 1e-12);
  EXPECT_NEAR(fit.r_squared, 1.0, 1e-12);

  const std::vector<double> noisy = {5, 8, 8, 11};
  EXPECT_LT(FitLine(x, noisy).r_squared, 1.0);
  EXPECT_THROW(FitLine(std::vector<double>{1}, std::vector<double>{1}),
               ArgumentError);
  EXPECT_THROW(FitLine(std::vector<double>{2, 2}, std::vector<double>{1, 3}),
               ArgumentError);
}

TEST(CsvTest, RecordHeaderIsExact) {
  std::ostringstream out;
  WriteRecordsCsv(out, {});
  EXPECT_EQ(out.str(),
            "engine,lanes,workers,size_bytes,reps,t_mic_iv_ns,t_header1_ns,"
            "t_header2_ns,t_calc_mic_ns,t_cbc_mac_ns,t_ctr_preload_ns,"
            "t_encrypt_mpdu_ns,t_counter_ns,t_total_ns,stddev_total_ns,"
            "throughput_Bps,cipher_calls_total,cipher_calls_critical_path\n");
}

TEST(CsvTest, RecordsSurviveWriteAndRead) {
  const std::vector<BenchRecord> records = RunSuite(QuickConfig());
  std::stringstream buffer;
  WriteRecordsCsv(buffer, records);
  const std::vector<BenchRecord> read = ReadRecordsCsv(buffer);
  ASSERT_EQ(read.size(), records.size());
  for (std::size_t i = 0; i < read.size(); ++i) {
    EXPECT_EQ(read[i].engine, records[i].engine);
    EXPECT_EQ(read[i].size_bytes, records[i].size_bytes);
    EXPECT_EQ(read[i].cipher_calls_critical_path,
              records[i].cipher_calls_critical_path);
    EXPECT_NEAR(read[i].t_total_ns, records[i].t_total_ns,
                1e-9 * records[i].t_total_ns);
  }
}

TEST(CsvTest, MalformedInputRejected) {
  std::istringstream bad_header("size,engine\n");
  EXPECT_THROW(ReadRecordsCsv(bad_header), ArgumentError);
  std::istringstream short_row(std::string(kRecordCsvHeader) + "\nicbc,2\n");
  EXPECT_THROW(ReadRecordsCsv(short_row), ArgumentError);
}

TEST(CsvTest, ComparisonHasExtraColumns) {
  std::ostringstream out;
  WriteComparisonCsv(out, ComparisonReport{});
  const std::string header = out.str();
  for (const char* column :
       {"pct_time_change", "pct_throughput_change", "critical_path_ratio"}) {
    EXPECT_NE(header.find(column), std::string::npos) << column;
  }
}

}  // namespace
}  // namespace ccmp::bench
