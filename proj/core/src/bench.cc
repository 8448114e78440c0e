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

#include <algorithm>
#include <chrono>
#include <cmath>
#include <istream>
#include <ostream>
#include <random>
#include <sstream>

#include "ccmp/counting_cipher.h"

namespace ccmp::bench {
namespace {

using Clock = std::chrono::steady_clock;

double ElapsedNs(Clock::time_point start, Clock::time_point stop) {
  return std::chrono::duration<double, std::nano>(stop - start).count();
}

// Results are folded in here so the timed calls cannot be discarded.
volatile std::uint8_t g_sink = 0;

MpduHeader BenchHeader() {
  MpduHeader header;
  header.fc = 0x4108;  // data, to-DS, protected
  header.a1 = {0x0f, 0xd2, 0xe1, 0x28, 0xa5, 0x7c};
  header.a2 = {0x50, 0x30, 0xf1, 0x84, 0x44, 0x08};
  header.a3 = {0xab, 0xae, 0xa5, 0xb8, 0xfc, 0xba};
  header.sc = 0x3380;
  header.pn = 0xB5039776E70C;
  return header;
}

Key128 BenchKey() {
  Key128 key;
  for (std::size_t i = 0; i < key.bytes.size(); ++i) {
    key.bytes[i] = static_cast<std::uint8_t>(i);
  }
  return key;
}

// Runs `fn` `batch` times and returns the mean duration of one call.
template <typename Fn>
double TimeBatch(std::size_t batch, Fn&& fn) {
  const Clock::time_point start = Clock::now();
  for (std::size_t i = 0; i < batch; ++i) fn();
  const Clock::time_point stop = Clock::now();
  return ElapsedNs(start, stop) / static_cast<double>(batch);
}

std::string FormatDouble(double value) {
  std::ostringstream out;
  out.precision(15);
  out << value;
  return out.str();
}

std::vector<std::string> SplitCsvLine(const std::string& line) {
  std::vector<std::string> fields;
  std::stringstream stream(line);
  std::string field;
  while (std::getline(stream, field, ',')) fields.push_back(field);
  if (!line.empty() && line.back() == ',') fields.emplace_back();
  return fields;
}

double PercentChange(double from, double to) {
  return from == 0 ? 0 : (to - from) / from * 100.0;
}

}  // namespace

std::vector<std::size_t> SmallBlockSizes() { return {16, 32, 48, 64}; }

std::vector<std::size_t> DefaultSizes() {
  std::vector<std::size_t> sizes = SmallBlockSizes();
  sizes.insert(sizes.end(), {1024, 16 * 1024, 256 * 1024, 1024 * 1024});
  return sizes;
}

void BenchConfig::Validate() const {
  if (reps < 1) throw ArgumentError("reps must be >= 1");
  if (batch < 1) throw ArgumentError("batch must be >= 1");
  icbc::IcbcConfig{lanes, workers}.Validate();
}

std::size_t BenchConfig::WarmupReps() const {
  return warmup.value_or(std::max<std::size_t>(3, reps / 10));
}

double ClockResolutionNs() {
  static const double resolution = [] {
    double best = 0;
    for (int i = 0; i < 1000; ++i) {
      const Clock::time_point a = Clock::now();
      Clock::time_point b = Clock::now();
      while (b == a) b = Clock::now();
      const double step = ElapsedNs(a, b);
      if (best == 0 || step < best) best = step;
    }
    return best;
  }();
  return resolution;
}

double Throughput(double size_bytes, double t_total_ns) {
  if (!(t_total_ns > 0)) {
    throw MeasurementError("encryption time must be positive, got " +
                           FormatDouble(t_total_ns) + " ns");
  }
  return size_bytes / (t_total_ns * 1e-9);
}

std::vector<std::uint8_t> MakePayload(std::size_t size) {
  std::mt19937_64 rng(size);
  std::vector<std::uint8_t> payload(size);
  for (std::uint8_t& b : payload) b = static_cast<std::uint8_t>(rng());
  return payload;
}

BenchRecord TimeComponents(const Key128& key, const Mpdu& frame,
                           const BenchConfig& config,
                           const MicEngine& engine) {
  config.Validate();
  if (config.batch == 1 && ClockResolutionNs() > 1000.0) {
    throw ConfigurationError(
        "steady clock resolution is " + FormatDouble(ClockResolutionNs()) +
        " ns, coarser than 1 us; use batched timing (batch > 1)");
  }

  const aes::Aes128 cipher(key);
  const MpduHeader& header = frame.header;
  const std::span<const std::uint8_t> payload = frame.payload;
  const std::size_t batch = config.batch;
  const std::size_t warmup = config.WarmupReps();

  double sums[6] = {};
  std::vector<double> totals;
  totals.reserve(config.reps);

  for (std::size_t iter = 0; iter < warmup + config.reps; ++iter) {
    Block b0, aad1, aad2, preload;
    MicTag mic;
    ProtectedMpdu out;
    double t[6];
    t[0] = TimeBatch(batch, [&] {
      b0 = ConstructMicIvUnbounded(header, payload.size());
    });
    t[1] = TimeBatch(batch, [&] { aad1 = ConstructMicHeader1(header); });
    t[2] = TimeBatch(batch, [&] { aad2 = ConstructMicHeader2(header); });
    t[3] = TimeBatch(batch, [&] {
      mic = engine.Compute(cipher, b0, aad1, aad2, payload);
    });
    t[4] = TimeBatch(batch, [&] { preload = ConstructCtrPreload(header, 0); });
    t[5] = TimeBatch(batch, [&] {
      out = EncryptWithPreload(cipher, preload, header, payload, mic);
    });
    g_sink = g_sink ^ out.encrypted_mic[0];

    if (iter < warmup) continue;
    double total = 0;
    for (int c = 0; c < 6; ++c) {
      sums[c] += t[c];
      total += t[c];
    }
    totals.push_back(total);
  }

  BenchRecord record;
  record.size_bytes = payload.size();
  record.engine = engine.Label();
  record.lanes = engine.lanes();
  record.workers = engine.workers();
  record.reps = config.reps;

  const double reps = static_cast<double>(config.reps);
  record.t_mic_iv_ns = sums[0] / reps;
  record.t_header1_ns = sums[1] / reps;
  record.t_header2_ns = sums[2] / reps;
  record.t_calc_mic_ns = sums[3] / reps;
  record.t_ctr_preload_ns = sums[4] / reps;
  record.t_encrypt_mpdu_ns = sums[5] / reps;
  record.t_cbc_mac_ns = record.t_mic_iv_ns + record.t_header1_ns +
                        record.t_header2_ns + record.t_calc_mic_ns;
  record.t_counter_ns = record.t_ctr_preload_ns + record.t_encrypt_mpdu_ns;
  record.t_total_ns = record.t_cbc_mac_ns + record.t_counter_ns;
  record.throughput_bps =
      Throughput(static_cast<double>(record.size_bytes), record.t_total_ns);

  double variance = 0;
  for (double total : totals) {
    const double d = total - record.t_total_ns;
    variance += d * d;
  }
  record.stddev_total_ns =
      totals.size() > 1 ? std::sqrt(variance / (totals.size() - 1)) : 0.0;

  // Call counts from one instrumented pass.
  const Block b0 = ConstructMicIvUnbounded(header, payload.size());
  const CountingCipher<aes::Aes128> mic_counter(cipher);
  const MicTag mic = engine.Compute(mic_counter, b0, ConstructMicHeader1(header),
                                    ConstructMicHeader2(header), payload);
  record.cipher_calls_total = mic_counter.total_calls();
  record.cipher_calls_critical_path = mic_counter.critical_path_calls();
  const CountingCipher<aes::Aes128> ctr_counter(cipher);
  EncryptWithPreload(ctr_counter, ConstructCtrPreload(header, 0), header,
                     payload, mic);
  record.counter_cipher_calls = ctr_counter.total_calls();
  return record;
}

std::vector<BenchRecord> RunSuite(const BenchConfig& config) {
  config.Validate();
  std::vector<std::size_t> sizes = config.sizes;
  std::sort(sizes.begin(), sizes.end());

  const Key128 key = BenchKey();
  const MicEngine sequential = MicEngine::Sequential();
  const MicEngine interleaved =
      MicEngine::Interleaved({config.lanes, config.workers});

  std::vector<BenchRecord> records;
  records.reserve(2 * sizes.size());
  for (std::size_t size : sizes) {
    const Mpdu frame{BenchHeader(), MakePayload(size)};
    records.push_back(TimeComponents(key, frame, config, sequential));
    records.push_back(TimeComponents(key, frame, config, interleaved));
  }
  return records;
}

LinearFit FitLine(std::span<const double> x, std::span<const double> y) {
  if (x.size() != y.size() || x.size() < 2) {
    throw ArgumentError("FitLine needs two equally sized series of >= 2 points");
  }
  const double n = static_cast<double>(x.size());
  double mean_x = 0, mean_y = 0;
  for (std::size_t i = 0; i < x.size(); ++i) {
    mean_x += x[i];
    mean_y += y[i];
  }
  mean_x /= n;
  mean_y /= n;
  double sxx = 0, sxy = 0, syy = 0;
  for (std::size_t i = 0; i < x.size(); ++i) {
    sxx += (x[i] - mean_x) * (x[i] - mean_x);
    sxy += (x[i] - mean_x) * (y[i] - mean_y);
    syy += (y[i] - mean_y) * (y[i] - mean_y);
  }
  if (sxx == 0) throw ArgumentError("FitLine needs distinct x values");

  LinearFit fit;
  fit.slope = sxy / sxx;
  fit.intercept = mean_y - fit.slope * mean_x;
  fit.r_squared = syy == 0 ? 1.0 : (sxy * sxy) / (sxx * syy);
  return fit;
}

namespace {

LinearFit FitTotals(std::span<const BenchRecord> records) {
  std::vector<double> x, y;
  for (const BenchRecord& r : records) {
    x.push_back(static_cast<double>(r.size_bytes));
    y.push_back(r.t_total_ns);
  }
  const auto [lo, hi] = std::minmax_element(x.begin(), x.end());
  if (x.size() < 2 || *lo == *hi) return {};
  return FitLine(x, y);
}

}  // namespace

ComparisonReport Compare(std::span<const BenchRecord> baseline,
                         std::span<const BenchRecord> optimized) {
  if (baseline.size() != optimized.size()) {
    throw ArgumentError("baseline and optimized cover different size lists");
  }
  ComparisonReport report;
  for (std::size_t i = 0; i < baseline.size(); ++i) {
    const BenchRecord& base = baseline[i];
    const BenchRecord& opt = optimized[i];
    if (base.size_bytes != opt.size_bytes) {
      throw ArgumentError("size mismatch at row " + std::to_string(i) + ": " +
                          std::to_string(base.size_bytes) + " vs " +
                          std::to_string(opt.size_bytes));
    }
    ComparisonRow row;
    row.size_bytes = base.size_bytes;
    row.lanes = opt.lanes;
    row.workers = opt.workers;
    row.baseline_t_total_ns = base.t_total_ns;
    row.optimized_t_total_ns = opt.t_total_ns;
    row.baseline_throughput_bps = base.throughput_bps;
    row.optimized_throughput_bps = opt.throughput_bps;
    row.baseline_t_calc_mic_ns = base.t_calc_mic_ns;
    row.optimized_t_calc_mic_ns = opt.t_calc_mic_ns;
    row.baseline_critical_path = base.cipher_calls_critical_path;
    row.optimized_critical_path = opt.cipher_calls_critical_path;
    row.pct_time_change = PercentChange(base.t_total_ns, opt.t_total_ns);
    row.pct_throughput_change =
        PercentChange(base.throughput_bps, opt.throughput_bps);
    row.pct_calc_mic_change =
        PercentChange(base.t_calc_mic_ns, opt.t_calc_mic_ns);
    row.critical_path_ratio =
        base.cipher_calls_critical_path == 0
            ? 0.0
            : static_cast<double>(opt.cipher_calls_critical_path) /
                  static_cast<double>(base.cipher_calls_critical_path);
    report.rows.push_back(row);
  }
  report.baseline_fit = FitTotals(baseline);
  report.optimized_fit = FitTotals(optimized);
  return report;
}

std::pair<std::vector<BenchRecord>, std::vector<BenchRecord>> SplitByEngine(
    std::span<const BenchRecord> records) {
  std::pair<std::vector<BenchRecord>, std::vector<BenchRecord>> split;
  for (const BenchRecord& r : records) {
    (r.engine == "sequential" ? split.first : split.second).push_back(r);
  }
  return split;
}

void WriteRecordsCsv(std::ostream& out, std::span<const BenchRecord> records) {
  out << kRecordCsvHeader << '\n';
  for (const BenchRecord& r : records) {
    out << r.engine << ',' << r.lanes << ',' << r.workers << ','
        << r.size_bytes << ',' << r.reps << ',' << FormatDouble(r.t_mic_iv_ns)
        << ',' << FormatDouble(r.t_header1_ns) << ','
        << FormatDouble(r.t_header2_ns) << ',' << FormatDouble(r.t_calc_mic_ns)
        << ',' << FormatDouble(r.t_cbc_mac_ns) << ','
        << FormatDouble(r.t_ctr_preload_ns) << ','
        << FormatDouble(r.t_encrypt_mpdu_ns) << ','
        << FormatDouble(r.t_counter_ns) << ',' << FormatDouble(r.t_total_ns)
        << ',' << FormatDouble(r.stddev_total_ns) << ','
        << FormatDouble(r.throughput_bps) << ',' << r.cipher_calls_total << ','
        << r.cipher_calls_critical_path << '\n';
  }
}

std::vector<BenchRecord> ReadRecordsCsv(std::istream& in) {
  std::string line;
  if (!std::getline(in, line) || line != kRecordCsvHeader) {
    throw ArgumentError("not a benchmark record CSV: unexpected header");
  }
  std::vector<BenchRecord> records;
  std::size_t line_number = 1;
  while (std::getline(in, line)) {
    ++line_number;
    if (line.empty()) continue;
    const std::vector<std::string> f = SplitCsvLine(line);
    if (f.size() != 18) {
      throw ArgumentError("line " + std::to_string(line_number) + ": expected " +
                          "18 fields, got " + std::to_string(f.size()));
    }
    try {
      BenchRecord r;
      r.engine = f[0];
      r.lanes = std::stoul(f[1]);
      r.workers = std::stoul(f[2]);
      r.size_bytes = std::stoul(f[3]);
      r.reps = std::stoul(f[4]);
      r.t_mic_iv_ns = std::stod(f[5]);
      r.t_header1_ns = std::stod(f[6]);
      r.t_header2_ns = std::stod(f[7]);
      r.t_calc_mic_ns = std::stod(f[8]);
      r.t_cbc_mac_ns = std::stod(f[9]);
      r.t_ctr_preload_ns = std::stod(f[10]);
      r.t_encrypt_mpdu_ns = std::stod(f[11]);
      r.t_counter_ns = std::stod(f[12]);
      r.t_total_ns = std::stod(f[13]);
      r.stddev_total_ns = std::stod(f[14]);
      r.throughput_bps = std::stod(f[15]);
      r.cipher_calls_total = std::stoull(f[16]);
      r.cipher_calls_critical_path = std::stoull(f[17]);
      records.push_back(std::move(r));
    } catch (const std::logic_error&) {
      throw ArgumentError("line " + std::to_string(line_number) +
                          ": malformed number");
    }
  }
  return records;
}

void WriteComparisonCsv(std::ostream& out, const ComparisonReport& report) {
  out << kComparisonCsvHeader << '\n';
  for (const ComparisonRow& r : report.rows) {
    out << r.size_bytes << ',' << r.lanes << ',' << r.workers << ','
        << FormatDouble(r.baseline_t_total_ns) << ','
        << FormatDouble(r.optimized_t_total_ns) << ','
        << FormatDouble(r.baseline_throughput_bps) << ','
        << FormatDouble(r.optimized_throughput_bps) << ','
        << FormatDouble(r.baseline_t_calc_mic_ns) << ','
        << FormatDouble(r.optimized_t_calc_mic_ns) << ','
        << FormatDouble(r.pct_calc_mic_change) << ','
        << r.baseline_critical_path << ',' << r.optimized_critical_path << ','
        << FormatDouble(r.pct_time_change) << ','
        << FormatDouble(r.pct_throughput_change) << ','
        << FormatDouble(r.critical_path_ratio) << '\n';
  }
}

}  // namespace ccmp::bench
