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

#include <benchmark/benchmark.h>

#include <array>
#include <vector>

#include "ccmp/aes.h"
#include "ccmp/bench.h"
#include "ccmp/ccmp.h"

namespace ccmp {
namespace {

const Key128 kKey{{0x00, 0x01, 0x02, 0x03, 0x04, 0x05, 0x06, 0x07, 0x08, 0x09,
                   0x0a, 0x0b, 0x0c, 0x0d, 0x0e, 0x0f}};

aes::Aes128::Backend BackendArg(const benchmark::State& state) {
  return static_cast<aes::Aes128::Backend>(state.range(0));
}

bool SkipIfUnavailable(benchmark::State& state) {
  if (BackendArg(state) == aes::Aes128::Backend::kAesNi &&
      !aes::Aes128::AesNiAvailable()) {
    state.SkipWithError("AES-NI not available");
    return true;
  }
  return false;
}

void BM_AesEncryptChained(benchmark::State& state) {
  if (SkipIfUnavailable(state)) return;
  const aes::Aes128 cipher(kKey, BackendArg(state));
  Block block{};
  for (auto _ : state) {
    block = cipher.Encrypt(block);
    benchmark::DoNotOptimize(block);
  }
  state.SetBytesProcessed(state.iterations() * kBlockSize);
  state.SetLabel(aes::BackendName(cipher.backend()));
}
BENCHMARK(BM_AesEncryptChained)
    ->Arg(static_cast<int>(aes::Aes128::Backend::kPortable))
    ->Arg(static_cast<int>(aes::Aes128::Backend::kAesNi));

void BM_AesEncryptIndependent8(benchmark::State& state) {
  if (SkipIfUnavailable(state)) return;
  const aes::Aes128 cipher(kKey, BackendArg(state));
  std::array<Block, 8> blocks{};
  for (auto _ : state) {
    cipher.EncryptIndependent(blocks);
    benchmark::DoNotOptimize(blocks);
  }
  state.SetBytesProcessed(state.iterations() * 8 * kBlockSize);
  state.SetLabel(aes::BackendName(cipher.backend()));
}
BENCHMARK(BM_AesEncryptIndependent8)
    ->Arg(static_cast<int>(aes::Aes128::Backend::kPortable))
    ->Arg(static_cast<int>(aes::Aes128::Backend::kAesNi));

void BM_ExpandKey(benchmark::State& state) {
  for (auto _ : state) {
    benchmark::DoNotOptimize(aes::ExpandKey(kKey));
  }
}
BENCHMARK(BM_ExpandKey);

// range(0): payload bytes, range(1): lanes (0 selects the sequential MIC).
void BM_Mic(benchmark::State& state) {
  const aes::Aes128 cipher(kKey);
  const std::size_t size = static_cast<std::size_t>(state.range(0));
  const std::size_t lanes = static_cast<std::size_t>(state.range(1));
  const MicEngine engine = lanes == 0 ? MicEngine::Sequential()
                                      : MicEngine::Interleaved({lanes, lanes});
  const MpduHeader header;
  const std::vector<std::uint8_t> payload = bench::MakePayload(size);
  const Block b0 = ConstructMicIvUnbounded(header, size);
  const Block aad1 = ConstructMicHeader1(header);
  const Block aad2 = ConstructMicHeader2(header);
  for (auto _ : state) {
    benchmark::DoNotOptimize(engine.Compute(cipher, b0, aad1, aad2, payload));
  }
  state.SetBytesProcessed(state.iterations() * static_cast<int64_t>(size));
  state.SetLabel(engine.Label());
}
BENCHMARK(BM_Mic)->ArgsProduct({{16, 64, 1024, 16384, 262144}, {0, 1, 2, 4, 8}});

void BM_CounterMode(benchmark::State& state) {
  const aes::Aes128 cipher(kKey);
  const std::size_t size = static_cast<std::size_t>(state.range(0));
  const MpduHeader header;
  const std::vector<std::uint8_t> payload = bench::MakePayload(size);
  std::vector<std::uint8_t> out(size);
  const Block preload = ConstructCtrPreload(header, 0);
  for (auto _ : state) {
    ApplyKeystream(cipher, preload, payload, out);
    benchmark::DoNotOptimize(out.data());
  }
  state.SetBytesProcessed(state.iterations() * static_cast<int64_t>(size));
}
BENCHMARK(BM_CounterMode)->Arg(16)->Arg(64)->Arg(1024)->Arg(16384)->Arg(262144);

// range(0): payload bytes, range(1): lanes (0 selects the sequential MIC).
void BM_CcmpEncrypt(benchmark::State& state) {
  const aes::Aes128 cipher(kKey);
  const std::size_t size = static_cast<std::size_t>(state.range(0));
  const std::size_t lanes = static_cast<std::size_t>(state.range(1));
  const MicEngine engine = lanes == 0 ? MicEngine::Sequential()
                                      : MicEngine::Interleaved({lanes, lanes});
  const Mpdu mpdu{MpduHeader{}, bench::MakePayload(size)};
  for (auto _ : state) {
    benchmark::DoNotOptimize(CcmpEncrypt(cipher, mpdu, engine));
  }
  state.SetBytesProcessed(state.iterations() * static_cast<int64_t>(size));
  state.SetLabel(engine.Label());
}
BENCHMARK(BM_CcmpEncrypt)->ArgsProduct({{16, 64, 1500, 2296}, {0, 2}});

}  // namespace
}  // namespace ccmp

BENCHMARK_MAIN();
