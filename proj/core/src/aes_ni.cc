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

// Optional AES-NI path. Compiled for every x86-64 build through function
// target attributes and selected at run time, so the library still runs on
// CPUs without the instructions.

#include "ccmp/aes.h"

#if defined(__x86_64__) && (defined(__GNUC__) || defined(__clang__))
#define CCMP_HAVE_AESNI_PATH 1
#include <immintrin.h>
#endif

namespace ccmp::aes::internal {

#ifdef CCMP_HAVE_AESNI_PATH

bool CpuHasAesNi() {
  static const bool has = __builtin_cpu_supports("aes") &&
                          __builtin_cpu_supports("sse4.1");
  return has;
}

namespace {

// Interleaves the rounds of `Width` blocks so their aesenc latencies overlap.
template <int Width>
__attribute__((target("aes,sse4.1"))) inline void EncryptGroup(
    const __m128i* keys, Block* blocks) {
  __m128i s[Width];
  for (int i = 0; i < Width; ++i) {
    s[i] = _mm_xor_si128(
        _mm_loadu_si128(reinterpret_cast<const __m128i*>(blocks[i].data())),
        keys[0]);
  }
  for (int round = 1; round < kRounds; ++round) {
    for (int i = 0; i < Width; ++i) s[i] = _mm_aesenc_si128(s[i], keys[round]);
  }
  for (int i = 0; i < Width; ++i) {
    s[i] = _mm_aesenclast_si128(s[i], keys[kRounds]);
    _mm_storeu_si128(reinterpret_cast<__m128i*>(blocks[i].data()), s[i]);
  }
}

}  // namespace

__attribute__((target("aes,sse4.1"))) void EncryptBlocksAesNi(
    const RoundKeySchedule& schedule, std::span<Block> blocks) {
  __m128i keys[kRounds + 1];
  for (int i = 0; i <= kRounds; ++i) {
    keys[i] = _mm_loadu_si128(
        reinterpret_cast<const __m128i*>(schedule.round_keys[i].data()));
  }
  Block* p = blocks.data();
  std::size_t n = blocks.size();
  for (; n >= 8; n -= 8, p += 8) EncryptGroup<8>(keys, p);
  if (n >= 4) {
    EncryptGroup<4>(keys, p);
    n -= 4;
    p += 4;
  }
  if (n >= 2) {
    EncryptGroup<2>(keys, p);
    n -= 2;
    p += 2;
  }
  if (n == 1) EncryptGroup<1>(keys, p);
}

#else

bool CpuHasAesNi() { return false; }

void EncryptBlocksAesNi(const RoundKeySchedule&, std::span<Block>) {}

#endif

}  // namespace ccmp::aes::internal
