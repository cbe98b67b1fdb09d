// AVX2 variant of the batch connectivity kernel: four scenarios ride in
// the four 64-bit lanes of a ymm register. Compiled with -mavx2 in its
// own translation unit; callers reach it through the runtime dispatch
// in kernel.cpp only after cpu_supports_avx2() said yes.

#include <immintrin.h>

#include "mixcon/kernel.hpp"

namespace mixcon {

bool cpu_supports_avx2() { return __builtin_cpu_supports("avx2") != 0; }

namespace {

// Propagates reachability to a fixed point. Updates within a sweep feed
// later vertices of the same sweep (reach lives in a register), so the
// sweep count tracks BFS depth, not vertex count.
inline __m256i settle4(const MaskGraph& g, __m256i alive) {
  const __m256i zero = _mm256_setzero_si256();
  // Seed: lowest surviving vertex per lane, alive & -alive.
  __m256i reach = _mm256_and_si256(alive, _mm256_sub_epi64(zero, alive));
  for (;;) {
    const __m256i before = reach;
    for (int v = 0; v < g.n; ++v) {
      const __m256i bit = _mm256_set1_epi64x(static_cast<long long>(std::uint64_t{1} << v));
      // Lane mask: all-ones where v is NOT yet reached.
      const __m256i missing = _mm256_cmpeq_epi64(_mm256_and_si256(reach, bit), zero);
      const __m256i row = _mm256_set1_epi64x(static_cast<long long>(g.adj[v]));
      reach = _mm256_or_si256(reach, _mm256_and_si256(_mm256_andnot_si256(missing, row), alive));
    }
    const int same = _mm256_movemask_pd(_mm256_castsi256_pd(_mm256_cmpeq_epi64(reach, before)));
    if (same == 0xF) return reach;
  }
}

}  // namespace

void connected_batch_avx2(const MaskGraph& g, const std::uint64_t* alive,
                          std::size_t count, std::uint8_t* out) {
  std::size_t i = 0;
  for (; i + 4 <= count; i += 4) {
    const __m256i al = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(alive + i));
    const __m256i reach = settle4(g, al);
    const int full = _mm256_movemask_pd(_mm256_castsi256_pd(_mm256_cmpeq_epi64(reach, al)));
    const int empty = _mm256_movemask_pd(
        _mm256_castsi256_pd(_mm256_cmpeq_epi64(al, _mm256_setzero_si256())));
    const int connected = full & ~empty;
    out[i + 0] = (connected >> 0) & 1;
    out[i + 1] = (connected >> 1) & 1;
    out[i + 2] = (connected >> 2) & 1;
    out[i + 3] = (connected >> 3) & 1;
  }
  if (i < count) connected_batch_scalar(g, alive + i, count - i, out + i);
}

}  // namespace mixcon
