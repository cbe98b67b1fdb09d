// NEON variant of the batch connectivity kernel: two scenarios in the
// two 64-bit lanes of a q register. Mirrors the AVX2 logic; vtstq_u64
// gives the "lane contains vertex v" mask directly.

#include <arm_neon.h>

#include "mixcon/kernel.hpp"

namespace mixcon {

namespace {

inline uint64x2_t settle2(const MaskGraph& g, uint64x2_t alive) {
  const uint64x2_t zero = vdupq_n_u64(0);
  uint64x2_t reach = vandq_u64(alive, vsubq_u64(zero, alive));
  for (;;) {
    const uint64x2_t before = reach;
    for (int v = 0; v < g.n; ++v) {
      const uint64x2_t bit = vdupq_n_u64(std::uint64_t{1} << v);
      const uint64x2_t present = vtstq_u64(reach, bit);  // all-ones where v reached
      const uint64x2_t row = vdupq_n_u64(g.adj[v]);
      reach = vorrq_u64(reach, vandq_u64(vandq_u64(present, row), alive));
    }
    const uint64x2_t same = vceqq_u64(reach, before);
    if (vgetq_lane_u64(same, 0) == ~std::uint64_t{0} &&
        vgetq_lane_u64(same, 1) == ~std::uint64_t{0}) {
      return reach;
    }
  }
}

}  // namespace

void connected_batch_neon(const MaskGraph& g, const std::uint64_t* alive,
                          std::size_t count, std::uint8_t* out) {
  std::size_t i = 0;
  for (; i + 2 <= count; i += 2) {
    const uint64x2_t al = vld1q_u64(alive + i);
    const uint64x2_t reach = settle2(g, al);
    const uint64x2_t full = vceqq_u64(reach, al);
    out[i + 0] = (vgetq_lane_u64(full, 0) != 0 && vgetq_lane_u64(al, 0) != 0) ? 1 : 0;
    out[i + 1] = (vgetq_lane_u64(full, 1) != 0 && vgetq_lane_u64(al, 1) != 0) ? 1 : 0;
  }
  if (i < count) connected_batch_scalar(g, alive + i, count - i, out + i);
}

}  // namespace mixcon
