#include <bit>

#include "mixcon/kernel.hpp"

namespace mixcon {

// Reference implementation: word-at-a-time BFS per scenario. The
// frontier trick keeps each sweep O(new vertices) instead of O(n).
static bool scalar_one(const MaskGraph& g, std::uint64_t alive) {
  if (alive == 0) return false;
  std::uint64_t reach = alive & (~alive + 1);  // lowest surviving vertex
  std::uint64_t frontier = reach;
  while (frontier != 0) {
    std::uint64_t grow = 0;
    do {
      const int v = std::countr_zero(frontier);
      frontier &= frontier - 1;
      grow |= g.adj[v];
    } while (frontier != 0);
    frontier = grow & alive & ~reach;
    reach |= frontier;
  }
  return reach == alive;
}

void connected_batch_scalar(const MaskGraph& g, const std::uint64_t* alive,
                            std::size_t count, std::uint8_t* out) {
  for (std::size_t i = 0; i < count; ++i) out[i] = scalar_one(g, alive[i]) ? 1 : 0;
}

bool mask_connected(const MaskGraph& g, std::uint64_t alive) { return scalar_one(g, alive); }

}  // namespace mixcon
