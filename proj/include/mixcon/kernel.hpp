#pragma once

#include <array>
#include <cstddef>
#include <cstdint>

#include "mixcon/graph.hpp"

namespace mixcon {

// Adjacency of a graph with at most 64 vertices, one neighbor bitmask
// per vertex. This is the shared input of the batch connectivity
// kernels: one MaskGraph, many fault scenarios.
struct MaskGraph {
  int n = 0;
  std::uint64_t all = 0;             // mask with bits 0..n-1 set
  std::array<std::uint64_t, 64> adj{};

  static MaskGraph of(const Graph& g);  // invalid_argument when n > 64

  void drop_edge(int u, int v) {
    adj[u] &= ~(std::uint64_t{1} << v);
    adj[v] &= ~(std::uint64_t{1} << u);
  }
};

// Batch contract: for each scenario i, alive[i] is the mask of
// surviving vertices; out[i] becomes 1 when the subgraph induced on
// alive[i] is connected. A single vertex counts as connected, the
// empty mask does not. All variants implement exactly this contract
// and are equivalence-tested against each other.
using ConnectedBatchFn = void (*)(const MaskGraph&, const std::uint64_t* alive,
                                  std::size_t count, std::uint8_t* out);

void connected_batch_scalar(const MaskGraph& g, const std::uint64_t* alive,
                            std::size_t count, std::uint8_t* out);

#if MIXCON_HAVE_AVX2_TU
// Four scenarios per lane group; see kernel_avx2.cpp.
void connected_batch_avx2(const MaskGraph& g, const std::uint64_t* alive,
                          std::size_t count, std::uint8_t* out);
bool cpu_supports_avx2();
#endif

#if MIXCON_HAVE_NEON_TU
// Two scenarios per lane group; see kernel_neon.cpp.
void connected_batch_neon(const MaskGraph& g, const std::uint64_t* alive,
                          std::size_t count, std::uint8_t* out);
#endif

enum class KernelKind { Auto, Scalar, Avx2, Neon };

// Picks the batch implementation. Auto probes the CPU once; asking for
// a variant the build or CPU lacks throws std::invalid_argument.
void select_kernel(KernelKind kind);
const char* kernel_name();  // "scalar", "avx2" or "neon"

// Runs the selected implementation.
void connected_batch(const MaskGraph& g, const std::uint64_t* alive,
                     std::size_t count, std::uint8_t* out);

// Single-scenario convenience (always scalar).
bool mask_connected(const MaskGraph& g, std::uint64_t alive);

}  // namespace mixcon
