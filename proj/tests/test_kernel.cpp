#include "mixcon/kernel.hpp"

#include <random>
#include <string>
#include <vector>

#include "doctest.h"
#include "mixcon/graph.hpp"

using namespace mixcon;

namespace {

Graph random_graph(int n, double edge_prob, std::mt19937_64& rng) {
  std::bernoulli_distribution flip(edge_prob);
  std::vector<Edge> edges;
  for (int u = 0; u < n; ++u) {
    for (int v = u + 1; v < n; ++v) {
      if (flip(rng)) edges.emplace_back(u, v);
    }
  }
  return Graph(n, std::move(edges));
}

// Checks the batch contract the slow way: build the induced subgraph
// as a plain Graph and BFS it. Shares nothing with the kernels.
bool reference_connected(const Graph& g, std::uint64_t alive) {
  std::vector<int> keep;
  for (int v = 0; v < g.vertex_count(); ++v) {
    if (alive >> v & 1) keep.push_back(v);
  }
  if (keep.empty()) return false;
  std::vector<int> new_id(g.vertex_count(), -1);
  for (std::size_t i = 0; i < keep.size(); ++i) new_id[keep[i]] = static_cast<int>(i);
  std::vector<Edge> edges;
  for (const Edge& e : g.edges()) {
    if (new_id[e.u] >= 0 && new_id[e.v] >= 0) edges.emplace_back(new_id[e.u], new_id[e.v]);
  }
  return is_connected(Graph(static_cast<int>(keep.size()), std::move(edges)));
}

std::vector<std::uint64_t> scenario_masks(const MaskGraph& mg,
                                          std::mt19937_64& rng, int count) {
  std::vector<std::uint64_t> masks{0, mg.all};
  for (int v = 0; v < mg.n; ++v) masks.push_back(std::uint64_t{1} << v);
  while (static_cast<int>(masks.size()) < count) masks.push_back(rng() & mg.all);
  return masks;
}

}  // namespace

TEST_CASE("mask graph basics") {
  MaskGraph mg = MaskGraph::of(path_graph(5));
  CHECK(mg.n == 5);
  CHECK(mg.all == 0x1f);
  CHECK(mask_connected(mg, 0x1f));
  CHECK(mask_connected(mg, 0b00100));
  CHECK(!mask_connected(mg, 0));
  CHECK(!mask_connected(mg, 0b11011));  // drop the middle of the path

  CHECK_THROWS_AS(MaskGraph::of(complete_graph(65)), std::invalid_argument);
}

TEST_CASE("drop_edge removes both directions") {
  MaskGraph mg = MaskGraph::of(cycle_graph(4));
  mg.drop_edge(0, 1);
  CHECK(mask_connected(mg, mg.all));
  mg.drop_edge(2, 3);
  CHECK(!mask_connected(mg, mg.all));
}

TEST_CASE("scalar batch matches the plain reference") {
  std::mt19937_64 rng(0xc0ffee);
  for (int n : {1, 2, 3, 5, 8, 13, 21, 34, 64}) {
    for (double prob : {0.15, 0.4, 0.8}) {
      Graph g = random_graph(n, prob, rng);
      MaskGraph mg = MaskGraph::of(g);
      auto masks = scenario_masks(mg, rng, 256);
      std::vector<std::uint8_t> got(masks.size(), 0xee);
      connected_batch_scalar(mg, masks.data(), masks.size(), got.data());
      for (std::size_t i = 0; i < masks.size(); ++i) {
        CAPTURE(n);
        CAPTURE(prob);
        CAPTURE(masks[i]);
        CHECK(got[i] == (reference_connected(g, masks[i]) ? 1 : 0));
      }
    }
  }
}

#if MIXCON_HAVE_AVX2_TU
TEST_CASE("avx2 batch agrees with scalar") {
  if (!cpu_supports_avx2()) return;
  std::mt19937_64 rng(0xfeedface);
  for (int n : {1, 4, 7, 16, 33, 64}) {
    for (double prob : {0.2, 0.6}) {
      Graph g = random_graph(n, prob, rng);
      MaskGraph mg = MaskGraph::of(g);
      // Ragged counts hit the partial-lane tail paths.
      for (int count : {1, 2, 3, 4, 5, 63, 256}) {
        auto masks = scenario_masks(mg, rng, count);
        masks.resize(count);
        std::vector<std::uint8_t> want(count, 0xaa), got(count, 0xbb);
        connected_batch_scalar(mg, masks.data(), count, want.data());
        connected_batch_avx2(mg, masks.data(), count, got.data());
        for (int i = 0; i < count; ++i) {
          CAPTURE(n);
          CAPTURE(count);
          CAPTURE(i);
          CHECK(got[i] == want[i]);
        }
      }
    }
  }
}
#endif

#if MIXCON_HAVE_NEON_TU
TEST_CASE("neon batch agrees with scalar") {
  std::mt19937_64 rng(0xfeedface);
  for (int n : {1, 4, 7, 16, 33, 64}) {
    for (double prob : {0.2, 0.6}) {
      Graph g = random_graph(n, prob, rng);
      MaskGraph mg = MaskGraph::of(g);
      for (int count : {1, 2, 3, 63, 256}) {
        auto masks = scenario_masks(mg, rng, count);
        masks.resize(count);
        std::vector<std::uint8_t> want(count, 0xaa), got(count, 0xbb);
        connected_batch_scalar(mg, masks.data(), count, want.data());
        connected_batch_neon(mg, masks.data(), count, got.data());
        for (int i = 0; i < count; ++i) {
          CAPTURE(n);
          CAPTURE(count);
          CHECK(got[i] == want[i]);
        }
      }
    }
  }
}
#endif

TEST_CASE("kernel selection is explicit and reversible") {
  select_kernel(KernelKind::Scalar);
  CHECK(kernel_name() == std::string("scalar"));

  MaskGraph mg = MaskGraph::of(cycle_graph(6));
  std::uint64_t alive = mg.all;
  std::uint8_t out = 9;
  connected_batch(mg, &alive, 1, &out);
  CHECK(out == 1);

#if MIXCON_HAVE_AVX2_TU
  if (cpu_supports_avx2()) {
    select_kernel(KernelKind::Avx2);
    CHECK(kernel_name() == std::string("avx2"));
  } else {
    CHECK_THROWS_AS(select_kernel(KernelKind::Avx2), std::invalid_argument);
  }
#else
  CHECK_THROWS_AS(select_kernel(KernelKind::Avx2), std::invalid_argument);
#endif
#if !MIXCON_HAVE_NEON_TU
  CHECK_THROWS_AS(select_kernel(KernelKind::Neon), std::invalid_argument);
#endif

  select_kernel(KernelKind::Auto);
  const std::string name = kernel_name();
  CHECK((name == "scalar" || name == "avx2" || name == "neon"));
}
