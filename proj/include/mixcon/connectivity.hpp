#pragma once

#include <compare>
#include <cstdint>
#include <limits>
#include <optional>
#include <utility>
#include <vector>

#include "mixcon/graph.hpp"

namespace mixcon {

// Single-vertex convention: the one-vertex graph has no edge cut, its
// edge connectivity is reported as this sentinel.
inline constexpr int kInfiniteEdgeConnectivity = std::numeric_limits<int>::max();

// Worker count for the enumeration sweeps. 0 means one worker per
// hardware thread, 1 (the default) keeps everything sequential.
// Parallel runs return the same answers as sequential ones.
void set_threads(int n);
int thread_count();

// Flow-based connectivity (Dinic underneath). Disconnected graphs give
// 0; complete graphs give n-1 by convention; edge_connectivity of the
// one-vertex graph is the infinite sentinel.
int vertex_connectivity(const Graph& g);
int edge_connectivity(const Graph& g);

// Independent enumeration routes for cross-validation. The vertex
// variant sweeps deletion subsets through the mask kernels (<= 64
// vertices); the edge variant enumerates edge subsets with a plain
// adjacency BFS.
int vertex_connectivity_bruteforce(const Graph& g);
int edge_connectivity_bruteforce(const Graph& g);

// Mixed connectivity query (p, q), not both zero.
//   q = 0: the graph tolerates every deletion of p-1 vertices.
//   q > 0: it tolerates every deletion of p vertices plus q-1 edges.
struct MixedQuery {
  int p = 0;
  int q = 0;

  bool valid() const { return p >= 0 && q >= 0 && p + q > 0; }
  friend auto operator<=>(const MixedQuery&, const MixedQuery&) = default;
};

// Decision procedure. q = 0 reduces to vertex_connectivity(g) >= p;
// q > 0 requires p < vertex_connectivity(g) and that every p-subset
// deletion keeps edge connectivity >= q. Accepts early when
// p + q <= kappa, rejects early when p + q > lambda.
bool is_mixed_connected(const Graph& g, MixedQuery t);

// Naive cross-check: enumerates every deletion scenario and runs a
// plain BFS on it. Shares no code with the decision procedure above.
bool is_mixed_connected_oracle(const Graph& g, MixedQuery t);

// Lexicographically first fault set witnessing that the query fails:
// q = 0 gives a minimum separating vertex set, q > 0 gives p vertices
// plus at most q-1 edges. nullopt when the query holds, or when the
// failure is definitional (complete-graph boundary) and no deletion
// can exhibit it.
std::optional<FaultSet> find_disconnecting(const Graph& g, MixedQuery t);

// kappa, lambda and the frontier m(p) = largest q with (p,q)-connected
// for p = 0..kappa-1, terminated by (kappa, 0).
struct MixedProfile {
  int kappa = 0;
  int lambda = 0;
  std::vector<std::pair<int, int>> frontier;
};

MixedProfile mixed_profile(const Graph& g);  // domain_error when disconnected

// Everything a single true (p,q) answer implies, as a sorted list:
// monotone drops, the (p,q) -> (p-1,q+1) shift, and (p+1,0) when q > 0.
std::vector<MixedQuery> implication_closure(MixedQuery t);

// Two graphs with equal kappa = 2 and lambda = 3 that a mixed query
// tells apart: g1 fails (1,2), g2 satisfies it. The certificate is the
// fault set that disconnects g1.
struct WitnessPair {
  Graph g1;
  Graph g2;
  int kappa = 0;
  int lambda = 0;
  MixedQuery query;
  FaultSet certificate;
};

// Scans small graphs (exhaustively through n = 7, seeded sampling at
// n = 8) until both sides are found. Throws SearchExhausted otherwise.
WitnessPair find_witness_pair(int max_n, std::uint64_t seed = 0);

}  // namespace mixcon
