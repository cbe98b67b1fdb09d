#pragma once

#include <limits>
#include <vector>

#include "mixcon/graph.hpp"

namespace mixcon {

// Dinic max-flow on small integer-capacity networks. Built per query;
// the graphs here are tiny, so no reuse machinery.
class FlowNetwork {
 public:
  explicit FlowNetwork(int node_count);

  void add_arc(int from, int to, int capacity);

  // Stops growing once the flow reaches `stop_at`; the return value is
  // exact when it is below the cap.
  int max_flow(int source, int sink, int stop_at = std::numeric_limits<int>::max());

 private:
  struct Arc {
    int to;
    int cap;
    int twin;
  };

  bool build_levels(int source, int sink);
  int push(int v, int sink, int limit);

  int n_;
  std::vector<std::vector<int>> out_;
  std::vector<Arc> arcs_;
  std::vector<int> level_;
  std::vector<int> cursor_;
};

// Maximum number of edge-disjoint u-v paths (undirected, unit edges).
int max_edge_disjoint_paths(const Graph& g, int u, int v,
                            int stop_at = std::numeric_limits<int>::max());

// Maximum number of internally vertex-disjoint u-v paths. Only defined
// for non-adjacent u, v.
int max_vertex_disjoint_paths(const Graph& g, int u, int v,
                              int stop_at = std::numeric_limits<int>::max());

}  // namespace mixcon
