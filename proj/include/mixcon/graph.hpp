#pragma once

#include <compare>
#include <iosfwd>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace mixcon {

// Undirected edge, stored with u < v.
struct Edge {
  int u = 0;
  int v = 0;

  Edge() = default;
  Edge(int a, int b) : u(a < b ? a : b), v(a < b ? b : a) {}

  friend auto operator<=>(const Edge&, const Edge&) = default;
};

// Thrown when a construction step that is backed by a proven counting
// argument finds no candidate. Firing means a bug, not a bad input.
struct InvariantViolation : std::logic_error {
  using std::logic_error::logic_error;
};

// Thrown when a bounded search runs out of candidates.
struct SearchExhausted : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Thrown when a fault set does not fit a routing budget.
struct BudgetExceeded : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

// Immutable simple graph: vertices 0..n-1 plus a sorted, duplicate-free
// edge set. The zero-vertex graph is allowed (it is what full deletion
// leaves behind) and counts as disconnected.
class Graph {
 public:
  Graph() = default;
  explicit Graph(int n) : Graph(n, {}) {}
  Graph(int n, std::vector<Edge> edges);

  int vertex_count() const { return n_; }
  int edge_count() const { return static_cast<int>(edges_.size()); }
  const std::vector<Edge>& edges() const { return edges_; }
  const std::vector<int>& neighbors(int v) const;
  bool has_vertex(int v) const { return v >= 0 && v < n_; }
  bool has_edge(int u, int v) const;
  int degree(int v) const;
  int min_degree() const;  // std::domain_error on the empty graph

  bool operator==(const Graph&) const = default;

 private:
  int n_ = 0;
  std::vector<Edge> edges_;
  std::vector<std::vector<int>> adj_;
};

// A set of vertices and edges to delete together. Kept sorted and unique.
struct FaultSet {
  std::vector<int> vertices;
  std::vector<Edge> edges;

  static FaultSet of(std::vector<int> vertices, std::vector<Edge> edges);
  bool empty() const { return vertices.empty() && edges.empty(); }
  std::size_t size() const { return vertices.size() + edges.size(); }

  bool operator==(const FaultSet&) const = default;
};

// Deletion result: the surviving subgraph relabeled to 0..k-1 plus the
// map back to the original ids (increasing, so relabeling is stable).
struct DeletedGraph {
  Graph graph;
  std::vector<int> to_original;

  int original_of(int v) const { return to_original.at(v); }
  std::optional<int> new_id_of(int original) const;
};

// Removes f.vertices (with their incident edges) and f.edges from g.
// Throws std::invalid_argument if any fault element is not present in g.
DeletedGraph deleted(const Graph& g, const FaultSet& f);

// Simple path as a vertex sequence. Distinct vertices, consecutive
// vertices adjacent; a single vertex is a valid zero-length path.
struct Path {
  std::vector<int> vertices;

  int length() const { return static_cast<int>(vertices.size()) - 1; }
  bool operator==(const Path&) const = default;
};

bool is_valid_path(const Graph& g, const Path& p);

// Turns a walk (consecutive vertices adjacent, repeats allowed) into a
// simple path by cutting the loop between repeat visits.
Path simplify_walk(const std::vector<int>& walk);

// n == 0 -> false, n == 1 -> true.
bool is_connected(const Graph& g);

// BFS shortest path; among equally short paths picks the one with the
// lexicographically smallest vertex sequence. nullopt when unreachable.
std::optional<Path> shortest_path(const Graph& g, int from, int to);

// Generators.
Graph complete_graph(int n);                      // n >= 1
Graph cycle_graph(int n);                         // n >= 3
Graph path_graph(int n);                          // n >= 1
Graph hypercube_graph(int dim);                   // dim >= 1
Graph complete_bipartite_graph(int a, int b);     // a, b >= 1
Graph petersen_graph();

// Edge-list text format: a "n m" line, then m lines "u v" with 0-based
// ids. Lines starting with '#' and blank lines are ignored. Output is
// canonical: u < v within a line, lines sorted.
Graph parse_edge_list(std::istream& in);
Graph parse_edge_list(const std::string& text);
std::string format_edge_list(const Graph& g);

// Fault-list text format: lines "v <id>" and "e <u> <v>", '#' comments.
// Every referenced element must exist in the host graph.
FaultSet parse_fault_list(std::istream& in, const Graph& host);
FaultSet parse_fault_list(const std::string& text, const Graph& host);
std::string format_fault_list(const FaultSet& f);

}  // namespace mixcon
