#pragma once

#include <iosfwd>
#include <map>
#include <variant>
#include <vector>

#include "mixcon/graph.hpp"
#include "mixcon/iso.hpp"

namespace mixcon {

// Cartesian product, folded left to right. Vertex encoding is
// mixed-radix with the first factor most significant: the pair (a, b)
// of a binary product lives at a * |V(B)| + b.
Graph cartesian_product(const std::vector<Graph>& factors);

// Base graph, fibre graph, and a fibre automorphism per base edge
// (identity when unset). Twists are stored once per undirected edge;
// reading the reverse direction yields the inverse automorphism.
class BundleSpec {
 public:
  BundleSpec(Graph base, Graph fibre);

  const Graph& base() const { return base_; }
  const Graph& fibre() const { return fibre_; }

  // sigma must be an automorphism of the fibre. Setting the identity
  // clears the entry. Throws std::invalid_argument on a non-edge or a
  // non-automorphism.
  void set_twist(int u, int v, const Permutation& sigma);

  // Automorphism applied when crossing from u's fibre to v's fibre.
  Permutation twist(int u, int v) const;

  // Non-identity twists in canonical (u < v) direction, sorted.
  std::vector<std::tuple<int, int, Permutation>> nontrivial_twists() const;

  bool operator==(const BundleSpec&) const = default;

 private:
  Graph base_;
  Graph fibre_;
  std::map<std::pair<int, int>, Permutation> twists_;  // key u < v
};

// Structured-text (JSON) form:
//   {"base": {"n": 3, "edges": [[0,1],[1,2],[0,2]]},
//    "fibre": {"n": 2, "edges": [[0,1]]},
//    "twists": [{"u": 0, "v": 2, "perm": [1,0]}]}
// format_bundle_spec emits a canonical form; parsing it back yields an
// equal spec and re-formatting reproduces the bytes.
BundleSpec parse_bundle_spec(std::istream& in);
BundleSpec parse_bundle_spec(const std::string& text);
std::string format_bundle_spec(const BundleSpec& spec);

enum class EdgeKind { Degenerate, Nondegenerate };

struct FibreView {
  Graph graph;                  // equals the spec fibre
  std::vector<int> total_ids;   // fibre label -> total vertex id
};

// The total graph over a spec. Vertex (u, f) sits at u * |V(F)| + f.
// Degenerate edges copy the fibre inside each p^-1(u); nondegenerate
// edges join (u, f) to (v, twist(u,v)[f]) over each base edge.
class Bundle {
 public:
  explicit Bundle(BundleSpec spec);

  const BundleSpec& spec() const { return spec_; }
  const Graph& total() const { return total_; }
  int base_size() const { return spec_.base().vertex_count(); }
  int fibre_size() const { return spec_.fibre().vertex_count(); }

  int encode(int base_v, int fibre_v) const;
  int base_of(int total_v) const;
  int fibre_label_of(int total_v) const;

  EdgeKind classify(Edge total_edge) const;  // invalid_argument on unknown edges
  // Degenerate edges project to a base vertex, nondegenerate ones to a
  // base edge.
  std::variant<int, Edge> project(Edge total_edge) const;

  FibreView fibre_view(int base_v) const;

  // Lifts a base path edge by edge, applying twists, starting from a
  // total vertex over the path's first base vertex.
  Path lift(const Path& base_path, int start_total_vertex) const;

 private:
  BundleSpec spec_;
  Graph total_;
};

}  // namespace mixcon
