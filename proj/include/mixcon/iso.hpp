#pragma once

#include <optional>
#include <vector>

#include "mixcon/graph.hpp"

namespace mixcon {

// perm[i] is the image of vertex i.
using Permutation = std::vector<int>;

Permutation identity_permutation(int n);
bool is_permutation(const Permutation& p, int n);
Permutation inverse_permutation(const Permutation& p);
// Composition: (a_after_b)[i] = a[b[i]].
Permutation compose_permutations(const Permutation& a, const Permutation& b);

// Edge-preserving check; with equal edge counts this is the full
// automorphism condition.
bool is_automorphism(const Graph& g, const Permutation& p);

// Exact backtracking with degree-profile pruning. Sized for graphs up
// to a few dozen vertices; throws std::invalid_argument beyond 64.
std::optional<Permutation> find_isomorphism(const Graph& a, const Graph& b);
bool isomorphic(const Graph& a, const Graph& b);

// First non-identity automorphism found, nullopt for rigid graphs.
std::optional<Permutation> find_nontrivial_automorphism(const Graph& g);

}  // namespace mixcon
