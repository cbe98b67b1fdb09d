#include "mixcon/iso.hpp"

#include <algorithm>
#include <numeric>

namespace mixcon {

Permutation identity_permutation(int n) {
  Permutation p(n);
  std::iota(p.begin(), p.end(), 0);
  return p;
}

bool is_permutation(const Permutation& p, int n) {
  if (static_cast<int>(p.size()) != n) return false;
  std::vector<char> seen(n, 0);
  for (int x : p) {
    if (x < 0 || x >= n || seen[x]) return false;
    seen[x] = 1;
  }
  return true;
}

Permutation inverse_permutation(const Permutation& p) {
  Permutation inv(p.size());
  for (std::size_t i = 0; i < p.size(); ++i) inv[p[i]] = static_cast<int>(i);
  return inv;
}

Permutation compose_permutations(const Permutation& a, const Permutation& b) {
  Permutation out(b.size());
  for (std::size_t i = 0; i < b.size(); ++i) out[i] = a[b[i]];
  return out;
}

bool is_automorphism(const Graph& g, const Permutation& p) {
  if (!is_permutation(p, g.vertex_count())) return false;
  for (const Edge& e : g.edges()) {
    if (!g.has_edge(p[e.u], p[e.v])) return false;
  }
  return true;
}

namespace {

// (degree, sorted neighbor degrees), a cheap vertex invariant that
// prunes most of the search on the graphs we care about.
std::vector<std::vector<int>> degree_profiles(const Graph& g) {
  std::vector<std::vector<int>> prof(g.vertex_count());
  for (int v = 0; v < g.vertex_count(); ++v) {
    prof[v].push_back(g.degree(v));
    for (int w : g.neighbors(v)) prof[v].push_back(g.degree(w));
    std::sort(prof[v].begin() + 1, prof[v].end());
  }
  return prof;
}

struct IsoSearch {
  const Graph& a;
  const Graph& b;
  std::vector<std::vector<int>> prof_a, prof_b;
  std::vector<int> order;        // a's vertices, most-constrained first
  std::vector<int> map;          // a vertex -> b vertex, -1 unset
  std::vector<char> used;        // b vertex taken
  bool (*accept)(const Permutation&);

  bool run(std::size_t depth) {
    if (depth == order.size()) {
      return accept == nullptr || accept(map);
    }
    const int v = order[depth];
    for (int w = 0; w < b.vertex_count(); ++w) {
      if (used[w] || prof_a[v] != prof_b[w]) continue;
      bool ok = true;
      for (std::size_t d = 0; d < depth && ok; ++d) {
        const int u = order[d];
        if (a.has_edge(v, u) != b.has_edge(w, map[u])) ok = false;
      }
      if (!ok) continue;
      map[v] = w;
      used[w] = 1;
      if (run(depth + 1)) return true;
      map[v] = -1;
      used[w] = 0;
    }
    return false;
  }
};

std::optional<Permutation> search(const Graph& a, const Graph& b,
                                  bool (*accept)(const Permutation&)) {
  if (a.vertex_count() > 64 || b.vertex_count() > 64) {
    throw std::invalid_argument("isomorphism search supports at most 64 vertices");
  }
  if (a.vertex_count() != b.vertex_count() || a.edge_count() != b.edge_count()) {
    return std::nullopt;
  }
  IsoSearch s{a, b, degree_profiles(a), degree_profiles(b), {}, {}, {}, accept};
  {
    auto sorted_a = s.prof_a;
    auto sorted_b = s.prof_b;
    std::sort(sorted_a.begin(), sorted_a.end());
    std::sort(sorted_b.begin(), sorted_b.end());
    if (sorted_a != sorted_b) return std::nullopt;
  }
  s.order = identity_permutation(a.vertex_count());
  // Rarer profile class first, then higher degree: fail fast.
  std::vector<int> freq(a.vertex_count(), 0);
  for (int v = 0; v < a.vertex_count(); ++v) {
    for (int u = 0; u < a.vertex_count(); ++u) {
      if (s.prof_a[v] == s.prof_a[u]) ++freq[v];
    }
  }
  std::sort(s.order.begin(), s.order.end(), [&](int x, int y) {
    if (freq[x] != freq[y]) return freq[x] < freq[y];
    if (a.degree(x) != a.degree(y)) return a.degree(x) > a.degree(y);
    return x < y;
  });
  s.map.assign(a.vertex_count(), -1);
  s.used.assign(b.vertex_count(), 0);
  if (s.run(0)) return s.map;
  return std::nullopt;
}

bool reject_identity(const Permutation& p) {
  for (std::size_t i = 0; i < p.size(); ++i) {
    if (p[i] != static_cast<int>(i)) return true;
  }
  return false;
}

}  // namespace

std::optional<Permutation> find_isomorphism(const Graph& a, const Graph& b) {
  return search(a, b, nullptr);
}

bool isomorphic(const Graph& a, const Graph& b) { return find_isomorphism(a, b).has_value(); }

std::optional<Permutation> find_nontrivial_automorphism(const Graph& g) {
  return search(g, g, &reject_identity);
}

}  // namespace mixcon
