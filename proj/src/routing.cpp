#include "mixcon/routing.hpp"

#include <algorithm>
#include <optional>
#include <queue>
#include <stdexcept>

#include "mixcon/connectivity.hpp"
#include "mixcon/iso.hpp"

namespace mixcon {

int FaultWeights::crossing(int u, int v) const {
  auto it = crossing_weight.find(Edge(u, v));
  return it == crossing_weight.end() ? 0 : it->second;
}

int FaultWeights::path_weight(const Path& base_path) const {
  int total = 0;
  for (size_t i = 0; i + 1 < base_path.vertices.size(); ++i)
    total += crossing(base_path.vertices[i], base_path.vertices[i + 1]);
  return total;
}

FaultWeights fault_weights(const Bundle& b, const FaultSet& faults) {
  FaultWeights w;
  w.vertex_weight.assign(b.base_size(), 0);
  w.edge_weight.assign(b.base_size(), 0);
  for (int v : faults.vertices) ++w.vertex_weight[b.base_of(v)];
  for (const Edge& e : faults.edges) {
    if (b.classify(e) == EdgeKind::Degenerate)
      ++w.edge_weight[b.base_of(e.u)];
    else
      ++w.crossing_weight[Edge(b.base_of(e.u), b.base_of(e.v))];
  }
  return w;
}

std::vector<FibreStatus> connected_fibres(const Bundle& b,
                                          const FaultSet& faults) {
  const Graph& total = b.total();
  std::vector<char> dead(total.vertex_count(), 0);
  for (int v : faults.vertices) {
    if (!total.has_vertex(v))
      throw std::invalid_argument("connected_fibres: faulty vertex not in graph");
    dead[v] = 1;
  }
  std::vector<Edge> dead_edges = faults.edges;
  for (const Edge& e : dead_edges)
    if (!total.has_edge(e.u, e.v))
      throw std::invalid_argument("connected_fibres: faulty edge not in graph");
  std::sort(dead_edges.begin(), dead_edges.end());

  const Graph& fibre = b.spec().fibre();
  const int nf = b.fibre_size();
  std::vector<FibreStatus> out(b.base_size(), FibreStatus::Connected);
  std::vector<char> seen(nf);
  for (int bv = 0; bv < b.base_size(); ++bv) {
    int alive = 0;
    int first = -1;
    for (int f = 0; f < nf; ++f)
      if (!dead[bv * nf + f]) {
        ++alive;
        if (first < 0) first = f;
      }
    if (alive == 0) {
      out[bv] = FibreStatus::Annihilated;
      continue;
    }
    std::fill(seen.begin(), seen.end(), 0);
    seen[first] = 1;
    std::queue<int> q;
    q.push(first);
    int reached = 1;
    while (!q.empty()) {
      int f = q.front();
      q.pop();
      for (int g : fibre.neighbors(f)) {
        if (seen[g] || dead[bv * nf + g]) continue;
        if (std::binary_search(dead_edges.begin(), dead_edges.end(),
                               Edge(bv * nf + f, bv * nf + g)))
          continue;
        seen[g] = 1;
        ++reached;
        q.push(g);
      }
    }
    out[bv] = reached == alive ? FibreStatus::Connected
                               : FibreStatus::Disconnected;
  }
  return out;
}

bool FaultBudget::admits(const FaultSet& faults) const {
  const int xs = static_cast<int>(faults.vertices.size());
  const int ys = static_cast<int>(faults.edges.size());
  return xs <= max_vertex_faults() && ys <= max_edge_faults() &&
         xs + ys <= max_total_faults();
}

bool route_validate(const Bundle& b, const FaultSet& faults,
                    const Path& path) {
  if (!is_valid_path(b.total(), path)) return false;
  for (int v : path.vertices)
    if (std::find(faults.vertices.begin(), faults.vertices.end(), v) !=
        faults.vertices.end())
      return false;
  for (size_t i = 0; i + 1 < path.vertices.size(); ++i) {
    Edge e(path.vertices[i], path.vertices[i + 1]);
    if (std::find(faults.edges.begin(), faults.edges.end(), e) !=
        faults.edges.end())
      return false;
  }
  return true;
}

namespace {

struct Ctx {
  const Bundle& b;
  FaultBudget budget;
  // When the connectivity assumptions were verified up front, every
  // counting shortfall below is an implementation bug; otherwise the
  // shortfalls that lean on those assumptions demote to fallback.
  bool strict;
  std::vector<char> dead;
  std::vector<Edge> dead_edges;  // sorted
  FaultWeights w;
  std::vector<FibreStatus> status;

  bool alive(int v) const { return !dead[v]; }
  bool edge_ok(int u, int v) const {
    return !std::binary_search(dead_edges.begin(), dead_edges.end(),
                               Edge(u, v));
  }
};

[[noreturn]] void counting_bug(const std::string& what) {
  throw InvariantViolation("route: " + what);
}

std::nullopt_t assumption_gap(const Ctx& c, const std::string& what) {
  if (c.strict) counting_bug(what);
  return std::nullopt;
}

// BFS over surviving vertices and edges, restricted by keep().
template <typename Pred>
std::optional<Path> restricted_bfs(const Ctx& c, int from, int to,
                                   Pred keep) {
  if (from == to) return Path{{from}};
  std::vector<int> parent(c.b.total().vertex_count(), -2);
  std::queue<int> q;
  parent[from] = -1;
  q.push(from);
  while (!q.empty()) {
    int u = q.front();
    q.pop();
    for (int v : c.b.total().neighbors(u)) {
      if (parent[v] != -2 || !keep(v) || !c.alive(v) || !c.edge_ok(u, v))
        continue;
      parent[v] = u;
      if (v == to) {
        Path p;
        for (int t = to; t != -1; t = parent[t]) p.vertices.push_back(t);
        std::reverse(p.vertices.begin(), p.vertices.end());
        return p;
      }
      q.push(v);
    }
  }
  return std::nullopt;
}

std::optional<Path> fibre_walk(const Ctx& c, int base_v, int from, int to) {
  return restricted_bfs(c, from, to,
                        [&](int v) { return c.b.base_of(v) == base_v; });
}

std::optional<Path> faulted_bfs(const Ctx& c, int from, int to) {
  return restricted_bfs(c, from, to, [](int) { return true; });
}

// Lift of a base path starting at fibre label f, or nullopt if any of
// its vertices or crossing edges is faulty.
std::optional<Path> lift_if_clean(const Ctx& c, const Path& base_path,
                                  int f) {
  Path p = c.b.lift(base_path, c.b.encode(base_path.vertices.front(), f));
  for (int v : p.vertices)
    if (!c.alive(v)) return std::nullopt;
  for (size_t i = 0; i + 1 < p.vertices.size(); ++i)
    if (!c.edge_ok(p.vertices[i], p.vertices[i + 1])) return std::nullopt;
  return p;
}

// Faults able to block a lift of this base path: faulty vertices over
// its base vertices plus faulty crossings over its base edges. The
// |V(F)| lifts are pairwise disjoint, so each such fault blocks at most
// one of them.
int lift_blockers(const Ctx& c, const Path& base_path) {
  int k = 0;
  for (int v : base_path.vertices) k += c.w.wx(v);
  return k + c.w.path_weight(base_path);
}

Permutation composite_twist(const Bundle& b, const Path& base_path) {
  Permutation t = identity_permutation(b.fibre_size());
  for (size_t i = 0; i + 1 < base_path.vertices.size(); ++i)
    t = compose_permutations(
        b.spec().twist(base_path.vertices[i], base_path.vertices[i + 1]), t);
  return t;
}

// Base graph with the flagged vertices dropped; optionally also drops
// base edges that carry faulty crossings.
Graph filtered_base(const Ctx& c, const std::vector<char>& removed,
                    bool clean_crossings_only) {
  const Graph& base = c.b.spec().base();
  std::vector<Edge> edges;
  for (const Edge& e : base.edges()) {
    if (removed[e.u] || removed[e.v]) continue;
    if (clean_crossings_only && c.w.crossing(e.u, e.v) > 0) continue;
    edges.push_back(e);
  }
  return Graph(base.vertex_count(), edges);
}

void append_walk(Path& walk, const Path& next) {
  size_t i = 0;
  if (!walk.vertices.empty() && !next.vertices.empty() &&
      walk.vertices.back() == next.vertices.front())
    i = 1;
  walk.vertices.insert(walk.vertices.end(), next.vertices.begin() + i,
                       next.vertices.end());
}

struct Escape {
  Path path;          // from the start vertex into the landing fibre
  int landing;        // base vertex whose fibre survives connected
  const char* label;  // nullptr when no escape was needed
};

// Moves x out of a disconnected fibre into a connected one, one or two
// hops away, never through more than the admitted number of faults.
std::optional<Escape> escape(const Ctx& c, int x) {
  const int bx = c.b.base_of(x);
  if (c.status[bx] == FibreStatus::Connected)
    return Escape{Path{{x}}, bx, nullptr};

  const Graph& base = c.b.spec().base();
  const Graph& fibre = c.b.spec().fibre();
  const int fx = c.b.fibre_label_of(x);
  const int pf = c.budget.fibre_p;
  const int qf = c.budget.fibre_q;

  auto hop = [&](int v) {
    return Path{{x, c.b.encode(v, c.b.spec().twist(bx, v)[fx])}};
  };

  if (c.w.wx(bx) + c.w.wy(bx) >= pf + qf) {
    // The home fibre soaks up so much of the budget that some neighbor
    // fibre, its crossings included, holds no fault at all.
    for (int v : base.neighbors(bx))
      if (c.w.wx(v) == 0 && c.w.wy(v) == 0 && c.w.crossing(bx, v) == 0 &&
          c.status[v] == FibreStatus::Connected)
        return Escape{hop(v), v, "escape-heavy-fibre"};
    return assumption_gap(c, "heavy fibre with no untouched neighbor");
  }

  if (c.w.wx(bx) > pf) {
    // Too many vertex faults at home for them to spread wide: at most
    // base_p other fibres contain any.
    int faulty_fibres = 0;
    for (int v = 0; v < base.vertex_count(); ++v)
      if (v != bx && c.w.wx(v) > 0) ++faulty_fibres;
    if (faulty_fibres > c.budget.base_p)
      counting_bug("vertex faults spread wider than the budget admits");

    std::vector<int> spared;  // neighbors whose fibres hold no vertex fault
    for (int v : base.neighbors(bx))
      if (c.w.wx(v) == 0) spared.push_back(v);
    if (spared.empty())
      return assumption_gap(c, "no neighbor fibre free of vertex faults");

    for (int v : spared)
      if (c.w.wy(v) == 0 && c.w.crossing(bx, v) == 0 &&
          c.status[v] == FibreStatus::Connected)
        return Escape{hop(v), v, "escape-clean-hop"};

    // Every spared neighbor carries edge faults somewhere. Head for the
    // smallest one anyway: the direct crossing plus one two-step route
    // per fibre neighbor of x are pairwise disjoint, and together they
    // outnumber the faults that sit near this base edge.
    const int v = spared.front();
    if (c.status[v] != FibreStatus::Connected)
      return assumption_gap(c, "closest spared fibre is disconnected");
    const Permutation sigma = c.b.spec().twist(bx, v);
    int candidates = 1;
    {
      const int target = c.b.encode(v, sigma[fx]);
      if (c.alive(target) && c.edge_ok(x, target))
        return Escape{Path{{x, target}}, v, "escape-disjoint-scan"};
    }
    for (int s : fibre.neighbors(fx)) {
      ++candidates;
      const int mid = c.b.encode(bx, s);
      const int target = c.b.encode(v, sigma[s]);
      if (c.alive(mid) && c.edge_ok(x, mid) && c.alive(target) &&
          c.edge_ok(mid, target))
        return Escape{Path{{x, mid, target}}, v, "escape-disjoint-scan"};
    }
    const int nearby =
        c.w.wx(bx) + c.w.wy(bx) + c.w.wy(v) + c.w.crossing(bx, v);
    if (nearby < candidates)
      counting_bug("disjoint escape scan failed with faults to spare");
    return assumption_gap(c, "all disjoint escape routes blocked");
  }

  // A fibre with at most fibre_p vertex faults and under fibre_p+fibre_q
  // faults in total cannot be disconnected.
  return assumption_gap(c, "lightly faulted fibre is disconnected");
}

struct Link {
  Path path;  // from the start vertex to an alive vertex over the target
  const char* label;
};

// Connects the (connected) fibres over b1 and b2, starting from an
// alive vertex over b1.
std::optional<Link> link_fibres(const Ctx& c, int b1, int b2, int start) {
  const Graph& base = c.b.spec().base();
  const int nf = c.b.fibre_size();
  const int pb = c.budget.base_p;

  std::vector<char> faulted(base.vertex_count(), 0);
  std::vector<int> faulted_ids;
  for (int v = 0; v < base.vertex_count(); ++v)
    if (v != b1 && v != b2 && c.w.wx(v) > 0) {
      faulted[v] = 1;
      faulted_ids.push_back(v);
    }
  const int bcount = static_cast<int>(faulted_ids.size());

  // Scans all |V(F)| pairwise disjoint lifts of q and stitches the
  // first survivor onto the start vertex inside its home fibre.
  auto scan_lifts = [&](const Path& q, const char* label)
      -> std::optional<Link> {
    for (int f = 0; f < nf; ++f) {
      auto lifted = lift_if_clean(c, q, f);
      if (!lifted) continue;
      auto head = fibre_walk(c, b1, start, lifted->vertices.front());
      if (!head) counting_bug("connected fibre without an internal path");
      Path full = std::move(*head);
      append_walk(full, *lifted);
      return Link{std::move(full), label};
    }
    if (lift_blockers(c, q) < nf)
      counting_bug("lift scan failed with faults to spare");
    return std::nullopt;
  };

  if (bcount < pb) {
    // Branch walk: hop into an untouched neighbor fibre, and re-aim the
    // rest of the lift inside it so the far endpoint survives.
    std::vector<char> cut = faulted;
    cut[b1] = 1;
    const Graph clean = filtered_base(c, faulted, true);
    const Graph clean_tail = filtered_base(c, cut, true);
    for (int v : clean.neighbors(b1)) {
      if (v == b2 || c.w.wy(v) != 0) continue;
      if (c.status[v] != FibreStatus::Connected) continue;
      auto tail = shortest_path(clean_tail, v, b2);
      if (!tail) continue;
      // Every crossing over (b1, v) is clean, so cross right away.
      const int f1 = c.b.fibre_label_of(start);
      const int entry = c.b.encode(v, c.b.spec().twist(b1, v)[f1]);
      const Permutation tau_inv =
          inverse_permutation(composite_twist(c.b, *tail));
      for (int h = 0; h < nf; ++h) {
        if (!c.alive(c.b.encode(b2, h))) continue;
        auto lifted = lift_if_clean(c, *tail, tau_inv[h]);
        if (!lifted) counting_bug("clean branch lift blocked");
        auto inner = fibre_walk(c, v, entry, lifted->vertices.front());
        if (!inner) counting_bug("untouched fibre without an internal path");
        Path full{{start, entry}};
        append_walk(full, *inner);
        append_walk(full, *lifted);
        return Link{std::move(full), "link-branch-walk"};
      }
      counting_bug("connected target fibre with no surviving vertex");
    }
    const Graph open = filtered_base(c, faulted, false);
    auto q = shortest_path(open, b1, b2);
    if (!q)
      return assumption_gap(c, "base minus vertex-faulted fibres fell apart");
    if (auto out = scan_lifts(*q, "link-lift-scan")) return out;
    return std::nullopt;
  }

  // Enough vertex-faulted fibres to pin down: drop the base_p smallest
  // and route in what is left, which stays connected.
  std::vector<char> trimmed(base.vertex_count(), 0);
  for (int i = 0; i < pb; ++i) trimmed[faulted_ids[i]] = 1;
  const Graph clean = filtered_base(c, trimmed, true);
  if (auto q = shortest_path(clean, b1, b2))
    if (auto out = scan_lifts(*q, "link-trimmed-clean")) return out;
  const Graph open = filtered_base(c, trimmed, false);
  auto q = shortest_path(open, b1, b2);
  if (!q) return assumption_gap(c, "trimmed base is disconnected");
  if (auto out = scan_lifts(*q, "link-trimmed-scan")) return out;
  return std::nullopt;
}

}  // namespace

RouteResult route(const Bundle& b, const FaultBudget& budget,
                  const FaultSet& faults, int x, int y,
                  const RouteOptions& opts) {
  if (budget.fibre_p < 0 || budget.base_p < 0 || budget.fibre_q < 1 ||
      budget.base_q < 1)
    throw std::invalid_argument(
        "route: budget needs fibre_q >= 1, base_q >= 1 and p >= 0");
  if (!b.total().has_vertex(x) || !b.total().has_vertex(y))
    throw std::invalid_argument("route: endpoint out of range");

  const FaultSet canon = FaultSet::of(faults.vertices, faults.edges);
  FaultWeights w = fault_weights(b, canon);  // validates membership
  if (!budget.admits(canon))
    throw BudgetExceeded("route: fault set exceeds the budget envelope");

  if (opts.check_connectivity_assumptions) {
    if (!is_mixed_connected(b.spec().fibre(),
                            {budget.fibre_p, budget.fibre_q}))
      throw std::invalid_argument(
          "route: fibre lacks the budgeted connectivity");
    if (!is_mixed_connected(b.spec().base(), {budget.base_p, budget.base_q}))
      throw std::invalid_argument(
          "route: base lacks the budgeted connectivity");
  }

  Ctx c{b,
        budget,
        opts.check_connectivity_assumptions,
        std::vector<char>(b.total().vertex_count(), 0),
        canon.edges,
        std::move(w),
        connected_fibres(b, canon)};
  for (int v : canon.vertices) c.dead[v] = 1;
  if (c.dead[x] || c.dead[y])
    throw std::invalid_argument("route: endpoint is faulty");

  RouteResult res;
  if (x == y) {
    res.path = Path{{x}};
    res.cases = {"trivial"};
    return res;
  }

  auto structured = [&]() -> std::optional<Path> {
    auto ex = escape(c, x);
    if (!ex) return std::nullopt;
    auto ey = escape(c, y);
    if (!ey) return std::nullopt;
    if (ex->label) res.cases.push_back(ex->label);
    if (ey->label) res.cases.push_back(ey->label);

    Path walk = ex->path;
    if (ex->landing == ey->landing) {
      auto inner = fibre_walk(c, ex->landing, walk.vertices.back(),
                              ey->path.vertices.back());
      if (!inner) counting_bug("connected fibre without an internal path");
      append_walk(walk, *inner);
      res.cases.push_back("same-fibre");
    } else {
      auto lk =
          link_fibres(c, ex->landing, ey->landing, walk.vertices.back());
      if (!lk) return std::nullopt;
      res.cases.push_back(lk->label);
      append_walk(walk, lk->path);
      auto inner = fibre_walk(c, ey->landing, walk.vertices.back(),
                              ey->path.vertices.back());
      if (!inner) counting_bug("connected fibre without an internal path");
      append_walk(walk, *inner);
    }
    Path back = ey->path;
    std::reverse(back.vertices.begin(), back.vertices.end());
    append_walk(walk, back);
    return simplify_walk(walk.vertices);
  };

  if (auto p = structured()) {
    res.path = std::move(*p);
    res.strategy = RouteStrategy::Constructive;
  } else if (opts.allow_fallback) {
    auto p = faulted_bfs(c, x, y);
    if (!p)
      throw InvariantViolation(
          "route: no fault-free path exists inside the budget envelope");
    res.path = std::move(*p);
    res.strategy = RouteStrategy::Fallback;
    res.cases.push_back("fallback-bfs");
  } else {
    throw InvariantViolation(
        "route: construction failed and fallback is disabled");
  }

  if (!route_validate(b, canon, res.path) || res.path.vertices.front() != x ||
      res.path.vertices.back() != y)
    throw InvariantViolation("route: produced an invalid path");
  return res;
}

}  // namespace mixcon
