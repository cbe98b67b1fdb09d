#include "mixcon/connectivity.hpp"

#include <algorithm>
#include <atomic>
#include <bit>
#include <functional>
#include <random>
#include <thread>

#include "mixcon/flow.hpp"
#include "mixcon/kernel.hpp"

namespace mixcon {

namespace {

std::atomic<int> g_threads{1};

int resolve_threads() {
  int t = g_threads.load(std::memory_order_relaxed);
  if (t == 0) t = static_cast<int>(std::thread::hardware_concurrency());
  return std::max(1, t);
}

bool is_complete(const Graph& g) {
  const long long n = g.vertex_count();
  return g.edge_count() == n * (n - 1) / 2;
}

// Lexicographic k-combinations of [start, n) OR-ed onto acc. The
// visitor returns true to stop; so does the function.
template <class F>
bool for_each_subset_mask(int n, int k, int start, std::uint64_t acc, F&& f) {
  if (k == 0) return f(acc);
  for (int i = start; i <= n - k; ++i) {
    if (for_each_subset_mask(n, k - 1, i + 1, acc | (std::uint64_t{1} << i), f)) return true;
  }
  return false;
}

std::vector<int> mask_to_ids(std::uint64_t mask) {
  std::vector<int> ids;
  while (mask != 0) {
    ids.push_back(std::countr_zero(mask));
    mask &= mask - 1;
  }
  return ids;
}

// Feeds deletion scenarios to the batch kernel and remembers the first
// disconnecting subset it sees (first in push order).
struct DisconnectScan {
  const MaskGraph& g;
  const std::atomic<bool>* stop = nullptr;
  std::vector<std::uint64_t> buf;
  std::vector<std::uint8_t> out;
  std::uint64_t found_subset = 0;
  bool found = false;

  explicit DisconnectScan(const MaskGraph& graph, const std::atomic<bool>* stop_flag = nullptr)
      : g(graph), stop(stop_flag) {
    buf.reserve(512);
  }

  bool push(std::uint64_t subset) {
    buf.push_back(g.all ^ subset);
    if (buf.size() == 512) return flush();
    return false;
  }

  bool flush() {
    if (!buf.empty()) {
      out.resize(buf.size());
      connected_batch(g, buf.data(), buf.size(), out.data());
      for (std::size_t i = 0; i < buf.size(); ++i) {
        if (!out[i]) {
          found = true;
          found_subset = g.all ^ buf[i];
          buf.clear();
          return true;
        }
      }
      buf.clear();
    }
    return stop != nullptr && stop->load(std::memory_order_relaxed);
  }
};

// First (in lexicographic order) k-subset of vertices whose deletion
// disconnects the remnant. Sequential by design: the order is part of
// the certificate contract.
std::optional<std::uint64_t> first_disconnecting_subset(const MaskGraph& g, int k) {
  if (k < 0 || k > g.n) return std::nullopt;
  DisconnectScan scan(g);
  for_each_subset_mask(g.n, k, 0, 0, [&](std::uint64_t s) { return scan.push(s); });
  scan.flush();
  if (scan.found) return scan.found_subset;
  return std::nullopt;
}

// Parallel boolean form of the same sweep; used where only the answer
// matters. Workers split the subset space by smallest element.
bool any_disconnecting_subset(const MaskGraph& g, int k) {
  if (k < 0 || k > g.n) return false;
  if (k == 0) return !mask_connected(g, g.all);
  const int threads = std::min(resolve_threads(), g.n - k + 1);
  if (threads <= 1) return first_disconnecting_subset(g, k).has_value();

  std::atomic<bool> stop{false};
  std::atomic<int> next{0};
  std::atomic<bool> found{false};
  auto worker = [&] {
    DisconnectScan scan(g, &stop);
    for (;;) {
      const int c0 = next.fetch_add(1, std::memory_order_relaxed);
      if (c0 > g.n - k || stop.load(std::memory_order_relaxed)) break;
      for_each_subset_mask(g.n, k - 1, c0 + 1, std::uint64_t{1} << c0,
                           [&](std::uint64_t s) { return scan.push(s); });
      if (scan.found || scan.flush()) break;
    }
    scan.flush();
    if (scan.found) {
      found.store(true, std::memory_order_relaxed);
      stop.store(true, std::memory_order_relaxed);
    }
  };
  {
    std::vector<std::jthread> pool;
    for (int i = 0; i < threads; ++i) pool.emplace_back(worker);
  }
  return found.load();
}

// Generic parallel "does any k-subset satisfy bad()" driver for the
// per-subset flow checks. bad() must be safe to run concurrently.
bool any_subset_bad(int n, int k, const std::function<bool(std::uint64_t)>& bad) {
  if (k < 0 || k > n) return false;
  if (k == 0) return bad(0);
  const int threads = std::min(resolve_threads(), n - k + 1);
  if (threads <= 1) {
    return for_each_subset_mask(n, k, 0, 0, [&](std::uint64_t s) { return bad(s); });
  }
  std::atomic<bool> stop{false};
  std::atomic<bool> any{false};
  std::atomic<int> next{0};
  auto worker = [&] {
    for (;;) {
      const int c0 = next.fetch_add(1, std::memory_order_relaxed);
      if (c0 > n - k || stop.load(std::memory_order_relaxed)) break;
      for_each_subset_mask(n, k - 1, c0 + 1, std::uint64_t{1} << c0, [&](std::uint64_t s) {
        if (bad(s)) {
          any.store(true, std::memory_order_relaxed);
          stop.store(true, std::memory_order_relaxed);
          return true;
        }
        return stop.load(std::memory_order_relaxed);
      });
      if (stop.load(std::memory_order_relaxed)) break;
    }
  };
  {
    std::vector<std::jthread> pool;
    for (int i = 0; i < threads; ++i) pool.emplace_back(worker);
  }
  return any.load();
}

// Remnant graph after deleting the vertices in xmask.
Graph delete_mask(const Graph& g, std::uint64_t xmask) {
  FaultSet f;
  f.vertices = mask_to_ids(xmask);
  return deleted(g, f).graph;
}

// lambda(g) >= q, with early-stopping flows. The one-vertex remnant
// counts as infinitely edge-connected.
bool edge_connectivity_at_least(const Graph& g, int q) {
  if (q <= 0) return true;
  const int n = g.vertex_count();
  if (n == 0) return false;
  if (n == 1) return true;
  if (g.min_degree() < q) return false;
  if (!is_connected(g)) return false;
  for (int t = 1; t < n; ++t) {
    if (max_edge_disjoint_paths(g, 0, t, q) < q) return false;
  }
  return true;
}

}  // namespace

void set_threads(int n) {
  if (n < 0) throw std::invalid_argument("thread count must be >= 0");
  g_threads.store(n, std::memory_order_relaxed);
}

int thread_count() { return resolve_threads(); }

int vertex_connectivity(const Graph& g) {
  const int n = g.vertex_count();
  if (!is_connected(g)) return 0;
  if (is_complete(g)) return n - 1;
  int best = g.min_degree();
  for (int u = 0; u < n && best > 0; ++u) {
    for (int v = u + 1; v < n && best > 0; ++v) {
      if (g.has_edge(u, v)) continue;
      best = std::min(best, max_vertex_disjoint_paths(g, u, v, best));
    }
  }
  return best;
}

int edge_connectivity(const Graph& g) {
  const int n = g.vertex_count();
  if (n == 0) return 0;
  if (n == 1) return kInfiniteEdgeConnectivity;
  if (!is_connected(g)) return 0;
  int best = g.min_degree();
  for (int t = 1; t < n && best > 0; ++t) {
    best = std::min(best, max_edge_disjoint_paths(g, 0, t, best));
  }
  return best;
}

int vertex_connectivity_bruteforce(const Graph& g) {
  const int n = g.vertex_count();
  if (!is_connected(g)) return 0;
  if (is_complete(g)) return n - 1;
  const MaskGraph m = MaskGraph::of(g);
  for (int k = 1; k <= n - 2; ++k) {
    if (any_disconnecting_subset(m, k)) return k;
  }
  return n - 1;
}

int edge_connectivity_bruteforce(const Graph& g) {
  const int n = g.vertex_count();
  if (n == 0) return 0;
  if (n == 1) return kInfiniteEdgeConnectivity;
  if (!is_connected(g)) return 0;

  // Plain adjacency BFS over explicit removal flags; nothing shared
  // with the flow route.
  const int m = g.edge_count();
  std::vector<char> removed(m, 0);
  std::vector<int> queue(n), seen(n, 0);
  int stamp = 0;
  std::vector<std::vector<std::pair<int, int>>> adj(n);
  for (int i = 0; i < m; ++i) {
    adj[g.edges()[i].u].emplace_back(g.edges()[i].v, i);
    adj[g.edges()[i].v].emplace_back(g.edges()[i].u, i);
  }
  auto connected_now = [&] {
    ++stamp;
    int head = 0, tail = 0, reached = 1;
    queue[tail++] = 0;
    seen[0] = stamp;
    while (head < tail) {
      const int v = queue[head++];
      for (const auto& [w, id] : adj[v]) {
        if (!removed[id] && seen[w] != stamp) {
          seen[w] = stamp;
          ++reached;
          queue[tail++] = w;
        }
      }
    }
    return reached == n;
  };
  std::function<bool(int, int)> sweep = [&](int start, int k) {
    if (k == 0) return !connected_now();
    for (int i = start; i <= m - k; ++i) {
      removed[i] = 1;
      const bool hit = sweep(i + 1, k - 1);
      removed[i] = 0;
      if (hit) return true;
    }
    return false;
  };
  for (int k = 1; k <= m; ++k) {
    if (sweep(0, k)) return k;
  }
  throw InvariantViolation("edge connectivity sweep fell through");
}

namespace {

bool mixed_q1_all_connected(const Graph& g, int p) {
  if (g.vertex_count() <= 64) {
    const MaskGraph m = MaskGraph::of(g);
    return !any_disconnecting_subset(m, p);
  }
  // Large-graph fallback: sequential, Graph-level deletions.
  std::vector<int> comb;
  std::function<bool(int, int)> rec = [&](int start, int k) {
    if (k == 0) {
      FaultSet f;
      f.vertices = comb;
      return !is_connected(deleted(g, f).graph);
    }
    for (int i = start; i <= g.vertex_count() - k; ++i) {
      comb.push_back(i);
      const bool hit = rec(i + 1, k - 1);
      comb.pop_back();
      if (hit) return true;
    }
    return false;
  };
  return !rec(0, p);
}

bool mixed_band_check(const Graph& g, int p, int q) {
  // Every p-subset deletion must keep lambda >= q.
  if (q == 1) return mixed_q1_all_connected(g, p);
  if (g.vertex_count() <= 64) {
    return !any_subset_bad(g.vertex_count(), p, [&](std::uint64_t xmask) {
      return !edge_connectivity_at_least(delete_mask(g, xmask), q);
    });
  }
  std::vector<int> comb;
  std::function<bool(int, int)> rec = [&](int start, int k) {
    if (k == 0) {
      FaultSet f;
      f.vertices = comb;
      return !edge_connectivity_at_least(deleted(g, f).graph, q);
    }
    for (int i = start; i <= g.vertex_count() - k; ++i) {
      comb.push_back(i);
      const bool hit = rec(i + 1, k - 1);
      comb.pop_back();
      if (hit) return true;
    }
    return false;
  };
  return !rec(0, p);
}

bool is_mixed_connected_known(const Graph& g, MixedQuery t, int kappa, int lambda) {
  if (!t.valid()) throw std::invalid_argument("mixed query needs p, q >= 0 and p + q > 0");
  if (t.q == 0) return kappa >= t.p;
  if (t.p >= kappa) return false;  // covers disconnected graphs (kappa 0)
  if (t.p + t.q <= kappa) return true;
  if (lambda != kInfiniteEdgeConnectivity && t.p + t.q > lambda) return false;
  return mixed_band_check(g, t.p, t.q);
}

}  // namespace

bool is_mixed_connected(const Graph& g, MixedQuery t) {
  if (!t.valid()) throw std::invalid_argument("mixed query needs p, q >= 0 and p + q > 0");
  const int kappa = vertex_connectivity(g);
  if (t.q == 0) return kappa >= t.p;
  if (t.p >= kappa) return false;
  const int lambda = edge_connectivity(g);
  return is_mixed_connected_known(g, t, kappa, lambda);
}

bool is_mixed_connected_oracle(const Graph& g, MixedQuery t) {
  if (!t.valid()) throw std::invalid_argument("mixed query needs p, q >= 0 and p + q > 0");
  const int n = g.vertex_count();
  const int m = g.edge_count();

  // Convention guards: a deletion that leaves fewer than two vertices
  // cannot witness anything, so queries that force such deletions for
  // every scenario are false outright.
  if (t.q == 0) {
    if (t.p > n - 1) return false;
  } else {
    if (t.p > n - 2) return false;
  }

  std::vector<char> vdel(n, 0), edel(m, 0);
  std::vector<int> queue(n), seen(n, 0);
  int stamp = 0;
  std::vector<std::vector<std::pair<int, int>>> adj(n);
  for (int i = 0; i < m; ++i) {
    adj[g.edges()[i].u].emplace_back(g.edges()[i].v, i);
    adj[g.edges()[i].v].emplace_back(g.edges()[i].u, i);
  }

  auto connected_now = [&] {
    int start = -1, alive = 0;
    for (int v = 0; v < n; ++v) {
      if (!vdel[v]) {
        ++alive;
        if (start < 0) start = v;
      }
    }
    if (alive == 0) return false;
    ++stamp;
    int head = 0, tail = 0, reached = 1;
    queue[tail++] = start;
    seen[start] = stamp;
    while (head < tail) {
      const int v = queue[head++];
      for (const auto& [w, id] : adj[v]) {
        if (vdel[w] || edel[id] || seen[w] == stamp) continue;
        seen[w] = stamp;
        ++reached;
        queue[tail++] = w;
      }
    }
    return reached == alive;
  };

  std::vector<int> live_edges;
  std::function<bool(int, int)> edge_sweep = [&](int start, int k) -> bool {
    if (k == 0) return !connected_now();
    for (int i = start; i <= static_cast<int>(live_edges.size()) - k; ++i) {
      edel[live_edges[i]] = 1;
      const bool hit = edge_sweep(i + 1, k - 1);
      edel[live_edges[i]] = 0;
      if (hit) return true;
    }
    return false;
  };

  auto scenario_fails = [&]() -> bool {
    if (t.q == 0) return !connected_now();
    live_edges.clear();
    for (int i = 0; i < m; ++i) {
      const Edge& e = g.edges()[i];
      if (!vdel[e.u] && !vdel[e.v]) live_edges.push_back(i);
    }
    if (static_cast<int>(live_edges.size()) < t.q - 1) {
      // Not enough surviving edges to place the full fault set; any
      // such scenario is dominated by one that is enumerable.
      return false;
    }
    return edge_sweep(0, t.q - 1);
  };

  const int vertex_faults = (t.q == 0) ? t.p - 1 : t.p;
  std::function<bool(int, int)> vertex_sweep = [&](int start, int k) -> bool {
    if (k == 0) return scenario_fails();
    for (int i = start; i <= n - k; ++i) {
      vdel[i] = 1;
      const bool hit = vertex_sweep(i + 1, k - 1);
      vdel[i] = 0;
      if (hit) return true;
    }
    return false;
  };
  return !vertex_sweep(0, vertex_faults);
}

std::optional<FaultSet> find_disconnecting(const Graph& g, MixedQuery t) {
  if (!t.valid()) throw std::invalid_argument("mixed query needs p, q >= 0 and p + q > 0");
  if (is_mixed_connected(g, t)) return std::nullopt;
  const int n = g.vertex_count();

  if (t.q == 0) {
    // Minimum separating set, lexicographically first. Complete graphs
    // have none; their failure is definitional.
    if (is_complete(g) && n >= 1) return std::nullopt;
    if (!is_connected(g)) return FaultSet{};
    const int kappa = vertex_connectivity(g);
    const MaskGraph m = MaskGraph::of(g);
    const auto subset = first_disconnecting_subset(m, kappa);
    if (!subset) throw InvariantViolation("separating set promised by kappa not found");
    return FaultSet::of(mask_to_ids(*subset), {});
  }

  // Lexicographically first X (|X| = p), then first edge set Y
  // (|Y| <= q-1) of the remnant that disconnects it.
  if (t.p > n - 2) return std::nullopt;  // definitional boundary
  std::optional<FaultSet> found;
  std::vector<int> comb;
  std::function<bool(int, int)> rec = [&](int start, int k) -> bool {
    if (k == 0) {
      FaultSet f;
      f.vertices = comb;
      const DeletedGraph d = deleted(g, f);
      if (edge_connectivity_at_least(d.graph, t.q)) return false;
      // Remnant loses lambda < q: find the first disconnecting edge
      // subset, ascending in size then lexicographic.
      const int mm = d.graph.edge_count();
      std::vector<int> pick;
      std::function<bool(int, int)> esweep = [&](int estart, int need) -> bool {
        if (need == 0) {
          FaultSet ef;
          for (int id : pick) ef.edges.push_back(d.graph.edges()[id]);
          ef.edges = FaultSet::of({}, ef.edges).edges;
          if (is_connected(deleted(d.graph, ef).graph)) return false;
          FaultSet full;
          full.vertices = comb;
          for (int id : pick) {
            const Edge& e = d.graph.edges()[id];
            full.edges.emplace_back(d.original_of(e.u), d.original_of(e.v));
          }
          found = FaultSet::of(full.vertices, full.edges);
          return true;
        }
        for (int i = estart; i <= mm - need; ++i) {
          pick.push_back(i);
          const bool hit = esweep(i + 1, need - 1);
          pick.pop_back();
          if (hit) return true;
        }
        return false;
      };
      for (int size = 0; size <= std::min(t.q - 1, mm); ++size) {
        if (esweep(0, size)) return true;
      }
      throw InvariantViolation("edge cut promised by lambda not found");
    }
    for (int i = start; i <= n - k; ++i) {
      comb.push_back(i);
      const bool hit = rec(i + 1, k - 1);
      comb.pop_back();
      if (hit) return true;
    }
    return false;
  };
  if (rec(0, t.p)) return found;
  return std::nullopt;
}

MixedProfile mixed_profile(const Graph& g) {
  if (!is_connected(g)) throw std::domain_error("mixed profile requires a connected graph");
  MixedProfile prof;
  prof.kappa = vertex_connectivity(g);
  prof.lambda = edge_connectivity(g);
  for (int p = 0; p < prof.kappa; ++p) {
    int m = prof.kappa - p;  // guaranteed true: p + q <= kappa
    for (int q = prof.lambda - p; q > prof.kappa - p; --q) {
      if (is_mixed_connected_known(g, {p, q}, prof.kappa, prof.lambda)) {
        m = q;
        break;
      }
    }
    prof.frontier.emplace_back(p, m);
  }
  prof.frontier.emplace_back(prof.kappa, 0);
  return prof;
}

std::vector<MixedQuery> implication_closure(MixedQuery t) {
  if (!t.valid()) throw std::invalid_argument("mixed query needs p, q >= 0 and p + q > 0");
  std::vector<MixedQuery> out;
  std::vector<MixedQuery> work{t};
  auto push = [&](MixedQuery c) {
    if (!c.valid()) return;
    if (std::find(out.begin(), out.end(), c) != out.end()) return;
    if (std::find(work.begin(), work.end(), c) != work.end()) return;
    work.push_back(c);
  };
  while (!work.empty()) {
    const MixedQuery c = work.back();
    work.pop_back();
    if (std::find(out.begin(), out.end(), c) != out.end()) continue;
    out.push_back(c);
    if (c.p > 0) push({c.p - 1, c.q});          // lose a vertex of tolerance
    if (c.q > 0) push({c.p, c.q - 1});          // lose an edge of tolerance
    if (c.p > 0) push({c.p - 1, c.q + 1});      // trade a vertex for an edge
    if (c.q > 0) push({c.p + 1, 0});            // edge tolerance implies a cut bound
  }
  std::sort(out.begin(), out.end());
  return out;
}

namespace {

// Lexicographic edge order on n vertices: (0,1), (0,2), ..., (n-2,n-1).
std::vector<Edge> all_pairs(int n) {
  std::vector<Edge> edges;
  for (int u = 0; u < n; ++u) {
    for (int v = u + 1; v < n; ++v) edges.emplace_back(u, v);
  }
  return edges;
}

struct MaskLevel {
  int n;
  std::vector<Edge> pairs;
  std::vector<std::uint64_t> incident;  // per vertex, over edge indices

  explicit MaskLevel(int nn) : n(nn), pairs(all_pairs(nn)), incident(nn, 0) {
    for (std::size_t i = 0; i < pairs.size(); ++i) {
      incident[pairs[i].u] |= std::uint64_t{1} << i;
      incident[pairs[i].v] |= std::uint64_t{1} << i;
    }
  }

  // Cheap filters on the raw edge mask; builds a Graph only for
  // survivors of all of them.
  bool degrees_ok(std::uint64_t mask) const {
    for (int v = 0; v < n; ++v) {
      if (std::popcount(mask & incident[v]) < 3) return false;
    }
    return true;
  }

  MaskGraph mask_graph(std::uint64_t mask) const {
    MaskGraph g;
    g.n = n;
    g.all = (std::uint64_t{1} << n) - 1;
    std::uint64_t rest = mask;
    while (rest != 0) {
      const int i = std::countr_zero(rest);
      rest &= rest - 1;
      g.adj[pairs[i].u] |= std::uint64_t{1} << pairs[i].v;
      g.adj[pairs[i].v] |= std::uint64_t{1} << pairs[i].u;
    }
    return g;
  }

  Graph graph(std::uint64_t mask) const {
    std::vector<Edge> edges;
    std::uint64_t rest = mask;
    while (rest != 0) {
      const int i = std::countr_zero(rest);
      rest &= rest - 1;
      edges.push_back(pairs[i]);
    }
    return Graph(n, std::move(edges));
  }

  // kappa == 2 on the mask level: no separating single vertex, some
  // separating pair.
  bool kappa_is_two(const MaskGraph& g) const {
    for (int v = 0; v < n; ++v) {
      if (!mask_connected(g, g.all ^ (std::uint64_t{1} << v))) return false;
    }
    for (int u = 0; u < n; ++u) {
      for (int v = u + 1; v < n; ++v) {
        const std::uint64_t cut = (std::uint64_t{1} << u) | (std::uint64_t{1} << v);
        if (!mask_connected(g, g.all ^ cut)) return true;
      }
    }
    return false;
  }

  // lambda == 3 via bipartition minimum; only called on connected
  // graphs with all degrees >= 3 so the minimum is <= delta anyway.
  bool lambda_is_three(std::uint64_t mask) const {
    int best = n * n;
    const std::uint64_t top = std::uint64_t{1} << (n - 1);
    for (std::uint64_t side = 1; side < top; side += 2) {  // vertex 0 stays on side A
      int cut = 0;
      std::uint64_t rest = mask;
      while (rest != 0) {
        const int i = std::countr_zero(rest);
        rest &= rest - 1;
        cut += static_cast<int>(((side >> pairs[i].u) ^ (side >> pairs[i].v)) & 1);
      }
      best = std::min(best, cut);
      if (best < 3) return false;
    }
    return best == 3;
  }
};

}  // namespace

WitnessPair find_witness_pair(int max_n, std::uint64_t seed) {
  if (max_n < 4) throw std::invalid_argument("witness search needs max_n >= 4");
  std::optional<Graph> holds, fails;

  auto classify = [&](const Graph& g) {
    if (is_mixed_connected_oracle(g, {1, 2})) {
      if (!holds) holds = g;
    } else {
      if (!fails) fails = g;
    }
    return holds && fails;
  };
  auto consider_mask = [&](const MaskLevel& level, std::uint64_t mask) {
    if (std::popcount(mask) * 2 < 3 * level.n) return false;
    if (!level.degrees_ok(mask)) return false;
    const MaskGraph mg = level.mask_graph(mask);
    if (!mask_connected(mg, mg.all)) return false;
    if (!level.kappa_is_two(mg)) return false;
    if (!level.lambda_is_three(mask)) return false;
    return classify(level.graph(mask));
  };
  auto build = [&]() -> WitnessPair {
    WitnessPair w;
    w.g1 = *fails;
    w.g2 = *holds;
    w.kappa = 2;
    w.lambda = 3;
    w.query = {1, 2};
    const auto cert = find_disconnecting(w.g1, w.query);
    if (!cert) throw InvariantViolation("witness certificate not found");
    w.certificate = *cert;
    return w;
  };

  for (int n = 5; n <= std::min(max_n, 7); ++n) {
    const MaskLevel level(n);
    const std::uint64_t total = std::uint64_t{1} << level.pairs.size();
    for (std::uint64_t mask = 0; mask < total; ++mask) {
      if (consider_mask(level, mask)) return build();
    }
  }

  if (max_n >= 8) {
    std::mt19937_64 rng(seed);
    const MaskLevel level(8);
    std::uniform_real_distribution<double> unit(0.0, 1.0);
    for (int attempt = 0; attempt < 200000; ++attempt) {
      const double p = 0.35 + 0.3 * unit(rng);
      std::uint64_t mask = 0;
      for (std::size_t i = 0; i < level.pairs.size(); ++i) {
        if (unit(rng) < p) mask |= std::uint64_t{1} << i;
      }
      if (consider_mask(level, mask)) return build();
    }
  }

  throw SearchExhausted("no (1,2)-distinguishable pair with kappa=2, lambda=3 up to n=" +
                        std::to_string(max_n));
}

}  // namespace mixcon
