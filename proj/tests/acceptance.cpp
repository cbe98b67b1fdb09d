// End-to-end acceptance gate. Prints one PASS/FAIL line per criterion
// and exits nonzero if any fails. Budgets are wall-clock seconds and
// are part of the pass condition.

#include <chrono>
#include <functional>
#include <iostream>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "mixcon/bundle.hpp"
#include "mixcon/connectivity.hpp"
#include "mixcon/graph.hpp"
#include "mixcon/iso.hpp"
#include "mixcon/routing.hpp"
#include "mixcon/verify.hpp"

using namespace mixcon;

namespace {

int failures = 0;

void run_criterion(int idx, const char* name, double budget_s,
                   const std::function<bool(std::ostringstream&)>& body) {
  std::ostringstream detail;
  bool ok = false;
  const auto t0 = std::chrono::steady_clock::now();
  try {
    ok = body(detail);
  } catch (const std::exception& e) {
    detail << " exception=\"" << e.what() << "\"";
    ok = false;
  }
  const double elapsed =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - t0)
          .count();
  if (elapsed > budget_s) {
    detail << " over-budget=" << budget_s << "s";
    ok = false;
  }
  std::cout << (ok ? "PASS" : "FAIL") << " criterion-" << idx << " " << name
            << detail.str() << " wall_s=" << elapsed << std::endl;
  if (!ok) ++failures;
}

// Fixed desk-scale corpus: every generator family through 8 vertices
// plus 200 seeded random connected graphs.
std::vector<Graph> build_corpus() {
  std::vector<Graph> out;
  for (int n = 2; n <= 8; ++n) out.push_back(complete_graph(n));
  for (int n = 3; n <= 8; ++n) out.push_back(cycle_graph(n));
  for (int n = 2; n <= 8; ++n) out.push_back(path_graph(n));
  for (int d = 1; d <= 3; ++d) out.push_back(hypercube_graph(d));
  for (int a = 1; a <= 4; ++a) {
    for (int b = a; a + b <= 8; ++b) out.push_back(complete_bipartite_graph(a, b));
  }

  std::mt19937_64 rng(20260816);
  std::uniform_int_distribution<int> size(2, 8);
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  int made = 0;
  while (made < 200) {
    const int n = size(rng);
    const double prob = 0.25 + 0.65 * unit(rng);
    std::vector<Edge> edges;
    for (int u = 0; u < n; ++u) {
      for (int v = u + 1; v < n; ++v) {
        if (unit(rng) < prob) edges.emplace_back(u, v);
      }
    }
    Graph g(n, std::move(edges));
    if (!is_connected(g)) continue;
    out.push_back(std::move(g));
    ++made;
  }
  return out;
}

Bundle twisted_torus() {
  BundleSpec spec(cycle_graph(4), cycle_graph(4));
  spec.set_twist(0, 3, Permutation{1, 2, 3, 0});
  return Bundle(spec);
}

}  // namespace

int main() {
  const std::vector<Graph> corpus = build_corpus();
  std::cout << "corpus-size " << corpus.size() << std::endl;

  run_criterion(1, "flow-vs-bruteforce", 60.0, [&](std::ostringstream& d) {
    int bad = 0;
    for (const Graph& g : corpus) {
      if (vertex_connectivity(g) != vertex_connectivity_bruteforce(g)) ++bad;
      if (edge_connectivity(g) != edge_connectivity_bruteforce(g)) ++bad;
    }
    d << " graphs=" << corpus.size() << " mismatches=" << bad;
    return bad == 0;
  });

  run_criterion(2, "decision-vs-oracle", 300.0, [&](std::ostringstream& d) {
    long long checked = 0;
    int bad = 0;
    for (const Graph& g : corpus) {
      const int lambda = edge_connectivity(g);
      for (int p = 0; p <= lambda; ++p) {
        for (int q = 0; p + q <= lambda; ++q) {
          if (p + q < 1) continue;
          ++checked;
          if (is_mixed_connected(g, {p, q}) !=
              is_mixed_connected_oracle(g, {p, q}))
            ++bad;
        }
      }
    }
    d << " queries=" << checked << " mismatches=" << bad;
    return bad == 0;
  });

  run_criterion(3, "profile-invariants", 120.0, [&](std::ostringstream& d) {
    int bad = 0;
    for (const Graph& g : corpus) {
      const MixedProfile prof = mixed_profile(g);
      if (prof.frontier.front() != std::pair<int, int>{0, prof.lambda}) ++bad;
      if (prof.frontier.back() != std::pair<int, int>{prof.kappa, 0}) ++bad;
      for (std::size_t i = 0; i + 1 < prof.frontier.size(); ++i) {
        if (prof.frontier[i].second < prof.frontier[i + 1].second + 1) ++bad;
      }
      if (prof.kappa == prof.lambda) {
        for (int i = 0; i <= prof.kappa + 1; ++i) {
          for (int j = 0; i + j <= prof.kappa + 1; ++j) {
            if (i + j < 1) continue;
            if (is_mixed_connected(g, {i, j}) != (i + j <= prof.kappa)) ++bad;
          }
        }
      }
    }
    d << " graphs=" << corpus.size() << " violations=" << bad;
    return bad == 0;
  });

  run_criterion(4, "shift-property", 300.0, [&](std::ostringstream& d) {
    long long checked = 0;
    int bad = 0;
    for (const Graph& g : corpus) {
      const int lambda = edge_connectivity(g);
      for (int p = 1; p <= lambda; ++p) {
        for (int q = 1; p + q <= lambda; ++q) {
          if (!is_mixed_connected(g, {p, q})) continue;
          ++checked;
          if (!is_mixed_connected(g, {p - 1, q + 1})) ++bad;
        }
      }
    }
    d << " shifts=" << checked << " violations=" << bad;
    return bad == 0;
  });

  run_criterion(5, "bundle-battery", 600.0, [&](std::ostringstream& d) {
    const auto reports = default_battery();
    int verified = 0, sampled = 0, other = 0;
    for (const auto& r : reports) {
      if (r.sampled) ++sampled;
      if (r.result == VerifyResult::Verified) {
        ++verified;
      } else {
        ++other;
        if (other <= 3) d << " bad{" << format_report(r) << "}";
      }
    }
    d << " reports=" << reports.size() << " verified=" << verified
      << " sampled=" << sampled;
    return other == 0 && sampled == 0 && !reports.empty();
  });

  run_criterion(6, "product-claims", 120.0, [&](std::ostringstream& d) {
    bool ok = true;
    std::vector<Graph> cube{complete_graph(2), complete_graph(2),
                            complete_graph(2)};
    if (cartesian_product(cube) != hypercube_graph(3)) ok = false;
    const auto q3 = verify_product_corollary(cube, {{0, 1}, {0, 1}, {0, 1}});
    // Claims (0,3) and (2,1) on the 3-cube.
    for (const auto& r : q3) {
      if (r.result != VerifyResult::Verified) ok = false;
      d << " " << r.statement << r.claim << "="
        << (r.result == VerifyResult::Verified ? "ok" : "BAD");
    }
    const auto k3c4 = verify_product_corollary(
        {complete_graph(3), cycle_graph(4)}, {{1, 1}, {1, 1}});
    // Claims (2,2) and (3,1) on K3 x C4.
    for (const auto& r : k3c4) {
      if (r.result != VerifyResult::Verified) ok = false;
      d << " " << r.statement << r.claim << "="
        << (r.result == VerifyResult::Verified ? "ok" : "BAD");
    }
    return ok;
  });

  run_criterion(7, "witness-pair", 300.0, [&](std::ostringstream& d) {
    const WitnessPair w = find_witness_pair(8, 0);
    bool ok = true;
    if (w.kappa != 2 || w.lambda != 3) ok = false;
    if (vertex_connectivity(w.g1) != 2 || edge_connectivity(w.g1) != 3)
      ok = false;
    if (vertex_connectivity(w.g2) != 2 || edge_connectivity(w.g2) != 3)
      ok = false;
    if (w.query.p != 1 || w.query.q != 2) ok = false;
    if (is_mixed_connected(w.g1, w.query)) ok = false;
    if (!is_mixed_connected(w.g2, w.query)) ok = false;
    // The certificate must replay: p vertices, at most q-1 edges, and
    // the remnant falls apart.
    if (static_cast<int>(w.certificate.vertices.size()) != w.query.p)
      ok = false;
    if (static_cast<int>(w.certificate.edges.size()) > w.query.q - 1)
      ok = false;
    if (is_connected(deleted(w.g1, w.certificate).graph)) ok = false;
    d << " n1=" << w.g1.vertex_count() << " n2=" << w.g2.vertex_count()
      << " certificate=" << format_fault_list(w.certificate).size() << "B";
    return ok;
  });

  run_criterion(8, "routing-sweep", 600.0, [&](std::ostringstream& d) {
    const Bundle b = twisted_torus();
    const FaultBudget budget{1, 1, 1, 1};
    RouteOptions opts;
    opts.check_connectivity_assumptions = false;  // verified in criterion 5

    const int n = b.total().vertex_count();
    const auto& edges = b.total().edges();
    long long routes = 0, constructive = 0, invalid = 0;

    auto sweep_pairs = [&](const FaultSet& f) {
      std::vector<char> dead(n, 0);
      for (int v : f.vertices) dead[v] = 1;
      for (int x = 0; x < n; ++x) {
        if (dead[x]) continue;
        for (int y = x + 1; y < n; ++y) {
          if (dead[y]) continue;
          const RouteResult r = route(b, budget, f, x, y, opts);
          ++routes;
          if (r.strategy == RouteStrategy::Constructive) ++constructive;
          if (!route_validate(b, f, r.path) || r.path.vertices.front() != x ||
              r.path.vertices.back() != y)
            ++invalid;
        }
      }
    };

    // Vertex placements up to the full vertex budget, no edges.
    std::vector<std::vector<int>> vsets{{}};
    for (int a = 0; a < n; ++a) {
      vsets.push_back({a});
      for (int bb = a + 1; bb < n; ++bb) {
        vsets.push_back({a, bb});
        for (int c = bb + 1; c < n; ++c) vsets.push_back({a, bb, c});
      }
    }
    for (const auto& vs : vsets) sweep_pairs(FaultSet::of(vs, {}));

    // Up to two vertices plus exactly one edge.
    for (const auto& vs : vsets) {
      if (vs.size() > 2) continue;
      for (const Edge& e : edges) {
        std::vector<char> dead(n, 0);
        for (int v : vs) dead[v] = 1;
        if (dead[e.u] || dead[e.v]) continue;  // edge already gone
        sweep_pairs(FaultSet::of(vs, {e}));
      }
    }

    d << " routes=" << routes << " constructive=" << constructive
      << " invalid=" << invalid;
    return routes > 0 && constructive == routes && invalid == 0;
  });

  run_criterion(9, "edge-sum-strengthening", 60.0, [&](std::ostringstream& d) {
    BundleSpec spec(complete_graph(2), complete_graph(2));
    Bundle b(spec);
    bool ok = isomorphic(b.total(), cycle_graph(4));

    const auto reports = verify_bundle_theorem(spec, 0, 1, 0, 1);
    bool claim2 = false;
    for (const auto& r : reports) {
      if (r.result != VerifyResult::Verified) ok = false;
      if (r.statement == "bundle-claim-2" && r.claim == "(1,1)")
        claim2 = (r.result == VerifyResult::Verified);
    }
    // (1,1) is strictly beyond what the edge-only sum (0,2) implies.
    const auto closure = implication_closure({0, 2});
    bool inside = false;
    for (const MixedQuery& t : closure) {
      if (t == MixedQuery{1, 1}) inside = true;
    }
    d << " claim2=" << (claim2 ? "ok" : "missing")
      << " implied-by-(0,2)=" << (inside ? "yes" : "no");
    return ok && claim2 && !inside;
  });

  std::cout << (failures == 0 ? "ACCEPTANCE PASS" : "ACCEPTANCE FAIL")
            << " failed=" << failures << std::endl;
  return failures == 0 ? 0 : 1;
}
