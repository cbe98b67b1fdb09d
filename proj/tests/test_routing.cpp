#include "mixcon/routing.hpp"

#include <algorithm>
#include <set>

#include "doctest.h"
#include "mixcon/bundle.hpp"
#include "mixcon/graph.hpp"

using namespace mixcon;

namespace {

Bundle twisted_torus() {
  BundleSpec spec(cycle_graph(4), cycle_graph(4));
  spec.set_twist(0, 3, Permutation{1, 2, 3, 0});
  return Bundle(spec);
}

Bundle prism() { return Bundle(BundleSpec(cycle_graph(3), complete_graph(2))); }

// Every subset of size <= k from pool, as sorted id vectors.
void subsets_upto(int pool, int k, std::vector<std::vector<int>>& out) {
  out.push_back({});
  std::vector<std::vector<int>> frontier{{}};
  for (int round = 0; round < k; ++round) {
    std::vector<std::vector<int>> next;
    for (const auto& s : frontier) {
      const int lo = s.empty() ? 0 : s.back() + 1;
      for (int v = lo; v < pool; ++v) {
        auto t = s;
        t.push_back(v);
        out.push_back(t);
        next.push_back(std::move(t));
      }
    }
    frontier = std::move(next);
  }
}

}  // namespace

TEST_CASE("fault weights split by edge kind") {
  Bundle b = twisted_torus();
  FaultSet f = FaultSet::of(
      {b.encode(1, 2)},
      {Edge(b.encode(2, 0), b.encode(2, 1)),     // degenerate, fibre 2
       Edge(b.encode(0, 0), b.encode(1, 0))});   // crossing over base 0-1
  FaultWeights w = fault_weights(b, f);
  CHECK(w.wx(1) == 1);
  CHECK(w.wx(0) == 0);
  CHECK(w.wy(2) == 1);
  CHECK(w.wy(1) == 0);
  CHECK(w.crossing(0, 1) == 1);
  CHECK(w.crossing(1, 0) == 1);
  CHECK(w.crossing(1, 2) == 0);
  CHECK(w.path_weight(Path{{0, 1, 2}}) == 1);
  CHECK(w.path_weight(Path{{2, 3}}) == 0);

  CHECK_THROWS_AS(fault_weights(b, FaultSet::of({99}, {})),
                  std::invalid_argument);
}

TEST_CASE("fibre status tracks deletions inside one fibre") {
  Bundle b = twisted_torus();
  // Two opposite edges cut fibre 2's C4 into halves; all of fibre 3 dies.
  FaultSet f = FaultSet::of(
      {b.encode(3, 0), b.encode(3, 1), b.encode(3, 2), b.encode(3, 3)},
      {Edge(b.encode(2, 0), b.encode(2, 1)),
       Edge(b.encode(2, 2), b.encode(2, 3))});
  auto status = connected_fibres(b, f);
  CHECK(status[0] == FibreStatus::Connected);
  CHECK(status[1] == FibreStatus::Connected);
  CHECK(status[2] == FibreStatus::Disconnected);
  CHECK(status[3] == FibreStatus::Annihilated);
}

TEST_CASE("budget envelope arithmetic") {
  FaultBudget budget{1, 1, 1, 1};
  CHECK(budget.max_vertex_faults() == 3);
  CHECK(budget.max_edge_faults() == 1);
  CHECK(budget.max_total_faults() == 3);

  Bundle b = twisted_torus();
  auto vf = [&](int k) {
    std::vector<int> ids;
    for (int i = 0; i < k; ++i) ids.push_back(i);
    return FaultSet::of(ids, {});
  };
  CHECK(budget.admits(vf(3)));
  CHECK(!budget.admits(vf(4)));
  CHECK(budget.admits(FaultSet::of({0, 1}, {Edge(8, 9)})));
  CHECK(!budget.admits(FaultSet::of({0, 1, 2}, {Edge(8, 9)})));
  CHECK(!budget.admits(FaultSet::of({}, {Edge(8, 9), Edge(10, 11)})));
}

TEST_CASE("route handles the trivial and the easy cases") {
  Bundle b = twisted_torus();
  FaultBudget budget{1, 1, 1, 1};

  RouteResult same = route(b, budget, {}, 5, 5);
  CHECK(same.path == Path{{5}});
  CHECK(same.strategy == RouteStrategy::Constructive);
  CHECK(same.cases == std::vector<std::string>{"trivial"});

  RouteResult clean = route(b, budget, {}, 0, 10);
  CHECK(clean.strategy == RouteStrategy::Constructive);
  CHECK(route_validate(b, {}, clean.path));
  CHECK(clean.path.vertices.front() == 0);
  CHECK(clean.path.vertices.back() == 10);

  // Both endpoints over the same base vertex, fibre intact.
  RouteResult inside = route(b, budget, {}, b.encode(2, 0), b.encode(2, 3));
  CHECK(inside.strategy == RouteStrategy::Constructive);
  CHECK(std::find(inside.cases.begin(), inside.cases.end(), "same-fibre") !=
        inside.cases.end());
}

TEST_CASE("route rejects bad inputs") {
  Bundle b = twisted_torus();
  FaultBudget budget{1, 1, 1, 1};
  CHECK_THROWS_AS(route(b, budget, FaultSet::of({0, 1, 2, 3}, {}), 8, 9),
                  BudgetExceeded);
  CHECK_THROWS_AS(route(b, budget, {}, -1, 3), std::invalid_argument);
  CHECK_THROWS_AS(route(b, budget, FaultSet::of({5}, {}), 5, 8),
                  std::invalid_argument);  // dead endpoint
  FaultBudget zero_q{1, 0, 1, 1};
  CHECK_THROWS_AS(route(b, zero_q, {}, 0, 5), std::invalid_argument);
  // The budget claims fibre (2,1)-connectivity that C4 does not have.
  FaultBudget too_strong{2, 1, 1, 1};
  CHECK_THROWS_AS(route(b, too_strong, {}, 0, 5), std::invalid_argument);
}

TEST_CASE("route validation checks path and fault avoidance") {
  Bundle b = twisted_torus();
  FaultSet f = FaultSet::of({5}, {Edge(0, 1)});
  CHECK(route_validate(b, f, Path{{1, 2, 3}}));
  CHECK(!route_validate(b, f, Path{{4, 5, 6}}));   // runs through the fault
  CHECK(!route_validate(b, f, Path{{0, 1, 2}}));   // uses the dead edge
  CHECK(!route_validate(b, f, Path{{0, 2}}));      // not a path
  CHECK(!route_validate(b, f, Path{{}}));
}

TEST_CASE("exhaustive sweep on the prism stays constructive") {
  Bundle b = prism();
  // Fibre K2 is (0,1)-connected, base C3 is (0,2)-connected.
  FaultBudget budget{0, 1, 0, 2};
  REQUIRE(budget.max_vertex_faults() == 1);
  REQUIRE(budget.max_edge_faults() == 2);
  REQUIRE(budget.max_total_faults() == 2);

  const int n = b.total().vertex_count();
  const auto& edges = b.total().edges();

  std::vector<std::vector<int>> vsets;
  subsets_upto(n, 1, vsets);
  std::vector<std::vector<int>> esets;
  subsets_upto(static_cast<int>(edges.size()), 2, esets);

  int routed = 0;
  for (const auto& vs : vsets) {
    for (const auto& es : esets) {
      if (vs.size() + es.size() > 2) continue;
      std::vector<Edge> fe;
      for (int id : es) fe.push_back(edges[id]);
      FaultSet f = FaultSet::of(vs, fe);
      if (!budget.admits(f)) continue;
      std::vector<char> dead(n, 0);
      for (int v : f.vertices) dead[v] = 1;
      for (int x = 0; x < n; ++x) {
        if (dead[x]) continue;
        for (int y = x + 1; y < n; ++y) {
          if (dead[y]) continue;
          RouteResult r = route(b, budget, f, x, y);
          ++routed;
          CAPTURE(x);
          CAPTURE(y);
          CHECK(r.strategy == RouteStrategy::Constructive);
          CHECK(route_validate(b, f, r.path));
          CHECK(r.path.vertices.front() == x);
          CHECK(r.path.vertices.back() == y);
        }
      }
    }
  }
  CHECK(routed > 1000);
}

TEST_CASE("fallback covers instances outside the theory") {
  // Base path 0-1-2 is not (0,2)-connected: cutting both lifts of one
  // base edge separates the ladder. The router must notice and either
  // refuse (checked mode) or fall back / fail loudly (trusted mode).
  BundleSpec spec(path_graph(3), complete_graph(2));
  Bundle b(spec);
  FaultBudget budget{0, 1, 0, 2};

  CHECK_THROWS_AS(route(b, budget, {}, 0, 4), std::invalid_argument);

  RouteOptions trusted;
  trusted.check_connectivity_assumptions = false;

  // Benign fault: a valid route still comes out, whatever the strategy.
  FaultSet one_edge = FaultSet::of({}, {Edge(0, 1)});
  RouteResult r = route(b, budget, one_edge, 0, 4, trusted);
  CHECK(route_validate(b, one_edge, r.path));

  // Disconnecting fault pair: no path exists, the router must say so.
  FaultSet cut = FaultSet::of({}, {Edge(0, 2), Edge(1, 3)});
  CHECK_THROWS_AS(route(b, budget, cut, 0, 4, trusted), InvariantViolation);
}
