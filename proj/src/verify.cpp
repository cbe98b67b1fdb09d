#include "mixcon/verify.hpp"

#include <algorithm>
#include <chrono>
#include <numeric>
#include <random>
#include <sstream>
#include <stdexcept>

#include "json.hpp"
#include "mixcon/iso.hpp"

namespace mixcon {

namespace {

std::string graph_sig(const Graph& g) {
  std::ostringstream os;
  os << g.vertex_count() << ':';
  bool first = true;
  for (const Edge& e : g.edges()) {
    if (!first) os << ',';
    first = false;
    os << e.u << '-' << e.v;
  }
  return os.str();
}

std::string spec_sig(const BundleSpec& spec) {
  std::ostringstream os;
  os << "fibre=" << graph_sig(spec.fibre()) << ";base=" << graph_sig(spec.base())
     << ";twists=";
  auto twists = spec.nontrivial_twists();
  if (twists.empty()) {
    os << "none";
  } else {
    bool first = true;
    for (const auto& [u, v, perm] : twists) {
      if (!first) os << '+';
      first = false;
      os << u << '-' << v << ':';
      for (size_t i = 0; i < perm.size(); ++i) {
        if (i) os << '.';
        os << perm[i];
      }
    }
  }
  return os.str();
}

std::string claim_str(MixedQuery t) {
  return "(" + std::to_string(t.p) + "," + std::to_string(t.q) + ")";
}

std::string result_str(VerifyResult r) {
  switch (r) {
    case VerifyResult::Verified: return "verified";
    case VerifyResult::Counterexample: return "counterexample";
    case VerifyResult::PreconditionFailed: return "precondition-failed";
  }
  return "unknown";
}

std::string cert_str(const std::optional<FaultSet>& c) {
  if (!c) return "none";
  std::ostringstream os;
  os << "v=";
  for (size_t i = 0; i < c->vertices.size(); ++i) {
    if (i) os << ',';
    os << c->vertices[i];
  }
  os << ";e=";
  for (size_t i = 0; i < c->edges.size(); ++i) {
    if (i) os << ',';
    os << c->edges[i].u << '-' << c->edges[i].v;
  }
  return os.str();
}

struct ClaimCheck {
  VerifyResult result;
  std::optional<FaultSet> certificate;
  bool sampled = false;
};

// Seeded sampling for instances too large to enumerate: random vertex
// sets of the claimed size plus random surviving edges.
ClaimCheck sample_claim(const Graph& g, MixedQuery t,
                        const VerifyOptions& opt) {
  std::mt19937_64 rng(opt.seed ^
                      (0x9e3779b97f4a7c15ull * (t.p * 131 + t.q + 1)));
  const int n = g.vertex_count();
  const int nv = t.q == 0 ? t.p - 1 : t.p;
  if (nv < 0 || nv > n) return {VerifyResult::Verified, std::nullopt, true};
  std::vector<int> ids(n);
  std::iota(ids.begin(), ids.end(), 0);
  for (int s = 0; s < opt.samples; ++s) {
    std::shuffle(ids.begin(), ids.end(), rng);
    FaultSet f = FaultSet::of({ids.begin(), ids.begin() + nv}, {});
    DeletedGraph d = deleted(g, f);
    if (t.q >= 1) {
      const int ne = t.q - 1;
      if (d.graph.edge_count() < ne) continue;  // dominated scenario
      std::vector<int> eids(d.graph.edge_count());
      std::iota(eids.begin(), eids.end(), 0);
      std::shuffle(eids.begin(), eids.end(), rng);
      std::vector<Edge> survivors;
      std::vector<Edge> original;
      for (int i = 0; i < d.graph.edge_count(); ++i) {
        const Edge& e = d.graph.edges()[eids[i]];
        if (i < ne)
          original.push_back(Edge(d.original_of(e.u), d.original_of(e.v)));
        else
          survivors.push_back(e);
      }
      if (!is_connected(Graph(d.graph.vertex_count(), survivors))) {
        f.edges = std::move(original);
        std::sort(f.edges.begin(), f.edges.end());
        return {VerifyResult::Counterexample, f, true};
      }
    } else if (!is_connected(d.graph)) {
      return {VerifyResult::Counterexample, f, true};
    }
  }
  return {VerifyResult::Verified, std::nullopt, true};
}

ClaimCheck check_claim(const Graph& g, MixedQuery t,
                       const VerifyOptions& opt) {
  if (g.vertex_count() > opt.exhaustive_limit) return sample_claim(g, t, opt);
  if (is_mixed_connected(g, t)) return {VerifyResult::Verified, std::nullopt};
  // find_disconnecting yields nullopt when the failure is definitional
  // (parameters that no fault set can witness); keep certificate empty then.
  return {VerifyResult::Counterexample, find_disconnecting(g, t)};
}

TheoremReport run_claim(std::string statement, std::string instance,
                        const Graph& g, MixedQuery claim, bool pre_ok,
                        const VerifyOptions& opt) {
  TheoremReport r;
  r.statement = std::move(statement);
  r.instance = std::move(instance);
  r.claim = claim_str(claim);
  const auto t0 = std::chrono::steady_clock::now();
  if (!pre_ok) {
    r.result = VerifyResult::PreconditionFailed;
  } else {
    ClaimCheck cc = check_claim(g, claim, opt);
    r.result = cc.result;
    r.certificate = std::move(cc.certificate);
    r.sampled = cc.sampled;
  }
  r.wall_ms = std::chrono::duration<double, std::milli>(
                  std::chrono::steady_clock::now() - t0)
                  .count();
  return r;
}

bool holds(const Graph& g, int p, int q) {
  if (p < 0 || q < 0 || p + q < 1) return false;
  return is_mixed_connected(g, MixedQuery{p, q});
}

}  // namespace

std::string format_report(const TheoremReport& r) {
  std::ostringstream os;
  os << "statement=" << r.statement << " instance=" << r.instance
     << " claim=" << r.claim << " result=" << result_str(r.result)
     << " certificate=" << cert_str(r.certificate)
     << " sampled=" << (r.sampled ? 1 : 0);
  os.setf(std::ios::fixed);
  os.precision(2);
  os << " wall_ms=" << r.wall_ms;
  return os.str();
}

std::string report_to_json(const TheoremReport& r) {
  nlohmann::json j;
  j["statement"] = r.statement;
  j["instance"] = r.instance;
  j["claim"] = r.claim;
  j["result"] = result_str(r.result);
  if (r.certificate) {
    nlohmann::json edges = nlohmann::json::array();
    for (const Edge& e : r.certificate->edges) edges.push_back({e.u, e.v});
    j["certificate"] = {{"vertices", r.certificate->vertices},
                        {"edges", edges}};
  } else {
    j["certificate"] = nullptr;
  }
  j["sampled"] = r.sampled;
  j["wall_ms"] = r.wall_ms;
  return j.dump();
}

std::vector<TheoremReport> verify_bundle_theorem(const BundleSpec& spec,
                                                 int pf, int qf, int pb,
                                                 int qb,
                                                 const VerifyOptions& opt) {
  std::ostringstream inst;
  inst << spec_sig(spec) << ";params=" << pf << ',' << qf << ',' << pb << ','
       << qb;
  const bool pre = holds(spec.fibre(), pf, qf) && holds(spec.base(), pb, qb);
  Bundle b(spec);
  std::vector<TheoremReport> out;
  out.push_back(run_claim("bundle-claim-1", inst.str(), b.total(),
                          MixedQuery{pf + pb, qf + qb}, pre, opt));
  if (qf > 0 && qb > 0)
    out.push_back(run_claim("bundle-claim-2", inst.str(), b.total(),
                            MixedQuery{pf + pb + 1, qf + qb - 1}, pre, opt));
  return out;
}

std::vector<TheoremReport> verify_product_corollary(
    const std::vector<Graph>& factors, const std::vector<MixedQuery>& params,
    const VerifyOptions& opt) {
  if (factors.empty() || factors.size() != params.size())
    throw std::invalid_argument(
        "verify_product_corollary: need one (p,q) per factor");
  std::ostringstream inst;
  inst << "factors=";
  for (size_t i = 0; i < factors.size(); ++i) {
    if (i) inst << '|';
    inst << graph_sig(factors[i]);
  }
  inst << ";params=";
  for (size_t i = 0; i < params.size(); ++i) {
    if (i) inst << ',';
    inst << claim_str(params[i]);
  }

  bool pre = true;
  int sum_p = 0;
  int sum_q = 0;
  int k = 0;
  for (size_t i = 0; i < factors.size(); ++i) {
    pre = pre && holds(factors[i], params[i].p, params[i].q);
    sum_p += params[i].p;
    sum_q += params[i].q;
    if (params[i].q > 0) ++k;
  }
  Graph prod = cartesian_product(factors);
  std::vector<TheoremReport> out;
  out.push_back(run_claim("product-claim-1", inst.str(), prod,
                          MixedQuery{sum_p, sum_q}, pre, opt));
  if (k >= 1)
    out.push_back(run_claim("product-claim-2", inst.str(), prod,
                            MixedQuery{sum_p + k - 1, sum_q - k + 1}, pre,
                            opt));
  return out;
}

std::vector<TheoremReport> verify_special_cases(
    const std::vector<Graph>& corpus, const VerifyOptions& opt) {
  std::vector<TheoremReport> out;

  for (const Graph& g : corpus) {
    const std::string inst = "graph=" + graph_sig(g);
    TheoremReport r;
    r.statement = "shift-implication";
    r.instance = inst;
    r.claim = "all-frontier-shifts";
    const auto t0 = std::chrono::steady_clock::now();
    if (!is_connected(g) || g.vertex_count() < 2) {
      r.result = VerifyResult::PreconditionFailed;
    } else {
      for (auto [fp, fq] : mixed_profile(g).frontier) {
        if (fp == 0) continue;
        MixedQuery shifted{fp - 1, fq + 1};
        if (!is_mixed_connected(g, shifted)) {
          r.result = VerifyResult::Counterexample;
          r.claim = claim_str(shifted);
          r.certificate = find_disconnecting(g, shifted);
          break;
        }
      }
    }
    r.wall_ms = std::chrono::duration<double, std::milli>(
                    std::chrono::steady_clock::now() - t0)
                    .count();
    out.push_back(std::move(r));
  }

  for (size_t i = 0; i < corpus.size(); ++i) {
    for (size_t j = i; j < corpus.size(); ++j) {
      const Graph& a = corpus[i];
      const Graph& b = corpus[j];
      if (a.vertex_count() < 2 || b.vertex_count() < 2) continue;
      if (!is_connected(a) || !is_connected(b)) continue;
      const int ka = vertex_connectivity(a);
      const int kb = vertex_connectivity(b);
      const int la = edge_connectivity(a);
      const int lb = edge_connectivity(b);
      Graph prod = cartesian_product({a, b});
      const std::string inst =
          "factors=" + graph_sig(a) + "|" + graph_sig(b);
      out.push_back(run_claim("vertex-only-sum", inst, prod,
                              MixedQuery{ka + kb, 0}, true, opt));
      out.push_back(run_claim("edge-only-sum", inst, prod,
                              MixedQuery{0, la + lb}, true, opt));
      out.push_back(run_claim("edge-sum-strengthening", inst, prod,
                              MixedQuery{1, la + lb - 1}, true, opt));
    }
  }
  return out;
}

std::vector<TheoremReport> default_battery(const VerifyOptions& opt) {
  struct Entry {
    const char* name;
    Graph g;
  };
  const std::vector<Entry> zoo = {
      {"K2", complete_graph(2)},  {"K3", complete_graph(3)},
      {"K4", complete_graph(4)},  {"C3", cycle_graph(3)},
      {"C4", cycle_graph(4)},     {"C5", cycle_graph(5)},
      {"K2,3", complete_bipartite_graph(2, 3)},
  };

  std::vector<TheoremReport> out;
  for (const Entry& fe : zoo) {
    const auto fibre_frontier = mixed_profile(fe.g).frontier;
    const auto twist = find_nontrivial_automorphism(fe.g);
    for (const Entry& be : zoo) {
      if (fe.g.vertex_count() * be.g.vertex_count() > opt.exhaustive_limit)
        continue;
      const auto base_frontier = mixed_profile(be.g).frontier;
      for (int twisted = 0; twisted <= 1; ++twisted) {
        if (twisted && !twist) continue;
        BundleSpec spec(be.g, fe.g);
        if (twisted) {
          const Edge e = be.g.edges().back();
          spec.set_twist(e.u, e.v, *twist);
        }
        for (auto [fp, fq] : fibre_frontier)
          for (auto [bp, bq] : base_frontier) {
            auto reports = verify_bundle_theorem(spec, fp, fq, bp, bq, opt);
            out.insert(out.end(), std::make_move_iterator(reports.begin()),
                       std::make_move_iterator(reports.end()));
          }
      }
    }
  }

  // Two classic instances: the twisted torus, and the bundle over C3
  // with fibre K2 and one swap, which is K_{3,3}.
  {
    BundleSpec spec(cycle_graph(4), cycle_graph(4));
    spec.set_twist(0, 3, Permutation{1, 2, 3, 0});
    auto reports = verify_bundle_theorem(spec, 1, 1, 1, 1, opt);
    out.insert(out.end(), std::make_move_iterator(reports.begin()),
               std::make_move_iterator(reports.end()));
  }
  {
    BundleSpec spec(cycle_graph(3), complete_graph(2));
    spec.set_twist(0, 2, Permutation{1, 0});
    auto reports = verify_bundle_theorem(spec, 0, 1, 0, 2, opt);
    out.insert(out.end(), std::make_move_iterator(reports.begin()),
               std::make_move_iterator(reports.end()));
  }
  return out;
}

}  // namespace mixcon
