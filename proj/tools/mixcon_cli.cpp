// Command-line front end. Thin wrapper: every subcommand is one library
// call plus output formatting. Exit codes: 0 ok, 1 domain error, 2 usage.

#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"
#include "mixcon/bundle.hpp"
#include "mixcon/connectivity.hpp"
#include "mixcon/graph.hpp"
#include "mixcon/routing.hpp"
#include "mixcon/verify.hpp"

using namespace mixcon;
using nlohmann::json;

namespace {

Graph read_graph(const std::string& path) {
  if (path == "-") return parse_edge_list(std::cin);
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open " + path);
  return parse_edge_list(in);
}

BundleSpec read_spec(const std::string& path) {
  if (path == "-") return parse_bundle_spec(std::cin);
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open " + path);
  return parse_bundle_spec(in);
}

std::string lambda_str(int l) {
  return l == kInfiniteEdgeConnectivity ? "inf" : std::to_string(l);
}

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

std::string fault_str(const FaultSet& f) {
  std::ostringstream os;
  os << "v=";
  for (size_t i = 0; i < f.vertices.size(); ++i) {
    if (i) os << ',';
    os << f.vertices[i];
  }
  os << ";e=";
  for (size_t i = 0; i < f.edges.size(); ++i) {
    if (i) os << ',';
    os << f.edges[i].u << '-' << f.edges[i].v;
  }
  return os.str();
}

json fault_json(const FaultSet& f) {
  json edges = json::array();
  for (const Edge& e : f.edges) edges.push_back({e.u, e.v});
  return json{{"vertices", f.vertices}, {"edges", edges}};
}

json graph_json(const Graph& g) {
  json edges = json::array();
  for (const Edge& e : g.edges()) edges.push_back({e.u, e.v});
  return json{{"n", g.vertex_count()}, {"edges", edges}};
}

std::vector<int> parse_ints(const std::string& s, size_t want,
                            const char* what) {
  std::vector<int> out;
  std::stringstream ss(s);
  std::string tok;
  while (std::getline(ss, tok, ',')) out.push_back(std::stoi(tok));
  if (out.size() != want)
    throw std::invalid_argument(std::string(what) + ": expected " +
                                std::to_string(want) + " comma-separated ints");
  return out;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"mixed (p,q)-connectivity toolkit"};
  app.require_subcommand(1);
  app.fallthrough();

  bool as_json = false;
  std::uint64_t seed = 0;
  int threads = 0;
  app.add_flag("--json", as_json, "structured output instead of key=value");
  CLI::Option* seed_opt =
      app.add_option("--seed", seed, "seed for randomized search");
  app.add_option("--threads", threads,
                 "worker threads for enumeration (0 = auto, 1 = sequential)");
  app.parse_complete_callback([&] { set_threads(threads); });

  // analyze
  std::string analyze_path;
  auto* analyze =
      app.add_subcommand("analyze", "basic and connectivity invariants");
  analyze->add_option("graph", analyze_path, "edge-list file or -")
      ->required();
  analyze->callback([&] {
    Graph g = read_graph(analyze_path);
    const int kappa = vertex_connectivity(g);
    const int lambda = edge_connectivity(g);
    if (as_json) {
      json j{{"n", g.vertex_count()},
             {"m", g.edge_count()},
             {"delta", g.min_degree()},
             {"kappa", kappa}};
      if (lambda == kInfiniteEdgeConnectivity)
        j["lambda"] = nullptr;
      else
        j["lambda"] = lambda;
      std::cout << j.dump() << "\n";
    } else {
      std::cout << "n=" << g.vertex_count() << "\nm=" << g.edge_count()
                << "\ndelta=" << g.min_degree() << "\nkappa=" << kappa
                << "\nlambda=" << lambda_str(lambda) << "\n";
    }
  });

  // decide
  std::string decide_path;
  int dp = 0, dq = 0;
  bool want_cert = false, use_oracle = false;
  auto* decide = app.add_subcommand("decide", "test (p,q)-connectivity");
  decide->add_option("graph", decide_path, "edge-list file or -")->required();
  decide->add_option("-p", dp, "vertex fault tolerance")->required();
  decide->add_option("-q", dq, "edge fault tolerance")->required();
  decide->add_flag("--certificate", want_cert,
                   "print a disconnecting fault set on false");
  decide->add_flag("--oracle", use_oracle,
                   "use the brute-force cross-check instead");
  decide->callback([&] {
    Graph g = read_graph(decide_path);
    MixedQuery t{dp, dq};
    if (!t.valid())
      throw std::invalid_argument("decide: need p, q >= 0 and p + q >= 1");
    const bool ok =
        use_oracle ? is_mixed_connected_oracle(g, t) : is_mixed_connected(g, t);
    std::optional<FaultSet> cert;
    if (!ok && want_cert) cert = find_disconnecting(g, t);
    if (as_json) {
      json j{{"p", dp}, {"q", dq}, {"connected", ok}};
      j["certificate"] = cert ? fault_json(*cert) : json(nullptr);
      std::cout << j.dump() << "\n";
    } else {
      std::cout << (ok ? "true" : "false") << "\n";
      if (cert) std::cout << "certificate=" << fault_str(*cert) << "\n";
    }
  });

  // profile
  std::string profile_path;
  auto* profile =
      app.add_subcommand("profile", "kappa, lambda and the (p,q) frontier");
  profile->add_option("graph", profile_path, "edge-list file or -")
      ->required();
  profile->callback([&] {
    Graph g = read_graph(profile_path);
    MixedProfile prof = mixed_profile(g);
    if (as_json) {
      json fr = json::array();
      for (auto [p, q] : prof.frontier) fr.push_back({p, q});
      json j{{"kappa", prof.kappa}, {"frontier", fr}};
      if (prof.lambda == kInfiniteEdgeConnectivity)
        j["lambda"] = nullptr;
      else
        j["lambda"] = prof.lambda;
      std::cout << j.dump() << "\n";
    } else {
      std::cout << "kappa=" << prof.kappa
                << "\nlambda=" << lambda_str(prof.lambda) << "\nfrontier=";
      for (size_t i = 0; i < prof.frontier.size(); ++i) {
        if (i) std::cout << ',';
        std::cout << '(' << prof.frontier[i].first << ','
                  << prof.frontier[i].second << ')';
      }
      std::cout << "\n";
    }
  });

  // product
  std::vector<std::string> product_paths;
  auto* product =
      app.add_subcommand("product", "Cartesian product of the given graphs");
  product->add_option("graphs", product_paths, "edge-list files ('-' once)")
      ->required()
      ->expected(-1);
  product->callback([&] {
    std::vector<Graph> factors;
    for (const auto& p : product_paths) factors.push_back(read_graph(p));
    std::cout << format_edge_list(cartesian_product(factors));
  });

  // bundle
  std::string bundle_path;
  bool classify = false;
  auto* bundle =
      app.add_subcommand("bundle", "total graph of a bundle description");
  bundle->add_option("spec", bundle_path, "bundle spec file or -")->required();
  bundle->add_flag("--classify", classify,
                   "append '#' comment lines marking each edge's kind");
  bundle->callback([&] {
    Bundle b(read_spec(bundle_path));
    std::cout << format_edge_list(b.total());
    if (classify) {
      for (const Edge& e : b.total().edges())
        std::cout << "# edge " << e.u << '-' << e.v << ' '
                  << (b.classify(e) == EdgeKind::Degenerate ? "degenerate"
                                                            : "nondegenerate")
                  << "\n";
    }
  });

  // verify
  auto* verify =
      app.add_subcommand("verify", "check theorem claims by fault enumeration");
  verify->require_subcommand(1);
  verify->fallthrough();
  int samples = VerifyOptions{}.samples;
  int exhaustive_limit = VerifyOptions{}.exhaustive_limit;
  verify->add_option("--samples", samples,
                     "random scenarios per sampled claim");
  verify->add_option("--limit", exhaustive_limit,
                     "max vertex count for exhaustive enumeration");

  auto emit_reports = [&](const std::vector<TheoremReport>& reports) {
    for (const TheoremReport& r : reports)
      std::cout << (as_json ? report_to_json(r) : format_report(r)) << "\n";
  };
  auto make_opts = [&] {
    VerifyOptions opt;
    opt.samples = samples;
    opt.exhaustive_limit = exhaustive_limit;
    if (seed_opt->count() > 0) opt.seed = seed;
    return opt;
  };

  std::string vb_path, vb_params;
  auto* vb = verify->add_subcommand("bundle", "both bundle claims for a spec");
  vb->add_option("spec", vb_path, "bundle spec file or -")->required();
  vb->add_option("--params", vb_params, "pF,qF,pB,qB")->required();
  vb->callback([&] {
    auto v = parse_ints(vb_params, 4, "--params");
    emit_reports(verify_bundle_theorem(read_spec(vb_path), v[0], v[1], v[2],
                                       v[3], make_opts()));
  });

  std::vector<std::string> vp_paths, vp_pqs;
  auto* vp =
      verify->add_subcommand("product", "product claims for a factor list");
  vp->add_option("graphs", vp_paths, "edge-list files")->required()->expected(
      -1);
  vp->add_option("--pq", vp_pqs, "p,q for one factor (repeat per factor)")
      ->required();
  vp->callback([&] {
    std::vector<Graph> factors;
    for (const auto& p : vp_paths) factors.push_back(read_graph(p));
    std::vector<MixedQuery> params;
    for (const auto& s : vp_pqs) {
      auto v = parse_ints(s, 2, "--pq");
      params.push_back({v[0], v[1]});
    }
    emit_reports(verify_product_corollary(factors, params, make_opts()));
  });

  std::vector<std::string> vs_paths;
  auto* vs =
      verify->add_subcommand("special", "shift and sum claims over a corpus");
  vs->add_option("graphs", vs_paths, "edge-list files")->required()->expected(
      -1);
  vs->callback([&] {
    std::vector<Graph> corpus;
    for (const auto& p : vs_paths) corpus.push_back(read_graph(p));
    emit_reports(verify_special_cases(corpus, make_opts()));
  });

  auto* va = verify->add_subcommand("battery", "built-in fibre/base battery");
  va->callback([&] { emit_reports(default_battery(make_opts())); });

  // route
  std::string route_path, faults_path, budget_str;
  int route_from = 0, route_to = 0;
  bool no_fallback = false, trust_assumptions = false;
  auto* route_cmd =
      app.add_subcommand("route", "fault-avoiding path in a bundle");
  route_cmd->add_option("spec", route_path, "bundle spec file or -")
      ->required();
  route_cmd->add_option("--faults", faults_path,
                        "fault-list file ('v <id>' / 'e <u> <v>' lines)");
  route_cmd->add_option("--from", route_from, "source vertex in the total graph")
      ->required();
  route_cmd->add_option("--to", route_to, "target vertex in the total graph")
      ->required();
  route_cmd->add_option("--budget", budget_str, "pF,qF,pB,qB")->required();
  route_cmd->add_flag("--no-fallback", no_fallback,
                      "fail instead of falling back to plain search");
  route_cmd->add_flag("--trust-assumptions", trust_assumptions,
                      "skip the fibre/base connectivity check");
  route_cmd->callback([&] {
    Bundle b(read_spec(route_path));
    auto v = parse_ints(budget_str, 4, "--budget");
    FaultBudget budget;
    budget.fibre_p = v[0];
    budget.fibre_q = v[1];
    budget.base_p = v[2];
    budget.base_q = v[3];
    FaultSet faults;
    if (!faults_path.empty()) {
      if (faults_path == "-") {
        faults = parse_fault_list(std::cin, b.total());
      } else {
        std::ifstream in(faults_path);
        if (!in) throw std::runtime_error("cannot open " + faults_path);
        faults = parse_fault_list(in, b.total());
      }
    }
    RouteOptions opts;
    opts.allow_fallback = !no_fallback;
    opts.check_connectivity_assumptions = !trust_assumptions;
    RouteResult r = route(b, budget, faults, route_from, route_to, opts);
    const char* strat =
        r.strategy == RouteStrategy::Constructive ? "constructive" : "fallback";
    if (as_json) {
      json j{{"path", r.path.vertices},
             {"length", r.path.length()},
             {"strategy", strat},
             {"cases", r.cases}};
      std::cout << j.dump() << "\n";
    } else {
      std::cout << "path=";
      for (size_t i = 0; i < r.path.vertices.size(); ++i) {
        if (i) std::cout << ',';
        std::cout << r.path.vertices[i];
      }
      std::cout << "\nlength=" << r.path.length() << "\nstrategy=" << strat
                << "\ncases=";
      for (size_t i = 0; i < r.cases.size(); ++i) {
        if (i) std::cout << ',';
        std::cout << r.cases[i];
      }
      std::cout << "\n";
    }
  });

  // witness
  int max_n = 8;
  auto* witness = app.add_subcommand(
      "witness", "graph pair that a mixed query tells apart");
  witness->add_option("--max-n", max_n, "largest graph size to scan");
  witness->callback([&] {
    WitnessPair w = find_witness_pair(max_n, seed);
    if (as_json) {
      json j{{"kappa", w.kappa},         {"lambda", w.lambda},
             {"p", w.query.p},           {"q", w.query.q},
             {"negative", graph_json(w.g1)}, {"positive", graph_json(w.g2)},
             {"certificate", fault_json(w.certificate)}};
      std::cout << j.dump() << "\n";
    } else {
      std::cout << "kappa=" << w.kappa << "\nlambda=" << w.lambda
                << "\np=" << w.query.p << "\nq=" << w.query.q
                << "\nnegative=" << graph_sig(w.g1)
                << "\npositive=" << graph_sig(w.g2)
                << "\ncertificate=" << fault_str(w.certificate) << "\n";
    }
  });

  // gen
  std::string family;
  std::vector<int> gen_params;
  auto* gen = app.add_subcommand("gen", "generate a named graph family");
  gen->add_option("family", family, "K | C | P | Q | Kab | petersen")
      ->required();
  gen->add_option("params", gen_params, "family parameters");
  gen->callback([&] {
    auto need = [&](size_t k) {
      if (gen_params.size() != k)
        throw std::invalid_argument("gen " + family + ": expected " +
                                    std::to_string(k) + " parameter(s)");
    };
    Graph g;
    if (family == "K") {
      need(1);
      g = complete_graph(gen_params[0]);
    } else if (family == "C") {
      need(1);
      g = cycle_graph(gen_params[0]);
    } else if (family == "P") {
      need(1);
      g = path_graph(gen_params[0]);
    } else if (family == "Q") {
      need(1);
      g = hypercube_graph(gen_params[0]);
    } else if (family == "Kab") {
      need(2);
      g = complete_bipartite_graph(gen_params[0], gen_params[1]);
    } else if (family == "petersen") {
      need(0);
      g = petersen_graph();
    } else {
      throw std::invalid_argument("gen: unknown family " + family);
    }
    std::cout << format_edge_list(g);
  });

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 0;
}
