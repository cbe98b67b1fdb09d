#include "mixcon/bundle.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>
#include <string>
#include <utility>

#include "json.hpp"

namespace mixcon {

namespace {

Graph binary_product(const Graph& a, const Graph& b) {
  const int nb = b.vertex_count();
  std::vector<Edge> edges;
  edges.reserve(static_cast<size_t>(a.edge_count()) * nb +
                static_cast<size_t>(b.edge_count()) * a.vertex_count());
  for (const Edge& e : a.edges())
    for (int w = 0; w < nb; ++w)
      edges.push_back(Edge(e.u * nb + w, e.v * nb + w));
  for (int v = 0; v < a.vertex_count(); ++v)
    for (const Edge& e : b.edges())
      edges.push_back(Edge(v * nb + e.u, v * nb + e.v));
  return Graph(a.vertex_count() * nb, edges);
}

Graph induced_subgraph(const Graph& g, const std::vector<int>& keep) {
  std::vector<int> local(g.vertex_count(), -1);
  for (size_t i = 0; i < keep.size(); ++i) local[keep[i]] = static_cast<int>(i);
  std::vector<Edge> edges;
  for (const Edge& e : g.edges())
    if (local[e.u] >= 0 && local[e.v] >= 0)
      edges.push_back(Edge(local[e.u], local[e.v]));
  return Graph(static_cast<int>(keep.size()), edges);
}

}  // namespace

Graph cartesian_product(const std::vector<Graph>& factors) {
  if (factors.empty())
    throw std::invalid_argument("cartesian_product: no factors");
  Graph out = factors.front();
  for (size_t i = 1; i < factors.size(); ++i)
    out = binary_product(out, factors[i]);
  return out;
}

BundleSpec::BundleSpec(Graph base, Graph fibre)
    : base_(std::move(base)), fibre_(std::move(fibre)) {
  if (base_.vertex_count() == 0 || fibre_.vertex_count() == 0)
    throw std::invalid_argument("bundle spec: empty base or fibre");
}

void BundleSpec::set_twist(int u, int v, const Permutation& sigma) {
  if (!base_.has_edge(u, v))
    throw std::invalid_argument("set_twist: not a base edge");
  if (!is_automorphism(fibre_, sigma))
    throw std::invalid_argument("set_twist: not a fibre automorphism");
  // Store in the u < v direction only.
  Permutation canonical = u < v ? sigma : inverse_permutation(sigma);
  auto key = std::make_pair(std::min(u, v), std::max(u, v));
  if (canonical == identity_permutation(fibre_.vertex_count()))
    twists_.erase(key);
  else
    twists_[key] = std::move(canonical);
}

Permutation BundleSpec::twist(int u, int v) const {
  if (!base_.has_edge(u, v))
    throw std::invalid_argument("twist: not a base edge");
  auto it = twists_.find({std::min(u, v), std::max(u, v)});
  if (it == twists_.end()) return identity_permutation(fibre_.vertex_count());
  return u < v ? it->second : inverse_permutation(it->second);
}

std::vector<std::tuple<int, int, Permutation>> BundleSpec::nontrivial_twists()
    const {
  std::vector<std::tuple<int, int, Permutation>> out;
  for (const auto& [key, perm] : twists_)
    out.emplace_back(key.first, key.second, perm);
  return out;
}

namespace {

using nlohmann::json;

Graph graph_from_json(const json& j, const char* what) {
  if (!j.is_object() || !j.contains("n") || !j.contains("edges"))
    throw std::invalid_argument(std::string(what) + ": expected {n, edges}");
  for (const auto& [key, _] : j.items())
    if (key != "n" && key != "edges")
      throw std::invalid_argument(std::string(what) + ": unknown key " + key);
  int n = j.at("n").get<int>();
  std::vector<Edge> edges;
  for (const auto& pair : j.at("edges")) {
    if (!pair.is_array() || pair.size() != 2)
      throw std::invalid_argument(std::string(what) + ": bad edge entry");
    edges.push_back(Edge(pair[0].get<int>(), pair[1].get<int>()));
  }
  return Graph(n, edges);
}

json graph_to_json(const Graph& g) {
  json edges = json::array();
  for (const Edge& e : g.edges()) edges.push_back({e.u, e.v});
  return json{{"edges", edges}, {"n", g.vertex_count()}};
}

}  // namespace

BundleSpec parse_bundle_spec(std::istream& in) {
  json j;
  try {
    j = json::parse(in);
  } catch (const json::parse_error& e) {
    throw std::invalid_argument(std::string("bundle spec: ") + e.what());
  }
  if (!j.is_object())
    throw std::invalid_argument("bundle spec: expected an object");
  for (const auto& [key, _] : j.items())
    if (key != "base" && key != "fibre" && key != "twists")
      throw std::invalid_argument("bundle spec: unknown key " + key);
  if (!j.contains("base") || !j.contains("fibre"))
    throw std::invalid_argument("bundle spec: base and fibre are required");
  BundleSpec spec(graph_from_json(j.at("base"), "base"),
                  graph_from_json(j.at("fibre"), "fibre"));
  if (j.contains("twists")) {
    if (!j.at("twists").is_array())
      throw std::invalid_argument("bundle spec: twists must be an array");
    for (const auto& t : j.at("twists")) {
      if (!t.is_object() || !t.contains("u") || !t.contains("v") ||
          !t.contains("perm"))
        throw std::invalid_argument("bundle spec: twist needs u, v, perm");
      for (const auto& [key, _] : t.items())
        if (key != "u" && key != "v" && key != "perm")
          throw std::invalid_argument("bundle spec: unknown twist key " + key);
      Permutation perm;
      for (const auto& x : t.at("perm")) perm.push_back(x.get<int>());
      spec.set_twist(t.at("u").get<int>(), t.at("v").get<int>(), perm);
    }
  }
  return spec;
}

BundleSpec parse_bundle_spec(const std::string& text) {
  std::istringstream in(text);
  return parse_bundle_spec(in);
}

std::string format_bundle_spec(const BundleSpec& spec) {
  json j;
  j["base"] = graph_to_json(spec.base());
  j["fibre"] = graph_to_json(spec.fibre());
  json twists = json::array();
  for (const auto& [u, v, perm] : spec.nontrivial_twists())
    twists.push_back(json{{"perm", perm}, {"u", u}, {"v", v}});
  j["twists"] = std::move(twists);
  return j.dump(2) + "\n";
}

Bundle::Bundle(BundleSpec spec) : spec_(std::move(spec)), total_(0, {}) {
  const Graph& b = spec_.base();
  const Graph& f = spec_.fibre();
  const int nf = f.vertex_count();
  std::vector<Edge> edges;
  edges.reserve(static_cast<size_t>(b.vertex_count()) * f.edge_count() +
                static_cast<size_t>(b.edge_count()) * nf);
  for (int u = 0; u < b.vertex_count(); ++u)
    for (const Edge& e : f.edges())
      edges.push_back(Edge(u * nf + e.u, u * nf + e.v));
  for (const Edge& be : b.edges()) {
    Permutation sigma = spec_.twist(be.u, be.v);
    for (int fv = 0; fv < nf; ++fv)
      edges.push_back(Edge(be.u * nf + fv, be.v * nf + sigma[fv]));
  }
  total_ = Graph(b.vertex_count() * nf, edges);

  // Every fibre copy must reproduce the fibre exactly, and each base
  // edge's preimage must look like fibre x K2. A twist that slipped
  // past validation would break one of these.
  for (int u = 0; u < b.vertex_count(); ++u)
    if (fibre_view(u).graph != f)
      throw InvariantViolation("bundle: fibre copy mismatch");
  if (2 * nf <= 32) {
    Graph fk2 = binary_product(f, Graph(2, {Edge(0, 1)}));
    for (const Edge& be : b.edges()) {
      std::vector<int> keep;
      for (int fv = 0; fv < nf; ++fv) keep.push_back(be.u * nf + fv);
      for (int fv = 0; fv < nf; ++fv) keep.push_back(be.v * nf + fv);
      std::sort(keep.begin(), keep.end());
      if (!isomorphic(induced_subgraph(total_, keep), fk2))
        throw InvariantViolation("bundle: edge preimage is not fibre x K2");
    }
  }
}

int Bundle::encode(int base_v, int fibre_v) const {
  if (!spec_.base().has_vertex(base_v) || !spec_.fibre().has_vertex(fibre_v))
    throw std::invalid_argument("encode: vertex out of range");
  return base_v * fibre_size() + fibre_v;
}

int Bundle::base_of(int total_v) const {
  if (!total_.has_vertex(total_v))
    throw std::invalid_argument("base_of: vertex out of range");
  return total_v / fibre_size();
}

int Bundle::fibre_label_of(int total_v) const {
  if (!total_.has_vertex(total_v))
    throw std::invalid_argument("fibre_label_of: vertex out of range");
  return total_v % fibre_size();
}

EdgeKind Bundle::classify(Edge total_edge) const {
  if (!total_.has_edge(total_edge.u, total_edge.v))
    throw std::invalid_argument("classify: not an edge of the total graph");
  return base_of(total_edge.u) == base_of(total_edge.v)
             ? EdgeKind::Degenerate
             : EdgeKind::Nondegenerate;
}

std::variant<int, Edge> Bundle::project(Edge total_edge) const {
  if (classify(total_edge) == EdgeKind::Degenerate)
    return base_of(total_edge.u);
  return Edge(base_of(total_edge.u), base_of(total_edge.v));
}

FibreView Bundle::fibre_view(int base_v) const {
  if (!spec_.base().has_vertex(base_v))
    throw std::invalid_argument("fibre_view: vertex out of range");
  const int nf = fibre_size();
  std::vector<int> ids(nf);
  for (int fv = 0; fv < nf; ++fv) ids[fv] = base_v * nf + fv;
  return FibreView{induced_subgraph(total_, ids), std::move(ids)};
}

Path Bundle::lift(const Path& base_path, int start_total_vertex) const {
  if (base_path.vertices.empty())
    throw std::invalid_argument("lift: empty base path");
  if (!is_valid_path(spec_.base(), base_path))
    throw std::invalid_argument("lift: not a path in the base");
  if (base_of(start_total_vertex) != base_path.vertices.front())
    throw std::invalid_argument("lift: start vertex is over the wrong fibre");
  Path out;
  out.vertices.push_back(start_total_vertex);
  int fv = fibre_label_of(start_total_vertex);
  for (size_t i = 0; i + 1 < base_path.vertices.size(); ++i) {
    int bu = base_path.vertices[i];
    int bv = base_path.vertices[i + 1];
    fv = spec_.twist(bu, bv)[fv];
    out.vertices.push_back(encode(bv, fv));
  }
  return out;
}

}  // namespace mixcon
