#include "mixcon/graph.hpp"

#include <algorithm>
#include <bit>
#include <deque>
#include <istream>
#include <sstream>

namespace mixcon {

Graph::Graph(int n, std::vector<Edge> edges) : n_(n) {
  if (n < 0) throw std::invalid_argument("vertex count must be nonnegative");
  std::sort(edges.begin(), edges.end());
  edges.erase(std::unique(edges.begin(), edges.end()), edges.end());
  for (const Edge& e : edges) {
    if (e.u < 0 || e.v >= n) throw std::invalid_argument("edge endpoint out of range");
    if (e.u == e.v) throw std::invalid_argument("self-loops are not allowed");
  }
  edges_ = std::move(edges);
  adj_.assign(n_, {});
  for (const Edge& e : edges_) {
    adj_[e.u].push_back(e.v);
    adj_[e.v].push_back(e.u);
  }
  for (auto& nb : adj_) std::sort(nb.begin(), nb.end());
}

const std::vector<int>& Graph::neighbors(int v) const {
  if (!has_vertex(v)) throw std::out_of_range("vertex id out of range");
  return adj_[v];
}

bool Graph::has_edge(int u, int v) const {
  if (!has_vertex(u) || !has_vertex(v) || u == v) return false;
  const Edge e(u, v);
  return std::binary_search(edges_.begin(), edges_.end(), e);
}

int Graph::degree(int v) const { return static_cast<int>(neighbors(v).size()); }

int Graph::min_degree() const {
  if (n_ == 0) throw std::domain_error("min_degree of the empty graph is undefined");
  int best = n_;
  for (int v = 0; v < n_; ++v) best = std::min(best, degree(v));
  return best;
}

FaultSet FaultSet::of(std::vector<int> vertices, std::vector<Edge> edges) {
  std::sort(vertices.begin(), vertices.end());
  vertices.erase(std::unique(vertices.begin(), vertices.end()), vertices.end());
  std::sort(edges.begin(), edges.end());
  edges.erase(std::unique(edges.begin(), edges.end()), edges.end());
  return FaultSet{std::move(vertices), std::move(edges)};
}

std::optional<int> DeletedGraph::new_id_of(int original) const {
  auto it = std::lower_bound(to_original.begin(), to_original.end(), original);
  if (it == to_original.end() || *it != original) return std::nullopt;
  return static_cast<int>(it - to_original.begin());
}

DeletedGraph deleted(const Graph& g, const FaultSet& f) {
  for (int v : f.vertices) {
    if (!g.has_vertex(v)) throw std::invalid_argument("faulty vertex not in graph");
  }
  for (const Edge& e : f.edges) {
    if (!g.has_edge(e.u, e.v)) throw std::invalid_argument("faulty edge not in graph");
  }

  std::vector<char> dead(g.vertex_count(), 0);
  for (int v : f.vertices) dead[v] = 1;

  DeletedGraph out;
  std::vector<int> new_id(g.vertex_count(), -1);
  for (int v = 0; v < g.vertex_count(); ++v) {
    if (dead[v]) continue;
    new_id[v] = static_cast<int>(out.to_original.size());
    out.to_original.push_back(v);
  }

  std::vector<Edge> kept;
  for (const Edge& e : g.edges()) {
    if (dead[e.u] || dead[e.v]) continue;
    if (std::binary_search(f.edges.begin(), f.edges.end(), e)) continue;
    kept.emplace_back(new_id[e.u], new_id[e.v]);
  }
  out.graph = Graph(static_cast<int>(out.to_original.size()), std::move(kept));
  return out;
}

bool is_valid_path(const Graph& g, const Path& p) {
  if (p.vertices.empty()) return false;
  std::vector<int> seen = p.vertices;
  std::sort(seen.begin(), seen.end());
  if (std::adjacent_find(seen.begin(), seen.end()) != seen.end()) return false;
  for (int v : p.vertices) {
    if (!g.has_vertex(v)) return false;
  }
  for (std::size_t i = 0; i + 1 < p.vertices.size(); ++i) {
    if (!g.has_edge(p.vertices[i], p.vertices[i + 1])) return false;
  }
  return true;
}

Path simplify_walk(const std::vector<int>& walk) {
  std::vector<int> out;
  for (int v : walk) {
    auto it = std::find(out.begin(), out.end(), v);
    if (it != out.end()) {
      out.erase(it + 1, out.end());
    } else {
      out.push_back(v);
    }
  }
  return Path{std::move(out)};
}

bool is_connected(const Graph& g) {
  const int n = g.vertex_count();
  if (n == 0) return false;
  std::vector<char> seen(n, 0);
  std::deque<int> queue{0};
  seen[0] = 1;
  int reached = 1;
  while (!queue.empty()) {
    const int v = queue.front();
    queue.pop_front();
    for (int w : g.neighbors(v)) {
      if (!seen[w]) {
        seen[w] = 1;
        ++reached;
        queue.push_back(w);
      }
    }
  }
  return reached == n;
}

std::optional<Path> shortest_path(const Graph& g, int from, int to) {
  if (!g.has_vertex(from) || !g.has_vertex(to)) {
    throw std::invalid_argument("path endpoint not in graph");
  }
  if (from == to) return Path{{from}};
  // BFS, then walk forward always taking the smallest-id neighbor that
  // stays on a shortest route; this yields the lexicographically
  // smallest among the shortest vertex sequences.
  const int n = g.vertex_count();
  std::vector<int> dist(n, -1);
  std::deque<int> queue{to};
  dist[to] = 0;
  while (!queue.empty()) {
    const int v = queue.front();
    queue.pop_front();
    for (int w : g.neighbors(v)) {
      if (dist[w] < 0) {
        dist[w] = dist[v] + 1;
        queue.push_back(w);
      }
    }
  }
  if (dist[from] < 0) return std::nullopt;
  Path p{{from}};
  int at = from;
  while (at != to) {
    for (int w : g.neighbors(at)) {  // neighbors are sorted by id
      if (dist[w] == dist[at] - 1) {
        p.vertices.push_back(w);
        at = w;
        break;
      }
    }
  }
  return p;
}

Graph complete_graph(int n) {
  if (n < 1) throw std::invalid_argument("complete graph needs n >= 1");
  std::vector<Edge> edges;
  for (int u = 0; u < n; ++u) {
    for (int v = u + 1; v < n; ++v) edges.emplace_back(u, v);
  }
  return Graph(n, std::move(edges));
}

Graph cycle_graph(int n) {
  if (n < 3) throw std::invalid_argument("cycle graph needs n >= 3");
  std::vector<Edge> edges;
  for (int v = 0; v < n; ++v) edges.emplace_back(v, (v + 1) % n);
  return Graph(n, std::move(edges));
}

Graph path_graph(int n) {
  if (n < 1) throw std::invalid_argument("path graph needs n >= 1");
  std::vector<Edge> edges;
  for (int v = 0; v + 1 < n; ++v) edges.emplace_back(v, v + 1);
  return Graph(n, std::move(edges));
}

Graph hypercube_graph(int dim) {
  if (dim < 1) throw std::invalid_argument("hypercube needs dim >= 1");
  if (dim > 20) throw std::invalid_argument("hypercube dimension too large");
  const int n = 1 << dim;
  std::vector<Edge> edges;
  for (int v = 0; v < n; ++v) {
    for (int b = 0; b < dim; ++b) {
      const int w = v ^ (1 << b);
      if (v < w) edges.emplace_back(v, w);
    }
  }
  return Graph(n, std::move(edges));
}

Graph complete_bipartite_graph(int a, int b) {
  if (a < 1 || b < 1) throw std::invalid_argument("complete bipartite graph needs a, b >= 1");
  std::vector<Edge> edges;
  for (int u = 0; u < a; ++u) {
    for (int v = 0; v < b; ++v) edges.emplace_back(u, a + v);
  }
  return Graph(a + b, std::move(edges));
}

Graph petersen_graph() {
  // Outer 5-cycle 0..4, inner pentagram 5..9, spokes i -- i+5.
  std::vector<Edge> edges;
  for (int i = 0; i < 5; ++i) {
    edges.emplace_back(i, (i + 1) % 5);
    edges.emplace_back(5 + i, 5 + (i + 2) % 5);
    edges.emplace_back(i, i + 5);
  }
  return Graph(10, std::move(edges));
}

namespace {

// Strips comments, yields whitespace-separated tokens.
std::vector<std::string> tokenize(std::istream& in) {
  std::vector<std::string> tokens;
  std::string line;
  while (std::getline(in, line)) {
    if (!line.empty() && line[0] == '#') continue;
    std::istringstream ls(line);
    std::string tok;
    while (ls >> tok) tokens.push_back(tok);
  }
  return tokens;
}

int parse_int(const std::string& tok, const char* what) {
  std::size_t used = 0;
  int value = 0;
  try {
    value = std::stoi(tok, &used);
  } catch (const std::exception&) {
    throw std::invalid_argument(std::string("expected an integer for ") + what + ", got '" + tok + "'");
  }
  if (used != tok.size()) {
    throw std::invalid_argument(std::string("trailing junk after ") + what + ": '" + tok + "'");
  }
  return value;
}

}  // namespace

Graph parse_edge_list(std::istream& in) {
  const auto tokens = tokenize(in);
  if (tokens.size() < 2) throw std::invalid_argument("edge list: missing 'n m' header");
  const int n = parse_int(tokens[0], "vertex count");
  const int m = parse_int(tokens[1], "edge count");
  if (n < 0 || m < 0) throw std::invalid_argument("edge list: negative header value");
  if (tokens.size() != static_cast<std::size_t>(2 + 2 * m)) {
    throw std::invalid_argument("edge list: token count does not match header");
  }
  std::vector<Edge> edges;
  edges.reserve(m);
  for (int i = 0; i < m; ++i) {
    const int u = parse_int(tokens[2 + 2 * i], "edge endpoint");
    const int v = parse_int(tokens[3 + 2 * i], "edge endpoint");
    if (u == v) throw std::invalid_argument("edge list: self-loop");
    if (u < 0 || v < 0 || u >= n || v >= n) throw std::invalid_argument("edge list: endpoint out of range");
    edges.emplace_back(u, v);
  }
  std::sort(edges.begin(), edges.end());
  if (std::adjacent_find(edges.begin(), edges.end()) != edges.end()) {
    throw std::invalid_argument("edge list: duplicate edge");
  }
  return Graph(n, std::move(edges));
}

Graph parse_edge_list(const std::string& text) {
  std::istringstream in(text);
  return parse_edge_list(in);
}

std::string format_edge_list(const Graph& g) {
  std::ostringstream out;
  out << g.vertex_count() << ' ' << g.edge_count() << '\n';
  for (const Edge& e : g.edges()) out << e.u << ' ' << e.v << '\n';
  return out.str();
}

FaultSet parse_fault_list(std::istream& in, const Graph& host) {
  const auto tokens = tokenize(in);
  std::vector<int> vertices;
  std::vector<Edge> edges;
  std::size_t i = 0;
  while (i < tokens.size()) {
    const std::string& kind = tokens[i];
    if (kind == "v") {
      if (i + 1 >= tokens.size()) throw std::invalid_argument("fault list: 'v' needs one id");
      const int v = parse_int(tokens[i + 1], "fault vertex");
      if (!host.has_vertex(v)) throw std::invalid_argument("fault list: vertex not in graph");
      vertices.push_back(v);
      i += 2;
    } else if (kind == "e") {
      if (i + 2 >= tokens.size()) throw std::invalid_argument("fault list: 'e' needs two ids");
      const int u = parse_int(tokens[i + 1], "fault edge endpoint");
      const int v = parse_int(tokens[i + 2], "fault edge endpoint");
      if (!host.has_edge(u, v)) throw std::invalid_argument("fault list: edge not in graph");
      edges.emplace_back(u, v);
      i += 3;
    } else {
      throw std::invalid_argument("fault list: expected 'v' or 'e', got '" + kind + "'");
    }
  }
  return FaultSet::of(std::move(vertices), std::move(edges));
}

FaultSet parse_fault_list(const std::string& text, const Graph& host) {
  std::istringstream in(text);
  return parse_fault_list(in, host);
}

std::string format_fault_list(const FaultSet& f) {
  std::ostringstream out;
  for (int v : f.vertices) out << "v " << v << '\n';
  for (const Edge& e : f.edges) out << "e " << e.u << ' ' << e.v << '\n';
  return out.str();
}

}  // namespace mixcon
