#include "mixcon/flow.hpp"

#include <algorithm>
#include <deque>

namespace mixcon {

FlowNetwork::FlowNetwork(int node_count) : n_(node_count), out_(node_count) {}

void FlowNetwork::add_arc(int from, int to, int capacity) {
  out_[from].push_back(static_cast<int>(arcs_.size()));
  arcs_.push_back({to, capacity, static_cast<int>(arcs_.size()) + 1});
  out_[to].push_back(static_cast<int>(arcs_.size()));
  arcs_.push_back({from, 0, static_cast<int>(arcs_.size()) - 1});
}

bool FlowNetwork::build_levels(int source, int sink) {
  level_.assign(n_, -1);
  std::deque<int> queue{source};
  level_[source] = 0;
  while (!queue.empty()) {
    const int v = queue.front();
    queue.pop_front();
    for (int id : out_[v]) {
      const Arc& a = arcs_[id];
      if (a.cap > 0 && level_[a.to] < 0) {
        level_[a.to] = level_[v] + 1;
        queue.push_back(a.to);
      }
    }
  }
  return level_[sink] >= 0;
}

int FlowNetwork::push(int v, int sink, int limit) {
  if (v == sink || limit == 0) return limit;
  int sent = 0;
  for (int& i = cursor_[v]; i < static_cast<int>(out_[v].size()); ++i) {
    const int id = out_[v][i];
    Arc& a = arcs_[id];
    if (a.cap <= 0 || level_[a.to] != level_[v] + 1) continue;
    const int got = push(a.to, sink, std::min(limit - sent, a.cap));
    if (got > 0) {
      a.cap -= got;
      arcs_[a.twin].cap += got;
      sent += got;
      if (sent == limit) return sent;
    }
  }
  level_[v] = -1;  // dead end, skip on later probes in this phase
  return sent;
}

int FlowNetwork::max_flow(int source, int sink, int stop_at) {
  int total = 0;
  while (total < stop_at && build_levels(source, sink)) {
    cursor_.assign(n_, 0);
    total += push(source, sink, stop_at - total);
  }
  return total;
}

int max_edge_disjoint_paths(const Graph& g, int u, int v, int stop_at) {
  if (u == v) throw std::invalid_argument("endpoints must differ");
  FlowNetwork net(g.vertex_count());
  for (const Edge& e : g.edges()) {
    net.add_arc(e.u, e.v, 1);
    net.add_arc(e.v, e.u, 1);
  }
  return net.max_flow(u, v, stop_at);
}

int max_vertex_disjoint_paths(const Graph& g, int u, int v, int stop_at) {
  if (u == v) throw std::invalid_argument("endpoints must differ");
  if (g.has_edge(u, v)) throw std::invalid_argument("endpoints must be non-adjacent");
  // Standard splitting: w becomes w_in = 2w, w_out = 2w+1 with a unit
  // arc between them; u and v keep unlimited throughput.
  const int n = g.vertex_count();
  FlowNetwork net(2 * n);
  for (int w = 0; w < n; ++w) {
    const int cap = (w == u || w == v) ? n : 1;
    net.add_arc(2 * w, 2 * w + 1, cap);
  }
  for (const Edge& e : g.edges()) {
    net.add_arc(2 * e.u + 1, 2 * e.v, 1);
    net.add_arc(2 * e.v + 1, 2 * e.u, 1);
  }
  return net.max_flow(2 * u + 1, 2 * v, stop_at);
}

}  // namespace mixcon
