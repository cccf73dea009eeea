#include "graphsym/algorithms.hpp"

#include <algorithm>
#include <cmath>
#include <deque>
#include <functional>
#include <limits>
#include <numeric>
#include <queue>
#include <string>

#include "graphsym/errors.hpp"

namespace graphsym {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

void require_node(const Graph& g, NodeId u) {
  if (!g.contains(u)) {
    throw QueryError("node " + std::to_string(u) + " is not in 1.." +
                     std::to_string(g.node_count()));
  }
}

// Neighbors ignoring direction, ascending and deduplicated.
std::vector<std::vector<NodeId>> undirected_view(const Graph& g) {
  const auto n = static_cast<std::size_t>(g.node_count());
  std::vector<std::vector<NodeId>> adj(n + 1);
  for (NodeId u = 1; u <= g.node_count(); ++u) {
    auto out = g.neighbors(u);
    adj[u].assign(out.begin(), out.end());
    if (g.directed()) {
      auto in = g.in_neighbors(u);
      adj[u].insert(adj[u].end(), in.begin(), in.end());
      std::sort(adj[u].begin(), adj[u].end());
      adj[u].erase(std::unique(adj[u].begin(), adj[u].end()), adj[u].end());
    }
  }
  return adj;
}

// Hop distances from every node: dist[s][t], -1 when unreachable.
std::vector<std::vector<int>> all_pairs_hops(const Graph& g) {
  std::vector<std::vector<int>> dist(static_cast<std::size_t>(g.node_count()) +
                                     1);
  for (NodeId s = 1; s <= g.node_count(); ++s) dist[s] = bfs_distances(g, s);
  return dist;
}

struct EccentricityView {
  std::vector<NodeId> nodes;         // nodes of the selected components
  std::vector<int> eccentricity;     // indexed by node id
  std::vector<std::int64_t> total;   // sum of distances within component
};

EccentricityView eccentricities(const Graph& g, DisconnectedPolicy policy) {
  const auto labels = component_labels(g);
  const int comps = *std::max_element(labels.begin() + 1, labels.end()) + 1;
  if (comps > 1 && policy == DisconnectedPolicy::kError) {
    throw DisconnectedGraphError("graph has " + std::to_string(comps) +
                                 " connected components");
  }
  std::vector<int> sizes(static_cast<std::size_t>(comps), 0);
  for (NodeId u = 1; u <= g.node_count(); ++u) ++sizes[labels[u]];
  const int largest = *std::max_element(sizes.begin(), sizes.end());

  EccentricityView view;
  view.eccentricity.assign(static_cast<std::size_t>(g.node_count()) + 1, 0);
  view.total.assign(static_cast<std::size_t>(g.node_count()) + 1, 0);
  for (NodeId u = 1; u <= g.node_count(); ++u) {
    if (sizes[labels[u]] != largest) continue;
    view.nodes.push_back(u);
    const auto dist = bfs_distances(g, u);
    int ecc = 0;
    std::int64_t total = 0;
    for (NodeId v = 1; v <= g.node_count(); ++v) {
      if (labels[v] != labels[u]) continue;
      if (dist[v] < 0) {
        throw DisconnectedGraphError(
            "directed component is not strongly connected");
      }
      ecc = std::max(ecc, dist[v]);
      total += dist[v];
    }
    view.eccentricity[u] = ecc;
    view.total[u] = total;
  }
  return view;
}

}  // namespace

// -- basic structure --------------------------------------------------------

double density(const Graph& g) {
  const double n = g.node_count();
  if (n < 2) return 0.0;
  const double pairs = g.directed() ? n * (n - 1) : n * (n - 1) / 2.0;
  return static_cast<double>(g.edge_count()) / pairs;
}

bool is_regular(const Graph& g) {
  const int d0 = g.degree(1);
  const int in0 = g.in_degree(1);
  for (NodeId u = 2; u <= g.node_count(); ++u) {
    if (g.degree(u) != d0 || g.in_degree(u) != in0) return false;
  }
  return true;
}

bool is_tournament(const Graph& g) {
  if (!g.directed()) return false;
  for (NodeId u = 1; u <= g.node_count(); ++u) {
    for (NodeId v = u + 1; v <= g.node_count(); ++v) {
      if (g.has_edge(u, v) == g.has_edge(v, u)) return false;
    }
  }
  return true;
}

std::vector<NodeId> common_neighbors(const Graph& g, NodeId u, NodeId v) {
  require_node(g, u);
  require_node(g, v);
  auto a = g.neighbors(u);
  auto b = g.neighbors(v);
  std::vector<NodeId> out;
  std::set_intersection(a.begin(), a.end(), b.begin(), b.end(),
                        std::back_inserter(out));
  out.erase(std::remove_if(out.begin(), out.end(),
                           [&](NodeId w) { return w == u || w == v; }),
            out.end());
  return out;
}

// -- connectivity -----------------------------------------------------------

std::vector<int> component_labels(const Graph& g) {
  const auto adj = undirected_view(g);
  std::vector<int> label(static_cast<std::size_t>(g.node_count()) + 1, -1);
  int next = 0;
  for (NodeId s = 1; s <= g.node_count(); ++s) {
    if (label[s] >= 0) continue;
    std::deque<NodeId> queue{s};
    label[s] = next;
    while (!queue.empty()) {
      const NodeId u = queue.front();
      queue.pop_front();
      for (NodeId v : adj[u]) {
        if (label[v] < 0) {
          label[v] = next;
          queue.push_back(v);
        }
      }
    }
    ++next;
  }
  label[0] = 0;
  return label;
}

int connected_component_count(const Graph& g) {
  const auto labels = component_labels(g);
  return *std::max_element(labels.begin() + 1, labels.end()) + 1;
}

int strongly_connected_count(const Graph& g) {
  if (!g.directed()) return connected_component_count(g);
  const auto n = static_cast<std::size_t>(g.node_count());
  std::vector<int> index(n + 1, -1), low(n + 1, 0);
  std::vector<bool> on_stack(n + 1, false);
  std::vector<NodeId> stack;
  int counter = 0;
  int components = 0;

  struct Frame {
    NodeId node;
    std::size_t next;
  };
  for (NodeId root = 1; root <= g.node_count(); ++root) {
    if (index[root] >= 0) continue;
    std::vector<Frame> call{{root, 0}};
    index[root] = low[root] = counter++;
    stack.push_back(root);
    on_stack[root] = true;
    while (!call.empty()) {
      Frame& f = call.back();
      auto out = g.neighbors(f.node);
      if (f.next < out.size()) {
        const NodeId w = out[f.next++];
        if (index[w] < 0) {
          index[w] = low[w] = counter++;
          stack.push_back(w);
          on_stack[w] = true;
          call.push_back({w, 0});
        } else if (on_stack[w]) {
          low[f.node] = std::min(low[f.node], index[w]);
        }
        continue;
      }
      const NodeId v = f.node;
      if (low[v] == index[v]) {
        NodeId w = 0;
        do {
          w = stack.back();
          stack.pop_back();
          on_stack[w] = false;
        } while (w != v);
        ++components;
      }
      call.pop_back();
      if (!call.empty()) {
        low[call.back().node] = std::min(low[call.back().node], low[v]);
      }
    }
  }
  return components;
}

bool is_bipartite(const Graph& g) {
  const auto adj = undirected_view(g);
  std::vector<int> color(static_cast<std::size_t>(g.node_count()) + 1, -1);
  for (NodeId s = 1; s <= g.node_count(); ++s) {
    if (color[s] >= 0) continue;
    color[s] = 0;
    std::deque<NodeId> queue{s};
    while (!queue.empty()) {
      const NodeId u = queue.front();
      queue.pop_front();
      for (NodeId v : adj[u]) {
        if (color[v] < 0) {
          color[v] = 1 - color[u];
          queue.push_back(v);
        } else if (color[v] == color[u]) {
          return false;
        }
      }
    }
  }
  return true;
}

bool has_cycle(const Graph& g) {
  if (!g.directed()) {
    return static_cast<int>(g.edge_count()) >
           g.node_count() - connected_component_count(g);
  }
  try {
    topological_sort(g);
    return false;
  } catch (const NotADagError&) {
    return true;
  }
}

bool is_eulerian(const Graph& g) {
  if (g.directed()) {
    for (NodeId u = 1; u <= g.node_count(); ++u) {
      if (g.degree(u) != g.in_degree(u)) return false;
    }
    return strongly_connected_count(g) == 1;
  }
  for (NodeId u = 1; u <= g.node_count(); ++u) {
    if (g.degree(u) % 2 != 0) return false;
  }
  return connected_component_count(g) == 1;
}

std::vector<NodeId> topological_sort(const Graph& g) {
  if (!g.directed()) {
    throw NotADagError("topological sort needs a directed graph");
  }
  std::vector<int> indegree(static_cast<std::size_t>(g.node_count()) + 1, 0);
  for (NodeId u = 1; u <= g.node_count(); ++u) indegree[u] = g.in_degree(u);
  std::priority_queue<NodeId, std::vector<NodeId>, std::greater<>> ready;
  for (NodeId u = 1; u <= g.node_count(); ++u) {
    if (indegree[u] == 0) ready.push(u);
  }
  std::vector<NodeId> order;
  order.reserve(static_cast<std::size_t>(g.node_count()));
  while (!ready.empty()) {
    const NodeId u = ready.top();
    ready.pop();
    order.push_back(u);
    for (NodeId v : g.neighbors(u)) {
      if (--indegree[v] == 0) ready.push(v);
    }
  }
  if (static_cast<int>(order.size()) != g.node_count()) {
    throw NotADagError("graph contains a directed cycle");
  }
  return order;
}

bool reachable(const Graph& g, NodeId u, NodeId v) {
  require_node(g, v);
  return bfs_distances(g, u)[v] >= 0;
}

std::vector<std::pair<NodeId, NodeId>> bridges(const Graph& g) {
  const auto adj = undirected_view(g);
  const auto n = static_cast<std::size_t>(g.node_count());
  std::vector<int> disc(n + 1, -1), low(n + 1, 0);
  std::vector<std::pair<NodeId, NodeId>> out;
  int timer = 0;
  struct Frame {
    NodeId node;
    NodeId parent;
    std::size_t next;
  };
  for (NodeId root = 1; root <= g.node_count(); ++root) {
    if (disc[root] >= 0) continue;
    std::vector<Frame> call{{root, 0, 0}};
    disc[root] = low[root] = timer++;
    while (!call.empty()) {
      Frame& f = call.back();
      if (f.next < adj[f.node].size()) {
        const NodeId w = adj[f.node][f.next++];
        if (w == f.parent) continue;
        if (disc[w] < 0) {
          disc[w] = low[w] = timer++;
          call.push_back({w, f.node, 0});
        } else {
          low[f.node] = std::min(low[f.node], disc[w]);
        }
        continue;
      }
      const NodeId v = f.node;
      const NodeId parent = f.parent;
      call.pop_back();
      if (parent != 0) {
        low[parent] = std::min(low[parent], low[v]);
        if (low[v] > disc[parent]) {
          out.emplace_back(std::min(parent, v), std::max(parent, v));
        }
      }
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

// -- traversal and paths ----------------------------------------------------

std::vector<NodeId> bfs_order(const Graph& g, NodeId start) {
  require_node(g, start);
  std::vector<bool> seen(static_cast<std::size_t>(g.node_count()) + 1, false);
  std::vector<NodeId> order{start};
  seen[start] = true;
  for (std::size_t head = 0; head < order.size(); ++head) {
    for (NodeId v : g.neighbors(order[head])) {
      if (!seen[v]) {
        seen[v] = true;
        order.push_back(v);
      }
    }
  }
  return order;
}

std::vector<NodeId> dfs_order(const Graph& g, NodeId start) {
  require_node(g, start);
  std::vector<bool> seen(static_cast<std::size_t>(g.node_count()) + 1, false);
  std::vector<NodeId> order{start};
  seen[start] = true;
  std::vector<std::pair<NodeId, std::size_t>> stack{{start, 0}};
  while (!stack.empty()) {
    auto& [u, next] = stack.back();
    auto out = g.neighbors(u);
    while (next < out.size() && seen[out[next]]) ++next;
    if (next == out.size()) {
      stack.pop_back();
      continue;
    }
    const NodeId v = out[next++];
    seen[v] = true;
    order.push_back(v);
    stack.emplace_back(v, 0);
  }
  return order;
}

std::vector<int> bfs_distances(const Graph& g, NodeId source) {
  require_node(g, source);
  std::vector<int> dist(static_cast<std::size_t>(g.node_count()) + 1, -1);
  std::deque<NodeId> queue{source};
  dist[source] = 0;
  while (!queue.empty()) {
    const NodeId u = queue.front();
    queue.pop_front();
    for (NodeId v : g.neighbors(u)) {
      if (dist[v] < 0) {
        dist[v] = dist[u] + 1;
        queue.push_back(v);
      }
    }
  }
  return dist;
}

std::vector<NodeId> shortest_path(const Graph& g, NodeId source,
                                  NodeId target) {
  require_node(g, source);
  require_node(g, target);
  std::vector<NodeId> parent(static_cast<std::size_t>(g.node_count()) + 1, 0);
  std::vector<bool> seen(parent.size(), false);
  std::deque<NodeId> queue{source};
  seen[source] = true;
  while (!queue.empty() && !seen[target]) {
    const NodeId u = queue.front();
    queue.pop_front();
    for (NodeId v : g.neighbors(u)) {
      if (!seen[v]) {
        seen[v] = true;
        parent[v] = u;
        queue.push_back(v);
      }
    }
  }
  if (!seen[target]) {
    throw NoPathError("no path from " + std::to_string(source) + " to " +
                      std::to_string(target));
  }
  std::vector<NodeId> path{target};
  while (path.back() != source) path.push_back(parent[path.back()]);
  std::reverse(path.begin(), path.end());
  return path;
}

namespace {

std::pair<std::vector<double>, std::vector<NodeId>> dijkstra(const Graph& g,
                                                             NodeId source) {
  require_node(g, source);
  const auto n = static_cast<std::size_t>(g.node_count());
  std::vector<double> dist(n + 1, kInf);
  std::vector<NodeId> parent(n + 1, 0);
  std::vector<bool> done(n + 1, false);
  using Item = std::pair<double, NodeId>;
  std::priority_queue<Item, std::vector<Item>, std::greater<>> heap;
  dist[source] = 0.0;
  heap.emplace(0.0, source);
  while (!heap.empty()) {
    auto [d, u] = heap.top();
    heap.pop();
    if (done[u]) continue;
    done[u] = true;
    for (NodeId v : g.neighbors(u)) {
      const double w = g.weight_between(u, v);
      if (w < 0) throw QueryError("Dijkstra requires non-negative weights");
      const double candidate = d + w;
      if (candidate < dist[v] || (candidate == dist[v] && !done[v] && u < parent[v])) {
        dist[v] = candidate;
        parent[v] = u;
        heap.emplace(candidate, v);
      }
    }
  }
  return {std::move(dist), std::move(parent)};
}

}  // namespace

std::vector<double> weighted_distances(const Graph& g, NodeId source) {
  return dijkstra(g, source).first;
}

std::vector<NodeId> weighted_shortest_path(const Graph& g, NodeId source,
                                           NodeId target) {
  require_node(g, target);
  auto [dist, parent] = dijkstra(g, source);
  if (std::isinf(dist[target])) {
    throw NoPathError("no path from " + std::to_string(source) + " to " +
                      std::to_string(target));
  }
  std::vector<NodeId> path{target};
  while (path.back() != source) path.push_back(parent[path.back()]);
  std::reverse(path.begin(), path.end());
  return path;
}

double path_weight(const Graph& g, const std::vector<NodeId>& path) {
  double total = 0.0;
  for (std::size_t i = 1; i < path.size(); ++i) {
    total += g.weight_between(path[i - 1], path[i]);
  }
  return total;
}

std::vector<Edge> minimum_spanning_forest(const Graph& g) {
  std::vector<Edge> edges(g.edges().begin(), g.edges().end());
  for (Edge& e : edges) {
    if (e.source > e.target) std::swap(e.source, e.target);
  }
  std::stable_sort(edges.begin(), edges.end(), [](const Edge& a, const Edge& b) {
    const double wa = a.weight ? a.weight->value() : 1.0;
    const double wb = b.weight ? b.weight->value() : 1.0;
    if (wa != wb) return wa < wb;
    return std::pair(a.source, a.target) < std::pair(b.source, b.target);
  });
  std::vector<NodeId> parent(static_cast<std::size_t>(g.node_count()) + 1);
  std::iota(parent.begin(), parent.end(), 0);
  std::function<NodeId(NodeId)> find = [&](NodeId x) {
    while (parent[x] != x) {
      parent[x] = parent[parent[x]];
      x = parent[x];
    }
    return x;
  };
  std::vector<Edge> forest;
  for (const Edge& e : edges) {
    const NodeId a = find(e.source);
    const NodeId b = find(e.target);
    if (a == b) continue;
    parent[std::max(a, b)] = std::min(a, b);
    forest.push_back(e);
  }
  return forest;
}

double minimum_spanning_tree_weight(const Graph& g) {
  double total = 0.0;
  for (const Edge& e : minimum_spanning_forest(g)) {
    total += e.weight ? e.weight->value() : 1.0;
  }
  return total;
}

double max_flow(const Graph& g, NodeId source, NodeId sink) {
  require_node(g, source);
  require_node(g, sink);
  if (source == sink) throw QueryError("flow source equals sink");
  const auto n = static_cast<std::size_t>(g.node_count()) + 1;
  std::vector<double> cap(n * n, 0.0);
  auto at = [&](NodeId u, NodeId v) -> double& {
    return cap[static_cast<std::size_t>(u) * n + static_cast<std::size_t>(v)];
  };
  for (const Edge& e : g.edges()) {
    const double c = e.weight ? e.weight->value() : 1.0;
    at(e.source, e.target) += c;
    if (!g.directed()) at(e.target, e.source) += c;
  }
  const auto adj = undirected_view(g);
  double flow = 0.0;
  for (;;) {
    std::vector<NodeId> parent(n, 0);
    std::vector<bool> seen(n, false);
    std::deque<NodeId> queue{source};
    seen[source] = true;
    while (!queue.empty() && !seen[sink]) {
      const NodeId u = queue.front();
      queue.pop_front();
      for (NodeId v : adj[u]) {
        if (!seen[v] && at(u, v) > 1e-12) {
          seen[v] = true;
          parent[v] = u;
          queue.push_back(v);
        }
      }
    }
    if (!seen[sink]) break;
    double bottleneck = kInf;
    for (NodeId v = sink; v != source; v = parent[v]) {
      bottleneck = std::min(bottleneck, at(parent[v], v));
    }
    for (NodeId v = sink; v != source; v = parent[v]) {
      at(parent[v], v) -= bottleneck;
      at(v, parent[v]) += bottleneck;
    }
    flow += bottleneck;
  }
  return flow;
}

// -- counting and local statistics ----------------------------------------

std::int64_t triangle_count(const Graph& g) {
  const auto adj = undirected_view(g);
  std::int64_t count = 0;
  for (NodeId u = 1; u <= g.node_count(); ++u) {
    for (NodeId v : adj[u]) {
      if (v <= u) continue;
      std::vector<NodeId> common;
      std::set_intersection(adj[u].begin(), adj[u].end(), adj[v].begin(),
                            adj[v].end(), std::back_inserter(common));
      for (NodeId w : common) {
        if (w > v) ++count;
      }
    }
  }
  return count;
}

double local_clustering(const Graph& g, NodeId u) {
  require_node(g, u);
  const auto adj = undirected_view(g);
  const auto& nbrs = adj[u];
  const auto d = static_cast<double>(nbrs.size());
  if (d < 2) return 0.0;
  std::int64_t links = 0;
  for (std::size_t i = 0; i < nbrs.size(); ++i) {
    for (std::size_t j = i + 1; j < nbrs.size(); ++j) {
      if (std::binary_search(adj[nbrs[i]].begin(), adj[nbrs[i]].end(),
                             nbrs[j])) {
        ++links;
      }
    }
  }
  return 2.0 * static_cast<double>(links) / (d * (d - 1.0));
}

double average_clustering(const Graph& g) {
  double total = 0.0;
  for (NodeId u = 1; u <= g.node_count(); ++u) total += local_clustering(g, u);
  return total / g.node_count();
}

double average_neighbor_degree(const Graph& g, NodeId u) {
  auto nbrs = g.neighbors(u);
  if (nbrs.empty()) return 0.0;
  double total = 0.0;
  for (NodeId v : nbrs) total += g.degree(v);
  return total / static_cast<double>(nbrs.size());
}

double jaccard_coefficient(const Graph& g, NodeId u, NodeId v) {
  require_node(g, u);
  require_node(g, v);
  auto a = g.neighbors(u);
  auto b = g.neighbors(v);
  std::vector<NodeId> uni;
  std::set_union(a.begin(), a.end(), b.begin(), b.end(),
                 std::back_inserter(uni));
  if (uni.empty()) return 0.0;
  std::vector<NodeId> inter;
  std::set_intersection(a.begin(), a.end(), b.begin(), b.end(),
                        std::back_inserter(inter));
  return static_cast<double>(inter.size()) / static_cast<double>(uni.size());
}

double adamic_adar_index(const Graph& g, NodeId u, NodeId v) {
  double total = 0.0;
  for (NodeId w : common_neighbors(g, u, v)) {
    total += 1.0 / std::log(static_cast<double>(g.degree(w)));
  }
  return total;
}

double resource_allocation_index(const Graph& g, NodeId u, NodeId v) {
  double total = 0.0;
  for (NodeId w : common_neighbors(g, u, v)) {
    total += 1.0 / static_cast<double>(g.degree(w));
  }
  return total;
}

// -- distance-based summaries ----------------------------------------------

int diameter(const Graph& g, DisconnectedPolicy policy) {
  const auto view = eccentricities(g, policy);
  int best = 0;
  for (NodeId u : view.nodes) best = std::max(best, view.eccentricity[u]);
  return best;
}

int radius(const Graph& g, DisconnectedPolicy policy) {
  const auto view = eccentricities(g, policy);
  int best = std::numeric_limits<int>::max();
  for (NodeId u : view.nodes) best = std::min(best, view.eccentricity[u]);
  return best;
}

std::vector<NodeId> center(const Graph& g, DisconnectedPolicy policy) {
  const auto view = eccentricities(g, policy);
  int best = std::numeric_limits<int>::max();
  for (NodeId u : view.nodes) best = std::min(best, view.eccentricity[u]);
  std::vector<NodeId> out;
  for (NodeId u : view.nodes) {
    if (view.eccentricity[u] == best) out.push_back(u);
  }
  return out;
}

std::vector<NodeId> periphery(const Graph& g, DisconnectedPolicy policy) {
  const auto view = eccentricities(g, policy);
  int best = 0;
  for (NodeId u : view.nodes) best = std::max(best, view.eccentricity[u]);
  std::vector<NodeId> out;
  for (NodeId u : view.nodes) {
    if (view.eccentricity[u] == best) out.push_back(u);
  }
  return out;
}

std::vector<NodeId> barycenter(const Graph& g, DisconnectedPolicy policy) {
  const auto view = eccentricities(g, policy);
  std::int64_t best = std::numeric_limits<std::int64_t>::max();
  for (NodeId u : view.nodes) best = std::min(best, view.total[u]);
  std::vector<NodeId> out;
  for (NodeId u : view.nodes) {
    if (view.total[u] == best) out.push_back(u);
  }
  return out;
}

std::int64_t wiener_index(const Graph& g) {
  std::int64_t total = 0;
  for (NodeId s = 1; s <= g.node_count(); ++s) {
    const auto dist = bfs_distances(g, s);
    for (NodeId t = 1; t <= g.node_count(); ++t) {
      if (t == s) continue;
      if (dist[t] < 0) {
        throw DisconnectedGraphError("Wiener index of a disconnected graph");
      }
      total += dist[t];
    }
  }
  return g.directed() ? total : total / 2;
}

double global_efficiency(const Graph& g) {
  const int n = g.node_count();
  if (n < 2) return 0.0;
  double total = 0.0;
  for (NodeId s = 1; s <= n; ++s) {
    const auto dist = bfs_distances(g, s);
    for (NodeId t = 1; t <= n; ++t) {
      if (t != s && dist[t] > 0) total += 1.0 / dist[t];
    }
  }
  return total / (static_cast<double>(n) * (n - 1));
}

// -- centralities -----------------------------------------------------------

double degree_centrality(const Graph& g, NodeId u) {
  require_node(g, u);
  const int n = g.node_count();
  if (n == 1) return 1.0;
  const int deg = g.directed() ? g.degree(u) + g.in_degree(u) : g.degree(u);
  return static_cast<double>(deg) / (n - 1);
}

namespace {

// Hop distances *to* `target` (reverse BFS on directed graphs).
std::vector<int> incoming_distances(const Graph& g, NodeId target) {
  require_node(g, target);
  std::vector<int> dist(static_cast<std::size_t>(g.node_count()) + 1, -1);
  std::deque<NodeId> queue{target};
  dist[target] = 0;
  while (!queue.empty()) {
    const NodeId u = queue.front();
    queue.pop_front();
    for (NodeId v : g.in_neighbors(u)) {
      if (dist[v] < 0) {
        dist[v] = dist[u] + 1;
        queue.push_back(v);
      }
    }
  }
  return dist;
}

}  // namespace

double closeness_centrality(const Graph& g, NodeId u) {
  const auto dist = incoming_distances(g, u);
  const int n = g.node_count();
  double total = 0.0;
  int reached = 0;
  for (NodeId v = 1; v <= n; ++v) {
    if (dist[v] >= 0) {
      total += dist[v];
      ++reached;
    }
  }
  if (total <= 0.0 || n <= 1) return 0.0;
  const double base = (reached - 1.0) / total;
  return base * (reached - 1.0) / (n - 1.0);
}

double harmonic_centrality(const Graph& g, NodeId u) {
  const auto dist = incoming_distances(g, u);
  double total = 0.0;
  for (NodeId v = 1; v <= g.node_count(); ++v) {
    if (dist[v] > 0) total += 1.0 / dist[v];
  }
  return total;
}

std::vector<double> betweenness_centrality(const Graph& g) {
  const int n = g.node_count();
  std::vector<double> score(static_cast<std::size_t>(n) + 1, 0.0);
  for (NodeId s = 1; s <= n; ++s) {
    std::vector<NodeId> stack;
    std::vector<std::vector<NodeId>> preds(score.size());
    std::vector<double> sigma(score.size(), 0.0);
    std::vector<int> dist(score.size(), -1);
    sigma[s] = 1.0;
    dist[s] = 0;
    std::deque<NodeId> queue{s};
    while (!queue.empty()) {
      const NodeId v = queue.front();
      queue.pop_front();
      stack.push_back(v);
      for (NodeId w : g.neighbors(v)) {
        if (dist[w] < 0) {
          dist[w] = dist[v] + 1;
          queue.push_back(w);
        }
        if (dist[w] == dist[v] + 1) {
          sigma[w] += sigma[v];
          preds[w].push_back(v);
        }
      }
    }
    std::vector<double> delta(score.size(), 0.0);
    while (!stack.empty()) {
      const NodeId w = stack.back();
      stack.pop_back();
      for (NodeId v : preds[w]) {
        delta[v] += sigma[v] / sigma[w] * (1.0 + delta[w]);
      }
      if (w != s) score[w] += delta[w];
    }
  }
  if (n > 2) {
    const double scale = 1.0 / ((n - 1.0) * (n - 2.0));
    for (double& x : score) x *= scale;
  } else if (!g.directed()) {
    for (double& x : score) x *= 0.5;
  }
  return score;
}

std::vector<double> pagerank(const Graph& g) {
  constexpr double kDamping = 0.85;
  constexpr int kMaxIterations = 100;
  constexpr double kTolerance = 1e-9;
  const int n = g.node_count();
  const double uniform = 1.0 / n;

  std::vector<double> out_weight(static_cast<std::size_t>(n) + 1, 0.0);
  for (NodeId u = 1; u <= n; ++u) {
    for (NodeId v : g.neighbors(u)) out_weight[u] += g.weight_between(u, v);
  }
  std::vector<double> x(static_cast<std::size_t>(n) + 1, uniform);
  x[0] = 0.0;
  for (int iter = 0; iter < kMaxIterations; ++iter) {
    std::vector<double> next(x.size(), 0.0);
    double dangling = 0.0;
    for (NodeId u = 1; u <= n; ++u) {
      if (out_weight[u] == 0.0) {
        dangling += x[u];
        continue;
      }
      for (NodeId v : g.neighbors(u)) {
        next[v] += kDamping * x[u] * g.weight_between(u, v) / out_weight[u];
      }
    }
    double err = 0.0;
    for (NodeId u = 1; u <= n; ++u) {
      next[u] += kDamping * dangling * uniform + (1.0 - kDamping) * uniform;
      err += std::abs(next[u] - x[u]);
    }
    x = std::move(next);
    if (err < n * kTolerance) break;
  }
  return x;
}

}  // namespace graphsym
