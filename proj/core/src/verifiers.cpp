#include "graphsym/verifiers.hpp"

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <functional>
#include <limits>
#include <numeric>
#include <set>
#include <string>

#include "graphsym/algorithms.hpp"
#include "graphsym/errors.hpp"

namespace graphsym {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

bool all_in_range(const Graph& g, const std::vector<NodeId>& nodes) {
  return std::all_of(nodes.begin(), nodes.end(),
                     [&](NodeId u) { return g.contains(u); });
}

bool distinct(std::vector<NodeId> nodes) {
  std::sort(nodes.begin(), nodes.end());
  return std::adjacent_find(nodes.begin(), nodes.end()) == nodes.end();
}

bool is_permutation_of_nodes(const Graph& g, const std::vector<NodeId>& order) {
  return static_cast<int>(order.size()) == g.node_count() &&
         all_in_range(g, order) && distinct(order);
}

bool adjacent(const Graph& g, NodeId u, NodeId v) {
  return g.contains(u) && g.contains(v) && g.has_edge(u, v);
}

std::vector<bool> membership(const Graph& g, const std::vector<NodeId>& nodes) {
  std::vector<bool> in(static_cast<std::size_t>(g.node_count()) + 1, false);
  for (NodeId u : nodes) in[u] = true;
  return in;
}

void require_size(const Graph& g, int limit, const char* what) {
  if (g.node_count() > limit) {
    throw ReferenceUnavailableError(std::string(what) + " reference limited to n <= " +
                                    std::to_string(limit));
  }
}

// Undirected closed-neighborhood masks, bit i = node i+1.
std::vector<std::uint32_t> closed_masks(const Graph& g) {
  std::vector<std::uint32_t> masks(static_cast<std::size_t>(g.node_count()));
  for (NodeId u = 1; u <= g.node_count(); ++u) {
    masks[u - 1] |= 1u << (u - 1);
    for (NodeId v : g.neighbors(u)) {
      masks[u - 1] |= 1u << (v - 1);
      masks[v - 1] |= 1u << (u - 1);
    }
  }
  return masks;
}

// Lexicographically first k-subset (as 0-based indices) satisfying `ok`,
// trying k = 0, 1, ... n.
std::vector<NodeId> smallest_subset(
    int n, const std::function<bool(std::uint32_t)>& ok) {
  for (int k = 0; k <= n; ++k) {
    std::vector<int> idx(static_cast<std::size_t>(k));
    std::iota(idx.begin(), idx.end(), 0);
    for (;;) {
      std::uint32_t mask = 0;
      for (int i : idx) mask |= 1u << i;
      if (ok(mask)) {
        std::vector<NodeId> out;
        for (int i : idx) out.push_back(i + 1);
        return out;
      }
      int pos = k - 1;
      while (pos >= 0 && idx[pos] == n - k + pos) --pos;
      if (pos < 0) break;
      ++idx[pos];
      for (int j = pos + 1; j < k; ++j) idx[j] = idx[j - 1] + 1;
    }
  }
  return {};
}

EdgePairs best_matching(const Graph& g, bool weighted) {
  require_size(g, kSubsetSolverLimit, "matching");
  const int n = g.node_count();
  const std::size_t states = std::size_t{1} << n;
  std::vector<double> memo(states, -1.0);
  std::vector<std::vector<NodeId>> adj(static_cast<std::size_t>(n));
  for (NodeId u = 1; u <= n; ++u) {
    for (NodeId v : g.neighbors(u)) adj[u - 1].push_back(v - 1);
    for (NodeId v : g.in_neighbors(u)) adj[u - 1].push_back(v - 1);
    std::sort(adj[u - 1].begin(), adj[u - 1].end());
    adj[u - 1].erase(std::unique(adj[u - 1].begin(), adj[u - 1].end()),
                     adj[u - 1].end());
  }
  auto weight = [&](int i, int j) {
    return weighted ? g.weight_between(g.has_edge(i + 1, j + 1) ? i + 1 : j + 1,
                                       g.has_edge(i + 1, j + 1) ? j + 1 : i + 1)
                    : 1.0;
  };
  std::function<double(std::uint32_t)> best = [&](std::uint32_t mask) -> double {
    if (mask == 0) return 0.0;
    if (memo[mask] >= 0.0) return memo[mask];
    const int i = __builtin_ctz(mask);
    const std::uint32_t rest = mask & ~(1u << i);
    double value = best(rest);
    for (int j : adj[i]) {
      if (rest & (1u << j)) {
        value = std::max(value, weight(i, j) + best(rest & ~(1u << j)));
      }
    }
    return memo[mask] = value;
  };
  std::uint32_t mask = static_cast<std::uint32_t>(states - 1);
  const double total = best(mask);
  (void)total;
  EdgePairs out;
  while (mask != 0) {
    const int i = __builtin_ctz(mask);
    const std::uint32_t rest = mask & ~(1u << i);
    const double target = best(mask);
    bool matched = false;
    for (int j : adj[i]) {
      if (!(rest & (1u << j))) continue;
      const double value = weight(i, j) + best(rest & ~(1u << j));
      if (std::abs(value - target) <= 1e-9 * std::max(1.0, std::abs(target)) &&
          std::abs(best(rest) - target) > 1e-9 * std::max(1.0, std::abs(target))) {
        out.emplace_back(i + 1, j + 1);
        mask = rest & ~(1u << j);
        matched = true;
        break;
      }
    }
    if (!matched) mask = rest;
  }
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace

bool is_valid_bfs_order(const Graph& g, NodeId start,
                        const std::vector<NodeId>& order) {
  if (order.empty() || order.front() != start || !all_in_range(g, order) ||
      !distinct(order)) {
    return false;
  }
  std::vector<bool> seen(static_cast<std::size_t>(g.node_count()) + 1, false);
  seen[start] = true;
  std::size_t next = 1;
  for (std::size_t head = 0; head < next; ++head) {
    std::vector<NodeId> fresh;
    for (NodeId v : g.neighbors(order[head])) {
      if (!seen[v]) fresh.push_back(v);
    }
    if (next + fresh.size() > order.size()) return false;
    std::vector<NodeId> block(order.begin() + static_cast<std::ptrdiff_t>(next),
                              order.begin() +
                                  static_cast<std::ptrdiff_t>(next + fresh.size()));
    std::sort(block.begin(), block.end());
    if (block != fresh) return false;
    for (NodeId v : fresh) seen[v] = true;
    next += fresh.size();
  }
  return next == order.size();
}

bool is_valid_dfs_order(const Graph& g, NodeId start,
                        const std::vector<NodeId>& order) {
  if (order.empty() || order.front() != start || !all_in_range(g, order) ||
      !distinct(order)) {
    return false;
  }
  std::vector<bool> seen(static_cast<std::size_t>(g.node_count()) + 1, false);
  auto exhausted = [&](NodeId u) {
    for (NodeId w : g.neighbors(u)) {
      if (!seen[w]) return false;
    }
    return true;
  };
  seen[start] = true;
  std::vector<NodeId> stack{start};
  for (std::size_t i = 1; i < order.size(); ++i) {
    const NodeId v = order[i];
    while (!stack.empty() && !g.has_edge(stack.back(), v)) {
      if (!exhausted(stack.back())) return false;
      stack.pop_back();
    }
    if (stack.empty()) return false;
    seen[v] = true;
    stack.push_back(v);
  }
  for (NodeId u : stack) {
    if (!exhausted(u)) return false;
  }
  return true;
}

bool is_simple_path(const Graph& g, const std::vector<NodeId>& path,
                    NodeId source, NodeId target) {
  if (path.empty() || path.front() != source || path.back() != target ||
      !all_in_range(g, path) || !distinct(path)) {
    return false;
  }
  for (std::size_t i = 1; i < path.size(); ++i) {
    if (!g.has_edge(path[i - 1], path[i])) return false;
  }
  return true;
}

bool is_topological_order(const Graph& g, const std::vector<NodeId>& order) {
  if (!is_permutation_of_nodes(g, order)) return false;
  std::vector<std::size_t> pos(static_cast<std::size_t>(g.node_count()) + 1);
  for (std::size_t i = 0; i < order.size(); ++i) pos[order[i]] = i;
  for (const Edge& e : g.edges()) {
    if (pos[e.source] >= pos[e.target]) return false;
  }
  return true;
}

bool is_spanning_forest(const Graph& g, const EdgePairs& edges) {
  std::vector<NodeId> parent(static_cast<std::size_t>(g.node_count()) + 1);
  std::iota(parent.begin(), parent.end(), 0);
  std::function<NodeId(NodeId)> find = [&](NodeId x) {
    return parent[x] == x ? x : parent[x] = find(parent[x]);
  };
  for (auto [u, v] : edges) {
    if (!adjacent(g, u, v) && !adjacent(g, v, u)) return false;
    const NodeId a = find(u);
    const NodeId b = find(v);
    if (a == b) return false;
    parent[a] = b;
  }
  return static_cast<int>(edges.size()) ==
         g.node_count() - connected_component_count(g);
}

bool is_dominating_set(const Graph& g, const std::vector<NodeId>& nodes) {
  if (!all_in_range(g, nodes)) return false;
  const auto in = membership(g, nodes);
  for (NodeId u = 1; u <= g.node_count(); ++u) {
    if (in[u]) continue;
    bool covered = false;
    for (NodeId v : g.neighbors(u)) covered = covered || in[v];
    for (NodeId v : g.in_neighbors(u)) covered = covered || in[v];
    if (!covered) return false;
  }
  return true;
}

bool is_vertex_cover(const Graph& g, const std::vector<NodeId>& nodes) {
  if (!all_in_range(g, nodes)) return false;
  const auto in = membership(g, nodes);
  return std::all_of(g.edges().begin(), g.edges().end(), [&](const Edge& e) {
    return in[e.source] || in[e.target];
  });
}

bool is_independent_set(const Graph& g, const std::vector<NodeId>& nodes) {
  if (!all_in_range(g, nodes)) return false;
  const auto in = membership(g, nodes);
  return std::none_of(g.edges().begin(), g.edges().end(), [&](const Edge& e) {
    return in[e.source] && in[e.target];
  });
}

bool is_maximal_independent_set(const Graph& g,
                                const std::vector<NodeId>& nodes) {
  if (!is_independent_set(g, nodes)) return false;
  const auto in = membership(g, nodes);
  for (NodeId u = 1; u <= g.node_count(); ++u) {
    if (in[u]) continue;
    bool blocked = false;
    for (NodeId v : g.neighbors(u)) blocked = blocked || in[v];
    for (NodeId v : g.in_neighbors(u)) blocked = blocked || in[v];
    if (!blocked) return false;
  }
  return true;
}

bool is_edge_cover(const Graph& g, const EdgePairs& edges) {
  std::vector<bool> covered(static_cast<std::size_t>(g.node_count()) + 1, false);
  for (auto [u, v] : edges) {
    if (!adjacent(g, u, v) && !adjacent(g, v, u)) return false;
    covered[u] = covered[v] = true;
  }
  return std::all_of(covered.begin() + 1, covered.end(), [](bool b) { return b; });
}

bool is_matching(const Graph& g, const EdgePairs& edges) {
  std::vector<bool> used(static_cast<std::size_t>(g.node_count()) + 1, false);
  for (auto [u, v] : edges) {
    if (!adjacent(g, u, v) && !adjacent(g, v, u)) return false;
    if (used[u] || used[v]) return false;
    used[u] = used[v] = true;
  }
  return true;
}

bool is_tour(const Graph& g, const std::vector<NodeId>& tour) {
  std::vector<NodeId> cycle = tour;
  if (cycle.size() == static_cast<std::size_t>(g.node_count()) + 1 &&
      cycle.front() == cycle.back()) {
    cycle.pop_back();
  }
  if (!is_permutation_of_nodes(g, cycle) || cycle.size() < 2) return false;
  for (std::size_t i = 0; i < cycle.size(); ++i) {
    if (!g.has_edge(cycle[i], cycle[(i + 1) % cycle.size()])) return false;
  }
  return true;
}

bool is_hamiltonian_path(const Graph& g, const std::vector<NodeId>& path) {
  if (!is_permutation_of_nodes(g, path)) return false;
  for (std::size_t i = 1; i < path.size(); ++i) {
    if (!g.has_edge(path[i - 1], path[i])) return false;
  }
  return true;
}

double matching_weight(const Graph& g, const EdgePairs& edges) {
  return edge_set_weight(g, edges);
}

double edge_set_weight(const Graph& g, const EdgePairs& edges) {
  double total = 0.0;
  for (auto [u, v] : edges) {
    total += g.has_edge(u, v) ? g.weight_between(u, v) : g.weight_between(v, u);
  }
  return total;
}

double tour_weight(const Graph& g, const std::vector<NodeId>& tour) {
  std::vector<NodeId> cycle = tour;
  if (cycle.size() > 1 && cycle.front() == cycle.back()) cycle.pop_back();
  double total = 0.0;
  for (std::size_t i = 0; i < cycle.size(); ++i) {
    total += g.weight_between(cycle[i], cycle[(i + 1) % cycle.size()]);
  }
  return total;
}

std::vector<NodeId> minimum_dominating_set(const Graph& g) {
  require_size(g, kSubsetSolverLimit, "dominating set");
  const auto masks = closed_masks(g);
  const std::uint32_t full = (g.node_count() == 32)
                                 ? ~0u
                                 : (1u << g.node_count()) - 1u;
  return smallest_subset(g.node_count(), [&](std::uint32_t chosen) {
    std::uint32_t covered = 0;
    for (int i = 0; i < g.node_count(); ++i) {
      if (chosen & (1u << i)) covered |= masks[i];
    }
    return covered == full;
  });
}

std::vector<NodeId> minimum_vertex_cover(const Graph& g) {
  require_size(g, kSubsetSolverLimit, "vertex cover");
  return smallest_subset(g.node_count(), [&](std::uint32_t chosen) {
    for (const Edge& e : g.edges()) {
      if (!(chosen & (1u << (e.source - 1))) &&
          !(chosen & (1u << (e.target - 1)))) {
        return false;
      }
    }
    return true;
  });
}

std::vector<NodeId> greedy_maximal_independent_set(const Graph& g) {
  std::vector<bool> blocked(static_cast<std::size_t>(g.node_count()) + 1, false);
  std::vector<NodeId> out;
  for (NodeId u = 1; u <= g.node_count(); ++u) {
    if (blocked[u]) continue;
    out.push_back(u);
    for (NodeId v : g.neighbors(u)) blocked[v] = true;
    for (NodeId v : g.in_neighbors(u)) blocked[v] = true;
  }
  return out;
}

EdgePairs maximum_matching(const Graph& g) { return best_matching(g, false); }

EdgePairs maximum_weight_matching(const Graph& g) {
  return best_matching(g, true);
}

EdgePairs minimum_edge_cover(const Graph& g) {
  auto cover = maximum_matching(g);
  std::vector<bool> covered(static_cast<std::size_t>(g.node_count()) + 1, false);
  for (auto [u, v] : cover) covered[u] = covered[v] = true;
  for (NodeId u = 1; u <= g.node_count(); ++u) {
    if (covered[u]) continue;
    std::vector<NodeId> nbrs(g.neighbors(u).begin(), g.neighbors(u).end());
    nbrs.insert(nbrs.end(), g.in_neighbors(u).begin(), g.in_neighbors(u).end());
    if (nbrs.empty()) {
      throw QueryError("node " + std::to_string(u) +
                       " is isolated; no edge cover exists");
    }
    const NodeId v = *std::min_element(nbrs.begin(), nbrs.end());
    cover.emplace_back(std::min(u, v), std::max(u, v));
    covered[u] = true;
  }
  std::sort(cover.begin(), cover.end());
  return cover;
}

std::vector<NodeId> shortest_tour(const Graph& g) {
  require_size(g, kPermutationSolverLimit, "tour");
  const int n = g.node_count();
  if (n < 2) throw NoPathError("a tour needs at least two nodes");
  const std::size_t states = std::size_t{1} << n;
  std::vector<double> dp(states * n, kInf);
  std::vector<int> from(states * n, -1);
  auto at = [&](std::size_t mask, int j) { return mask * n + j; };
  auto w = [&](int i, int j) {
    return g.has_edge(i + 1, j + 1) ? g.weight_between(i + 1, j + 1) : kInf;
  };
  dp[at(1, 0)] = 0.0;
  for (std::size_t mask = 1; mask < states; mask += 2) {
    for (int j = 0; j < n; ++j) {
      const double cur = dp[at(mask, j)];
      if (std::isinf(cur)) continue;
      for (int k = 1; k < n; ++k) {
        if (mask & (std::size_t{1} << k)) continue;
        const double next = cur + w(j, k);
        const std::size_t m2 = mask | (std::size_t{1} << k);
        if (next < dp[at(m2, k)]) {
          dp[at(m2, k)] = next;
          from[at(m2, k)] = j;
        }
      }
    }
  }
  const std::size_t full = states - 1;
  double best = kInf;
  int last = -1;
  for (int j = 1; j < n; ++j) {
    const double total = dp[at(full, j)] + w(j, 0);
    if (total < best) {
      best = total;
      last = j;
    }
  }
  if (last < 0) throw NoPathError("graph has no Hamiltonian cycle");
  std::vector<NodeId> tour;
  std::size_t mask = full;
  for (int j = last; j != -1;) {
    tour.push_back(j + 1);
    const int prev = from[at(mask, j)];
    mask &= ~(std::size_t{1} << j);
    j = prev;
  }
  std::reverse(tour.begin(), tour.end());
  return tour;
}

std::vector<NodeId> find_hamiltonian_path(const Graph& g) {
  require_size(g, kPermutationSolverLimit, "Hamiltonian path");
  const int n = g.node_count();
  const std::size_t states = std::size_t{1} << n;
  std::vector<int> from(states * n, -2);  // -2 unreachable, -1 start
  auto at = [&](std::size_t mask, int j) { return mask * n + j; };
  for (int j = 0; j < n; ++j) from[at(std::size_t{1} << j, j)] = -1;
  for (std::size_t mask = 1; mask < states; ++mask) {
    for (int j = 0; j < n; ++j) {
      if (from[at(mask, j)] == -2) continue;
      for (NodeId k : g.neighbors(j + 1)) {
        const std::size_t bit = std::size_t{1} << (k - 1);
        if (mask & bit) continue;
        if (from[at(mask | bit, k - 1)] == -2) from[at(mask | bit, k - 1)] = j;
      }
    }
  }
  const std::size_t full = states - 1;
  for (int j = 0; j < n; ++j) {
    if (from[at(full, j)] == -2) continue;
    std::vector<NodeId> path;
    std::size_t mask = full;
    for (int cur = j; cur != -1;) {
      path.push_back(cur + 1);
      const int prev = from[at(mask, cur)];
      mask &= ~(std::size_t{1} << cur);
      cur = prev;
    }
    std::reverse(path.begin(), path.end());
    return path;
  }
  throw NoPathError("graph has no Hamiltonian path");
}

}  // namespace graphsym
