#include "graphsym/permutation.hpp"

#include <algorithm>
#include <deque>
#include <numeric>
#include <string>

#include "graphsym/errors.hpp"

namespace graphsym {

Permutation::Permutation(std::vector<NodeId> images)
    : images_(std::move(images)) {
  std::vector<bool> seen(images_.size() + 1, false);
  for (NodeId v : images_) {
    if (v < 1 || v > static_cast<NodeId>(images_.size()) || seen[v]) {
      throw InvalidPermutationError("mapping is not a bijection on 1.." +
                                    std::to_string(images_.size()));
    }
    seen[v] = true;
  }
}

Permutation Permutation::identity(int n) {
  std::vector<NodeId> images(static_cast<std::size_t>(n));
  std::iota(images.begin(), images.end(), 1);
  return Permutation(std::move(images));
}

NodeId Permutation::operator()(NodeId u) const {
  if (u < 1 || u > size()) {
    throw QueryError("node " + std::to_string(u) +
                     " outside permutation domain 1.." + std::to_string(size()));
  }
  return images_[static_cast<std::size_t>(u - 1)];
}

Permutation Permutation::inverse() const {
  std::vector<NodeId> inv(images_.size());
  for (std::size_t i = 0; i < images_.size(); ++i) {
    inv[static_cast<std::size_t>(images_[i] - 1)] = static_cast<NodeId>(i + 1);
  }
  return Permutation(std::move(inv));
}

Permutation random_permutation(int n, RngStream& rng) {
  if (n <= 0) throw EmptyDomainError("cannot permute an empty node set");
  std::vector<NodeId> images(static_cast<std::size_t>(n));
  std::iota(images.begin(), images.end(), 1);
  rng.shuffle(std::span<NodeId>(images));
  return Permutation(std::move(images));
}

Graph relabel(const Graph& g, const Permutation& p) {
  if (p.size() != g.node_count()) {
    throw PermutationSizeError("permutation size " + std::to_string(p.size()) +
                               " does not match node count " +
                               std::to_string(g.node_count()));
  }
  std::vector<Edge> edges;
  edges.reserve(g.edge_count());
  for (const Edge& e : g.edges()) {
    edges.push_back(Edge{p(e.source), p(e.target), e.weight});
  }
  return Graph(g.node_count(), g.directed(), std::move(edges));
}

std::vector<Edge> canonical_edge_list(const Graph& g) {
  std::vector<Edge> edges(g.edges().begin(), g.edges().end());
  if (!g.directed()) {
    for (Edge& e : edges) {
      if (e.source > e.target) std::swap(e.source, e.target);
    }
  }
  std::sort(edges.begin(), edges.end(), [](const Edge& a, const Edge& b) {
    return std::pair(a.source, a.target) < std::pair(b.source, b.target);
  });
  return edges;
}

Graph canonicalize(const Graph& g) {
  return Graph(g.node_count(), g.directed(), canonical_edge_list(g));
}

bool same_canonical(const Graph& a, const Graph& b) {
  return a.node_count() == b.node_count() && a.directed() == b.directed() &&
         canonical_edge_list(a) == canonical_edge_list(b);
}

std::vector<Edge> bfs_default_order(const Graph& g, NodeId start) {
  if (!g.contains(start)) {
    throw QueryError("BFS start node " + std::to_string(start) +
                     " not in graph");
  }
  const auto n = static_cast<std::size_t>(g.node_count());
  std::vector<bool> visited(n + 1, false);
  std::vector<bool> emitted(g.edge_count(), false);
  std::vector<Edge> order;
  order.reserve(g.edge_count());

  auto expand_from = [&](NodeId root) {
    std::deque<NodeId> queue{root};
    visited[root] = true;
    while (!queue.empty()) {
      const NodeId u = queue.front();
      queue.pop_front();
      for (NodeId v : g.neighbors(u)) {
        const std::size_t idx = *g.find_edge(u, v);
        if (!emitted[idx]) {
          emitted[idx] = true;
          order.push_back(Edge{u, v, g.edges()[idx].weight});
        }
        if (!visited[v]) {
          visited[v] = true;
          queue.push_back(v);
        }
      }
    }
  };

  expand_from(start);
  for (NodeId u = 1; u <= g.node_count(); ++u) {
    if (!visited[u]) expand_from(u);
  }
  return order;
}

}  // namespace graphsym
