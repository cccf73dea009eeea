#pragma once

#include <span>
#include <vector>

#include "graphsym/graph.hpp"
#include "graphsym/rng.hpp"

namespace graphsym {

/// A node relabeling: a bijection on 1..n.
class Permutation {
 public:
  /// `images[i]` is the new label of node i+1. Throws InvalidPermutationError
  /// unless the values are exactly {1..n}.
  explicit Permutation(std::vector<NodeId> images);

  static Permutation identity(int n);

  int size() const noexcept { return static_cast<int>(images_.size()); }
  NodeId operator()(NodeId u) const;
  std::span<const NodeId> images() const noexcept { return images_; }
  Permutation inverse() const;

  friend bool operator==(const Permutation&, const Permutation&) = default;

 private:
  std::vector<NodeId> images_;
};

/// Uniform permutation of 1..n via Fisher-Yates. Throws EmptyDomainError for
/// n == 0.
Permutation random_permutation(int n, RngStream& rng);

/// Applies p to every endpoint. The result keeps the image of the stored edge
/// sequence (no re-sorting); weights and directedness carry over.
Graph relabel(const Graph& g, const Permutation& p);

/// Undirected: (min, max) pairs sorted by (source, target).
/// Directed: stored orientation, sorted by (source, target).
std::vector<Edge> canonical_edge_list(const Graph& g);

/// The same graph with its edge sequence replaced by canonical_edge_list.
Graph canonicalize(const Graph& g);

/// True when both graphs have the same n, directedness and canonical edges.
bool same_canonical(const Graph& a, const Graph& b);

/// Deterministic stand-in for the Erdos default edge order: BFS from `start`
/// expanding neighbors in ascending id; each edge is emitted once, oriented
/// from the node being expanded, the first time either endpoint is expanded.
/// Unreached components are then expanded from their smallest node id.
std::vector<Edge> bfs_default_order(const Graph& g, NodeId start = 1);

}  // namespace graphsym
