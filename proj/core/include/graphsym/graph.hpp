#pragma once

#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <unordered_map>
#include <utility>
#include <vector>

namespace graphsym {

/// Node identifiers are 1-based: a graph on n nodes uses ids 1..n.
using NodeId = int;

/// An edge weight kept as the exact decimal text it was read from.
///
/// Arithmetic uses the parsed binary value; rendering always reproduces the
/// original text so a round trip through any serialization is lossless.
class Weight {
 public:
  /// Accepts an optional sign, digits, and an optional fractional part.
  static Weight parse(std::string_view text);
  /// Shortest text that round-trips the given value.
  static Weight from_value(double value);

  const std::string& text() const noexcept { return text_; }
  double value() const noexcept { return value_; }

  friend bool operator==(const Weight& a, const Weight& b) {
    return a.text_ == b.text_;
  }

 private:
  Weight(std::string text, double value)
      : text_(std::move(text)), value_(value) {}
  std::string text_;
  double value_ = 0.0;
};

struct Edge {
  NodeId source = 0;
  NodeId target = 0;
  std::optional<Weight> weight;

  friend bool operator==(const Edge&, const Edge&) = default;
};

/// Immutable simple graph on nodes 1..n, optionally directed and weighted.
///
/// The stored edge sequence is kept verbatim (order and orientation) because
/// it feeds serialization. Self-loops, duplicate edges (unordered pairs for
/// undirected graphs) and partially weighted edge sets are rejected.
class Graph {
 public:
  Graph(int node_count, bool directed, std::vector<Edge> edges);

  static Graph undirected(int node_count,
                          std::initializer_list<std::pair<NodeId, NodeId>> edges);
  static Graph directed_graph(
      int node_count, std::initializer_list<std::pair<NodeId, NodeId>> edges);

  int node_count() const noexcept { return n_; }
  bool directed() const noexcept { return directed_; }
  bool weighted() const noexcept { return weighted_; }
  std::size_t edge_count() const noexcept { return edges_.size(); }
  std::span<const Edge> edges() const noexcept { return edges_; }

  /// Out-neighbors (all neighbors when undirected), ascending.
  std::span<const NodeId> neighbors(NodeId u) const;
  /// In-neighbors, ascending. Same as neighbors() for undirected graphs.
  std::span<const NodeId> in_neighbors(NodeId u) const;
  int degree(NodeId u) const { return static_cast<int>(neighbors(u).size()); }
  int in_degree(NodeId u) const {
    return static_cast<int>(in_neighbors(u).size());
  }

  bool contains(NodeId u) const noexcept { return u >= 1 && u <= n_; }
  bool has_edge(NodeId u, NodeId v) const;
  /// Index into edges() of the edge joining u and v, if any.
  std::optional<std::size_t> find_edge(NodeId u, NodeId v) const;
  /// Weight of the u-v edge, 1.0 for unweighted graphs. Throws QueryError
  /// when the edge does not exist.
  double weight_between(NodeId u, NodeId v) const;

  /// Exact equality: same n, directedness and edge sequence.
  friend bool operator==(const Graph& a, const Graph& b) {
    return a.n_ == b.n_ && a.directed_ == b.directed_ && a.edges_ == b.edges_;
  }

 private:
  static std::uint64_t key(NodeId u, NodeId v) noexcept {
    return (static_cast<std::uint64_t>(static_cast<std::uint32_t>(u)) << 32u) |
           static_cast<std::uint32_t>(v);
  }

  int n_;
  bool directed_;
  bool weighted_ = false;
  std::vector<Edge> edges_;
  std::vector<std::vector<NodeId>> out_;
  std::vector<std::vector<NodeId>> in_;
  std::unordered_map<std::uint64_t, std::size_t> index_;
};

}  // namespace graphsym
