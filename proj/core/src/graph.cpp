#include "graphsym/graph.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>

#include "graphsym/errors.hpp"

namespace graphsym {

namespace {

bool is_decimal(std::string_view text) {
  std::size_t i = 0;
  if (i < text.size() && (text[i] == '-' || text[i] == '+')) ++i;
  std::size_t digits = 0;
  while (i < text.size() && text[i] >= '0' && text[i] <= '9') {
    ++i;
    ++digits;
  }
  if (digits == 0) return false;
  if (i < text.size() && text[i] == '.') {
    ++i;
    std::size_t frac = 0;
    while (i < text.size() && text[i] >= '0' && text[i] <= '9') {
      ++i;
      ++frac;
    }
    if (frac == 0) return false;
  }
  return i == text.size();
}

}  // namespace

Weight Weight::parse(std::string_view text) {
  if (!is_decimal(text)) {
    throw InvalidGraphError("edge weight is not a decimal number: '" +
                            std::string(text) + "'");
  }
  std::string owned(text);
  if (owned.front() == '+') owned.erase(owned.begin());
  double value = 0.0;
  const auto* begin = owned.data();
  auto [ptr, ec] = std::from_chars(begin, begin + owned.size(), value);
  if (ec != std::errc{}) {
    throw InvalidGraphError("edge weight out of range: '" + owned + "'");
  }
  return Weight(std::move(owned), value);
}

Weight Weight::from_value(double value) {
  if (!std::isfinite(value)) {
    throw InvalidGraphError("edge weight must be finite");
  }
  char buf[64];
  auto [ptr, ec] =
      std::to_chars(buf, buf + sizeof(buf), value, std::chars_format::fixed);
  std::string text(buf, ptr);
  return parse(text);
}

Graph::Graph(int node_count, bool directed, std::vector<Edge> edges)
    : n_(node_count), directed_(directed), edges_(std::move(edges)) {
  if (n_ < 1) {
    throw InvalidGraphError("graph must have at least one node");
  }
  out_.assign(static_cast<std::size_t>(n_) + 1, {});
  if (directed_) in_.assign(static_cast<std::size_t>(n_) + 1, {});
  std::size_t with_weight = 0;
  index_.reserve(edges_.size() * 2);
  for (std::size_t i = 0; i < edges_.size(); ++i) {
    const Edge& e = edges_[i];
    if (!contains(e.source) || !contains(e.target)) {
      throw InvalidGraphError("edge (" + std::to_string(e.source) + ", " +
                              std::to_string(e.target) +
                              ") has an endpoint outside 1.." +
                              std::to_string(n_));
    }
    if (e.source == e.target) {
      throw InvalidGraphError("self-loop at node " + std::to_string(e.source));
    }
    if (e.weight) ++with_weight;
    const bool fresh = index_.emplace(key(e.source, e.target), i).second;
    if (!fresh) {
      throw InvalidGraphError("duplicate edge (" + std::to_string(e.source) +
                              ", " + std::to_string(e.target) + ")");
    }
    if (!directed_) {
      if (!index_.emplace(key(e.target, e.source), i).second) {
        throw InvalidGraphError("duplicate undirected edge {" +
                                std::to_string(e.source) + ", " +
                                std::to_string(e.target) + "}");
      }
      out_[e.source].push_back(e.target);
      out_[e.target].push_back(e.source);
    } else {
      out_[e.source].push_back(e.target);
      in_[e.target].push_back(e.source);
    }
  }
  if (with_weight != 0 && with_weight != edges_.size()) {
    throw InvalidGraphError("either all edges carry a weight or none do");
  }
  weighted_ = !edges_.empty() && with_weight == edges_.size();
  for (auto& list : out_) std::sort(list.begin(), list.end());
  for (auto& list : in_) std::sort(list.begin(), list.end());
}

Graph Graph::undirected(int node_count,
                        std::initializer_list<std::pair<NodeId, NodeId>> edges) {
  std::vector<Edge> list;
  list.reserve(edges.size());
  for (auto [u, v] : edges) list.push_back(Edge{u, v, std::nullopt});
  return Graph(node_count, false, std::move(list));
}

Graph Graph::directed_graph(
    int node_count, std::initializer_list<std::pair<NodeId, NodeId>> edges) {
  std::vector<Edge> list;
  list.reserve(edges.size());
  for (auto [u, v] : edges) list.push_back(Edge{u, v, std::nullopt});
  return Graph(node_count, true, std::move(list));
}

std::span<const NodeId> Graph::neighbors(NodeId u) const {
  if (!contains(u)) {
    throw QueryError("node " + std::to_string(u) + " is not in 1.." +
                     std::to_string(n_));
  }
  return out_[u];
}

std::span<const NodeId> Graph::in_neighbors(NodeId u) const {
  if (!directed_) return neighbors(u);
  if (!contains(u)) {
    throw QueryError("node " + std::to_string(u) + " is not in 1.." +
                     std::to_string(n_));
  }
  return in_[u];
}

bool Graph::has_edge(NodeId u, NodeId v) const {
  return index_.contains(key(u, v));
}

std::optional<std::size_t> Graph::find_edge(NodeId u, NodeId v) const {
  auto it = index_.find(key(u, v));
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

double Graph::weight_between(NodeId u, NodeId v) const {
  auto idx = find_edge(u, v);
  if (!idx) {
    throw QueryError("no edge between " + std::to_string(u) + " and " +
                     std::to_string(v));
  }
  const Edge& e = edges_[*idx];
  return e.weight ? e.weight->value() : 1.0;
}

}  // namespace graphsym
