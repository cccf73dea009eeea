#include <algorithm>
#include <numeric>
#include <set>
#include <string>

#include "graphsym/errors.hpp"
#include "graphsym/tasks.hpp"

namespace graphsym {

namespace {

int uniform_int(RngStream& rng, int lo, int hi) {
  return lo + static_cast<int>(rng.bounded(static_cast<std::uint32_t>(hi - lo + 1)));
}

class Builder {
 public:
  Builder(int n, bool directed) : n_(n), directed_(directed) {}

  bool has(NodeId u, NodeId v) const {
    return keys_.count(key(u, v)) > 0 || (!directed_ && keys_.count(key(v, u)) > 0);
  }
  void add(NodeId u, NodeId v, std::optional<int> w = std::nullopt) {
    if (u == v || has(u, v)) return;
    keys_.insert(key(u, v));
    Edge e{u, v, std::nullopt};
    if (w) e.weight = Weight::parse(std::to_string(*w));
    edges_.push_back(std::move(e));
  }
  void remove_random(RngStream& rng) {
    if (edges_.empty()) return;
    const auto i = rng.bounded(static_cast<std::uint32_t>(edges_.size()));
    keys_.erase(key(edges_[i].source, edges_[i].target));
    edges_.erase(edges_.begin() + i);
  }
  void weigh(RngStream& rng, int lo, int hi) {
    for (Edge& e : edges_) e.weight = Weight::parse(std::to_string(uniform_int(rng, lo, hi)));
  }
  Graph build() const { return Graph(n_, directed_, edges_); }

 private:
  static std::uint64_t key(NodeId u, NodeId v) {
    return (static_cast<std::uint64_t>(u) << 32u) | static_cast<std::uint32_t>(v);
  }
  int n_;
  bool directed_;
  std::vector<Edge> edges_;
  std::set<std::uint64_t> keys_;
};

std::vector<NodeId> shuffled_nodes(int n, RngStream& rng) {
  std::vector<NodeId> nodes(static_cast<std::size_t>(n));
  std::iota(nodes.begin(), nodes.end(), 1);
  rng.shuffle(std::span<NodeId>(nodes));
  return nodes;
}

void add_gnp(Builder& b, int n, double p, bool directed, RngStream& rng) {
  for (NodeId u = 1; u <= n; ++u) {
    for (NodeId v = directed ? 1 : u + 1; v <= n; ++v) {
      if (u != v && rng.uniform() < p) b.add(u, v);
    }
  }
}

// Random recursive tree over a shuffled node order.
void add_tree(Builder& b, int n, RngStream& rng) {
  const auto order = shuffled_nodes(n, rng);
  for (int i = 1; i < n; ++i) {
    b.add(order[static_cast<std::size_t>(rng.bounded(static_cast<std::uint32_t>(i)))],
          order[static_cast<std::size_t>(i)]);
  }
}

Graph connected(RngStream& rng, int lo, int hi) {
  const int n = uniform_int(rng, lo, hi);
  Builder b(n, false);
  add_tree(b, n, rng);
  add_gnp(b, n, 0.05 + 0.2 * rng.uniform(), false, rng);
  return b.build();
}

Graph bipartite(RngStream& rng, int lo, int hi, bool perturb) {
  const int n = uniform_int(rng, lo, hi);
  const auto order = shuffled_nodes(n, rng);
  const int left = std::max(1, n / 2);
  Builder b(n, false);
  const double p = 0.25 + 0.35 * rng.uniform();
  for (int i = 0; i < left; ++i) {
    for (int j = left; j < n; ++j) {
      if (rng.uniform() < p) b.add(order[i], order[j]);
    }
  }
  if (perturb && rng.bounded(2) == 0 && left >= 2) b.add(order[0], order[1]);
  return b.build();
}

}  // namespace

Graph random_graph(GraphClass cls, RngStream& rng) {
  switch (cls) {
    case GraphClass::kAny: {
      const int n = uniform_int(rng, 5, 20);
      Builder b(n, false);
      add_gnp(b, n, 0.1 + 0.3 * rng.uniform(), false, rng);
      return b.build();
    }
    case GraphClass::kConnected:
      return connected(rng, 5, 20);
    case GraphClass::kDirected: {
      const int n = uniform_int(rng, 5, 15);
      Builder b(n, true);
      add_gnp(b, n, 0.1 + 0.2 * rng.uniform(), true, rng);
      return b.build();
    }
    case GraphClass::kDag: {
      const int n = uniform_int(rng, 5, 15);
      const auto order = shuffled_nodes(n, rng);
      Builder b(n, true);
      const double p = 0.15 + 0.25 * rng.uniform();
      for (int i = 0; i < n; ++i) {
        for (int j = i + 1; j < n; ++j) {
          if (rng.uniform() < p) b.add(order[i], order[j]);
        }
      }
      return b.build();
    }
    case GraphClass::kTournamentish: {
      const int n = uniform_int(rng, 4, 10);
      Builder b(n, true);
      for (NodeId u = 1; u <= n; ++u) {
        for (NodeId v = u + 1; v <= n; ++v) {
          if (rng.bounded(2) == 0) b.add(u, v); else b.add(v, u);
        }
      }
      if (rng.bounded(2) == 0) b.remove_random(rng);
      return b.build();
    }
    case GraphClass::kRegularish: {
      const int n = 2 * uniform_int(rng, 3, 8);
      const int half = uniform_int(rng, 1, 2);
      const auto order = shuffled_nodes(n, rng);
      Builder b(n, false);
      for (int i = 0; i < n; ++i) {
        for (int k = 1; k <= half; ++k) b.add(order[i], order[(i + k) % n]);
      }
      if (rng.bounded(2) == 0) b.remove_random(rng);
      return b.build();
    }
    case GraphClass::kBipartiteish:
      return bipartite(rng, 5, 16, true);
    case GraphClass::kEulerianish: {
      const int n = uniform_int(rng, 5, 14);
      const auto order = shuffled_nodes(n, rng);
      Builder b(n, false);
      for (int i = 0; i < n; ++i) b.add(order[i], order[(i + 1) % n]);
      // A triangle on fresh chords keeps every degree even.
      if (rng.bounded(2) == 0 && n >= 6) {
        b.add(order[0], order[2]);
        b.add(order[2], order[4]);
        b.add(order[4], order[0]);
      }
      if (rng.bounded(2) == 0) b.add(order[1], order[static_cast<std::size_t>(n) / 2 + 1]);
      return b.build();
    }
    case GraphClass::kForestish: {
      const int n = uniform_int(rng, 5, 16);
      Builder b(n, false);
      add_tree(b, n, rng);
      const int cuts = uniform_int(rng, 0, 2);
      for (int i = 0; i < cuts; ++i) b.remove_random(rng);
      if (rng.bounded(2) == 0) {
        const NodeId u = uniform_int(rng, 1, n);
        const NodeId v = uniform_int(rng, 1, n);
        b.add(u, v);
      }
      return b.build();
    }
    case GraphClass::kWeightedConnected: {
      const int n = uniform_int(rng, 5, 16);
      Builder b(n, false);
      add_tree(b, n, rng);
      add_gnp(b, n, 0.05 + 0.2 * rng.uniform(), false, rng);
      b.weigh(rng, 1, 10);
      return b.build();
    }
    case GraphClass::kFlowNetwork: {
      const int n = uniform_int(rng, 5, 12);
      Builder b(n, true);
      add_gnp(b, n, 0.2 + 0.2 * rng.uniform(), true, rng);
      b.weigh(rng, 1, 20);
      return b.build();
    }
    case GraphClass::kSmall:
      return connected(rng, 4, 10);
    case GraphClass::kSmallBipartite:
      return bipartite(rng, 4, 10, false);
    case GraphClass::kSmallWeighted: {
      const int n = uniform_int(rng, 4, 10);
      Builder b(n, false);
      add_gnp(b, n, 0.25 + 0.3 * rng.uniform(), false, rng);
      b.weigh(rng, 1, 10);
      return b.build();
    }
    case GraphClass::kSmallComplete: {
      const int n = uniform_int(rng, 4, 8);
      Builder b(n, false);
      add_gnp(b, n, 1.0, false, rng);
      b.weigh(rng, 1, 20);
      return b.build();
    }
    case GraphClass::kHamiltonian: {
      const int n = uniform_int(rng, 4, 10);
      const auto order = shuffled_nodes(n, rng);
      Builder b(n, false);
      for (int i = 1; i < n; ++i) b.add(order[i - 1], order[i]);
      add_gnp(b, n, 0.1 + 0.2 * rng.uniform(), false, rng);
      return b.build();
    }
  }
  throw InvalidSpecError("unknown graph class");
}

std::vector<TaskInstance> generate_instances(const TaskSpec& task, int count,
                                             std::uint64_t seed) {
  RngStream rng(derive_seed(seed, task.id));
  std::vector<TaskInstance> out;
  int attempts = 0;
  while (static_cast<int>(out.size()) < count) {
    if (++attempts > 100 * std::max(count, 1)) {
      throw ReferenceUnavailableError("could not generate valid instances for " +
                                      task.id);
    }
    Graph g = random_graph(task.graph_class, rng);
    const int n = g.node_count();
    Params params;
    const auto& names = task.params;
    if (names.size() == 1) {
      params[names[0]] = uniform_int(rng, 1, n);
    } else if (names.size() == 2) {
      NodeId a = uniform_int(rng, 1, n);
      NodeId b = uniform_int(rng, 1, n - 1);
      if (b >= a) ++b;
      // Half of the pair queries land on an existing edge.
      if (task.graph_class == GraphClass::kAny && g.edge_count() > 0 &&
          rng.bounded(2) == 0) {
        const Edge& e = g.edges()[rng.bounded(static_cast<std::uint32_t>(g.edge_count()))];
        a = e.source;
        b = e.target;
      }
      params[names[0]] = a;
      params[names[1]] = b;
    }
    nlohmann::json truth;
    try {
      truth = reference_answer(task, g, params);
    } catch (const Error&) {
      continue;
    }
    out.push_back(TaskInstance{.task = task.id,
                               .graph_id = task.id + "-" + std::to_string(out.size()),
                               .graph = std::move(g),
                               .params = std::move(params),
                               .truth = std::move(truth),
                               .source = InstanceSource::kComputed,
                               .question = std::nullopt});
  }
  return out;
}

}  // namespace graphsym
