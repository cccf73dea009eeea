#include <algorithm>
#include <cctype>
#include <charconv>
#include <cmath>
#include <cstdio>
#include <string>

#include "graphsym/algorithms.hpp"
#include "graphsym/errors.hpp"
#include "graphsym/spectral.hpp"
#include "graphsym/tasks.hpp"
#include "graphsym/verifiers.hpp"

namespace graphsym {

using nlohmann::json;

namespace {

NodeId param(const TaskSpec& task, const Graph& g, const Params& params,
             const std::string& name) {
  auto it = params.find(name);
  if (it == params.end()) {
    throw QueryError("task " + task.id + " needs parameter '" + name + "'");
  }
  if (!g.contains(it->second)) {
    throw QueryError("parameter " + name + "=" + std::to_string(it->second) +
                     " is not a node of the graph");
  }
  return it->second;
}

json pairs_json(const EdgePairs& pairs) {
  json out = json::array();
  for (auto [u, v] : pairs) out.push_back({u, v});
  return out;
}

EdgePairs to_pairs(const json& j) {
  EdgePairs out;
  for (const auto& e : j) out.emplace_back(e[0].get<NodeId>(), e[1].get<NodeId>());
  return out;
}

std::vector<NodeId> to_nodes(const json& j) { return j.get<std::vector<NodeId>>(); }

bool close_to(double a, double b) {
  return std::abs(a - b) <= 1e-9 * std::max(1.0, std::abs(b));
}

EdgePairs normalized_set(EdgePairs pairs, bool directed) {
  if (!directed) {
    for (auto& [u, v] : pairs) {
      if (u > v) std::swap(u, v);
    }
  }
  std::sort(pairs.begin(), pairs.end());
  pairs.erase(std::unique(pairs.begin(), pairs.end()), pairs.end());
  return pairs;
}

std::optional<long long> as_integer(const json& v) {
  if (v.is_number_integer()) return v.get<long long>();
  double d = 0.0;
  if (v.is_number_float()) {
    d = v.get<double>();
  } else if (v.is_string()) {
    const std::string s = v.get<std::string>();
    char* end = nullptr;
    d = std::strtod(s.c_str(), &end);
    if (s.empty() || end != s.c_str() + s.size()) return std::nullopt;
  } else {
    return std::nullopt;
  }
  if (!std::isfinite(d) || std::abs(d - std::round(d)) > 1e-9) return std::nullopt;
  return static_cast<long long>(std::llround(d));
}

std::optional<std::vector<NodeId>> as_node_list(const json& v) {
  if (!v.is_array()) return std::nullopt;
  std::vector<NodeId> out;
  for (const auto& item : v) {
    auto x = as_integer(item);
    if (!x) return std::nullopt;
    out.push_back(static_cast<NodeId>(*x));
  }
  return out;
}

json verify_reference(const TaskSpec& task, const Graph& g) {
  const std::string& id = task.id;
  if (id == "dominating_set") return minimum_dominating_set(g);
  if (id == "min_vertex_cover") return minimum_vertex_cover(g);
  if (id == "maximal_independent_set") return greedy_maximal_independent_set(g);
  if (id == "min_edge_covering") return pairs_json(minimum_edge_cover(g));
  if (id == "bipartite_maximum_matching") return pairs_json(maximum_matching(g));
  if (id == "max_weight_matching") return pairs_json(maximum_weight_matching(g));
  if (id == "traveling_salesman_problem") return shortest_tour(g);
  if (id == "hamiltonian_path") return find_hamiltonian_path(g);
  throw ReferenceUnavailableError("no reference solver for task " + id);
}

bool verify(const TaskSpec& task, const Graph& g, const Params& params,
            const json& cand, const json& ref) {
  const std::string& id = task.id;
  if (id == "bfs") {
    return is_valid_bfs_order(g, param(task, g, params, "source"), to_nodes(cand));
  }
  if (id == "dfs") {
    return is_valid_dfs_order(g, param(task, g, params, "source"), to_nodes(cand));
  }
  if (id == "shortest_path") {
    const auto path = to_nodes(cand);
    return is_simple_path(g, path, param(task, g, params, "source"),
                          param(task, g, params, "target")) &&
           path.size() == ref.size();
  }
  if (id == "weighted_shortest_path") {
    const auto path = to_nodes(cand);
    return is_simple_path(g, path, param(task, g, params, "source"),
                          param(task, g, params, "target")) &&
           close_to(path_weight(g, path), path_weight(g, to_nodes(ref)));
  }
  if (id == "topological_sort") return is_topological_order(g, to_nodes(cand));
  if (id == "minimum_spanning_tree") {
    const auto edges = to_pairs(cand);
    return is_spanning_forest(g, edges) &&
           close_to(edge_set_weight(g, edges), edge_set_weight(g, to_pairs(ref)));
  }
  if (id == "dominating_set") {
    return is_dominating_set(g, to_nodes(cand)) && cand.size() == ref.size();
  }
  if (id == "min_vertex_cover") {
    return is_vertex_cover(g, to_nodes(cand)) && cand.size() == ref.size();
  }
  if (id == "maximal_independent_set") {
    return is_maximal_independent_set(g, to_nodes(cand));
  }
  if (id == "min_edge_covering") {
    return is_edge_cover(g, to_pairs(cand)) && cand.size() == ref.size();
  }
  if (id == "bipartite_maximum_matching") {
    return is_matching(g, to_pairs(cand)) && cand.size() == ref.size();
  }
  if (id == "max_weight_matching") {
    const auto edges = to_pairs(cand);
    return is_matching(g, edges) &&
           close_to(matching_weight(g, edges), matching_weight(g, to_pairs(ref)));
  }
  if (id == "traveling_salesman_problem") {
    const auto tour = to_nodes(cand);
    return is_tour(g, tour) &&
           close_to(tour_weight(g, tour), tour_weight(g, to_nodes(ref)));
  }
  if (id == "hamiltonian_path") return is_hamiltonian_path(g, to_nodes(cand));
  throw UnsupportedTaskError("no verifier for task " + id);
}

}  // namespace

json solve(const TaskSpec& task, const Graph& g, const Params& params) {
  if (task.spectral) {
    if (g.directed()) throw QueryError("spectral tasks need an undirected graph");
    return spectral_truth(*find_spectral_task(task.id), g);
  }
  if (!task.core_solver) {
    throw UnsupportedTaskError("task " + task.id +
                               " has no exact solver; ingest or compute a reference");
  }
  const std::string& id = task.id;
  auto p = [&](const char* name) { return param(task, g, params, name); };

  if (id == "node_number") return g.node_count();
  if (id == "edge_number") return g.edge_count();
  if (id == "degree") {
    const NodeId u = p("node");
    return g.directed() ? g.degree(u) + g.in_degree(u) : g.degree(u);
  }
  if (id == "neighbor") {
    const auto nb = g.neighbors(p("node"));
    return std::vector<NodeId>(nb.begin(), nb.end());
  }
  if (id == "common_neighbor") return common_neighbors(g, p("u"), p("v"));
  if (id == "edge_existence") return g.has_edge(p("u"), p("v"));
  if (id == "density") return density(g);
  if (id == "is_regular") return is_regular(g);
  if (id == "is_tournament") return is_tournament(g);
  if (id == "is_bipartite") return is_bipartite(g);
  if (id == "has_cycle") return has_cycle(g);
  if (id == "is_eulerian") return is_eulerian(g);
  if (id == "connected_component_number") return connected_component_count(g);
  if (id == "strongly_connected_number") return strongly_connected_count(g);
  if (id == "bfs") return bfs_order(g, p("source"));
  if (id == "dfs") return dfs_order(g, p("source"));
  if (id == "shortest_path") return shortest_path(g, p("source"), p("target"));
  if (id == "weighted_shortest_path") {
    return weighted_shortest_path(g, p("source"), p("target"));
  }
  if (id == "minimum_spanning_tree") {
    EdgePairs pairs;
    for (const Edge& e : minimum_spanning_forest(g)) {
      pairs.emplace_back(std::min(e.source, e.target), std::max(e.source, e.target));
    }
    return pairs_json(pairs);
  }
  if (id == "weighted_minimum_spanning_tree") return minimum_spanning_tree_weight(g);
  if (id == "triangles") return triangle_count(g);
  if (id == "clustering_coefficient") return local_clustering(g, p("node"));
  if (id == "degree_centrality") return degree_centrality(g, p("node"));
  if (id == "avg_neighbor_degree") return average_neighbor_degree(g, p("node"));
  if (id == "closeness_centrality") return closeness_centrality(g, p("node"));
  if (id == "harmonic_centrality") return harmonic_centrality(g, p("node"));
  if (id == "betweenness_centrality") return betweenness_centrality(g)[p("node")];
  if (id == "pagerank") return pagerank(g)[p("node")];
  if (id == "diameter") return diameter(g);
  if (id == "radius") return radius(g);
  if (id == "center") return center(g);
  if (id == "periphery") return periphery(g);
  if (id == "barycenter") return barycenter(g);
  if (id == "topological_sort") return topological_sort(g);
  if (id == "bridges") return pairs_json(bridges(g));
  if (id == "wiener_index") return wiener_index(g);
  if (id == "global_efficiency") return global_efficiency(g);
  if (id == "adamic_adar_index") return adamic_adar_index(g, p("u"), p("v"));
  if (id == "jaccard_coefficient") return jaccard_coefficient(g, p("u"), p("v"));
  if (id == "resource_allocation_index") {
    return resource_allocation_index(g, p("u"), p("v"));
  }
  if (id == "maximal_flow") return max_flow(g, p("source"), p("target"));
  if (id == "local_connectivity") return reachable(g, p("source"), p("target"));
  throw UnsupportedTaskError("no solver for task " + id);
}

json reference_answer(const TaskSpec& task, const Graph& g, const Params& params) {
  if (task.spectral || task.core_solver) return solve(task, g, params);
  return verify_reference(task, g);
}

std::string_view to_string(Verdict v) noexcept {
  switch (v) {
    case Verdict::kCorrect: return "correct";
    case Verdict::kIncorrect: return "incorrect";
    case Verdict::kUnparsed: return "unparsed";
  }
  return "?";
}

Verdict parse_verdict(std::string_view text) {
  if (text == "correct") return Verdict::kCorrect;
  if (text == "incorrect") return Verdict::kIncorrect;
  if (text == "unparsed") return Verdict::kUnparsed;
  throw ParseError("unknown verdict '" + std::string(text) + "'", 0);
}

Verdict check(const TaskSpec& task, const Graph& g, const Params& params,
              const std::optional<json>& candidate, const json& reference,
              const CheckOptions& options) {
  if (reference.is_null()) {
    if (task.checker == CheckerKind::kVerifier) {
      throw MissingReferenceError("task " + task.id + " needs a reference answer");
    }
    throw MissingReferenceError("task " + task.id + " has no ground truth");
  }
  if (!candidate) return Verdict::kUnparsed;
  const auto cand = coerce_answer(task.answer_kind, *candidate);
  if (!cand) return Verdict::kIncorrect;
  auto verdict = [](bool ok) { return ok ? Verdict::kCorrect : Verdict::kIncorrect; };

  switch (task.checker) {
    case CheckerKind::kTolerantFloat: {
      const double c = cand->get<double>();
      const double t = reference.get<double>();
      return verdict(std::abs(c - t) <=
                     std::max(options.abs_tol, options.rel_tol * std::abs(t)));
    }
    case CheckerKind::kVerifier:
      return verdict(verify(task, g, params, *cand, reference));
    case CheckerKind::kExact:
      break;
  }
  const auto ref = coerce_answer(task.answer_kind, reference);
  if (!ref) throw MissingReferenceError("malformed reference for task " + task.id);
  if (task.answer_kind == AnswerKind::kEdgeSet) {
    return verdict(normalized_set(to_pairs(*cand), g.directed()) ==
                   normalized_set(to_pairs(*ref), g.directed()));
  }
  return verdict(*cand == *ref);
}

std::optional<json> coerce_answer(AnswerKind kind, const json& value) {
  switch (kind) {
    case AnswerKind::kInteger:
    case AnswerKind::kNode: {
      if (value.is_boolean()) return std::nullopt;
      auto x = as_integer(value);
      if (!x) return std::nullopt;
      return json(*x);
    }
    case AnswerKind::kFloat: {
      if (value.is_number()) return json(value.get<double>());
      if (value.is_string()) {
        const std::string s = value.get<std::string>();
        char* end = nullptr;
        const double d = std::strtod(s.c_str(), &end);
        if (!s.empty() && end == s.c_str() + s.size() && std::isfinite(d)) return json(d);
      }
      return std::nullopt;
    }
    case AnswerKind::kBoolean: {
      if (value.is_boolean()) return json(value.get<bool>());
      if (value.is_string()) {
        std::string s = value.get<std::string>();
        std::transform(s.begin(), s.end(), s.begin(),
                       [](unsigned char c) { return static_cast<char>(std::tolower(c)); });
        if (s == "true" || s == "yes") return json(true);
        if (s == "false" || s == "no") return json(false);
      }
      return std::nullopt;
    }
    case AnswerKind::kNodeSequence: {
      auto nodes = as_node_list(value);
      if (!nodes) return std::nullopt;
      return json(*nodes);
    }
    case AnswerKind::kNodeSet: {
      auto nodes = as_node_list(value);
      if (!nodes) return std::nullopt;
      std::sort(nodes->begin(), nodes->end());
      nodes->erase(std::unique(nodes->begin(), nodes->end()), nodes->end());
      return json(*nodes);
    }
    case AnswerKind::kEdgeSet: {
      if (!value.is_array()) return std::nullopt;
      json out = json::array();
      for (const auto& e : value) {
        if (!e.is_array() || e.size() < 2) return std::nullopt;
        auto a = as_integer(e[0]);
        auto b = as_integer(e[1]);
        if (!a || !b) return std::nullopt;
        out.push_back({*a, *b});
      }
      return out;
    }
  }
  return std::nullopt;
}

std::string format_answer(AnswerKind kind, const json& value) {
  const auto v = coerce_answer(kind, value);
  if (!v) throw QueryError("value " + value.dump() + " does not fit answer kind " +
                           std::string(to_string(kind)));
  switch (kind) {
    case AnswerKind::kInteger:
    case AnswerKind::kNode:
      return std::to_string(v->get<long long>());
    case AnswerKind::kFloat: {
      // Shortest text that reads back to the same double.
      char buf[64];
      const auto res = std::to_chars(buf, buf + sizeof buf, v->get<double>());
      return std::string(buf, res.ptr);
    }
    case AnswerKind::kBoolean:
      return v->get<bool>() ? "True" : "False";
    case AnswerKind::kNodeSequence:
    case AnswerKind::kNodeSet: {
      std::string out = "[";
      for (std::size_t i = 0; i < v->size(); ++i) {
        if (i) out += ", ";
        out += std::to_string((*v)[i].get<long long>());
      }
      return out + "]";
    }
    case AnswerKind::kEdgeSet: {
      std::string out = "[";
      for (std::size_t i = 0; i < v->size(); ++i) {
        if (i) out += ", ";
        out += "(" + std::to_string((*v)[i][0].get<long long>()) + ", " +
               std::to_string((*v)[i][1].get<long long>()) + ")";
      }
      return out + "]";
    }
  }
  return {};
}

}  // namespace graphsym
