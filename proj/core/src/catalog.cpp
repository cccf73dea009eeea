#include <algorithm>
#include <cctype>
#include <string>
#include <utility>

#include "graphsym/errors.hpp"
#include "graphsym/spectral.hpp"
#include "graphsym/tasks.hpp"

namespace graphsym {

namespace {

using D = Difficulty;
using K = AnswerKind;
using C = CheckerKind;
using G = GraphClass;

TaskSpec make(std::string id, D difficulty, K kind, C checker,
              std::vector<std::string> params, G cls, std::string description,
              std::string question, bool core_solver = true) {
  TaskSpec t;
  t.id = std::move(id);
  t.difficulty = difficulty;
  t.answer_kind = kind;
  t.checker = checker;
  t.params = std::move(params);
  t.graph_class = cls;
  t.description = std::move(description);
  t.question_template = std::move(question);
  t.core_solver = core_solver;
  return t;
}

std::vector<TaskSpec> build_catalog() {
  std::vector<TaskSpec> c;
  const std::vector<std::string> none;
  const std::vector<std::string> node{"node"};
  const std::vector<std::string> pair{"u", "v"};
  const std::vector<std::string> src{"source"};
  const std::vector<std::string> st{"source", "target"};

  // Easy
  c.push_back(make("node_number", D::kEasy, K::kInteger, C::kExact, none, G::kAny,
                   "The task is to determine the number of nodes in the graph.",
                   "How many nodes are in the graph?"));
  c.push_back(make("dominating_set", D::kEasy, K::kNodeSet, C::kVerifier, none,
                   G::kSmall,
                   "The task is to determine a minimum dominating set of the graph.\n\n"
                   "A dominating set is a subset of nodes such that every node is either "
                   "in the subset or adjacent to a node in the subset.",
                   "What is a minimum dominating set of the graph?", false));
  c.push_back(make("common_neighbor", D::kEasy, K::kNodeSet, C::kExact, pair, G::kAny,
                   "The task is to determine the common neighbors of two nodes.",
                   "What are the common neighbors of node {u} and node {v}?"));
  c.push_back(make("edge_number", D::kEasy, K::kInteger, C::kExact, none, G::kAny,
                   "The task is to determine the number of edges in the graph.",
                   "How many edges are in the graph?"));
  c.push_back(make("neighbor", D::kEasy, K::kNodeSet, C::kExact, node, G::kAny,
                   "The task is to determine the neighbors of a node.",
                   "What are the neighbors of node {node}?"));
  c.push_back(make("bfs", D::kEasy, K::kNodeSequence, C::kVerifier, src, G::kAny,
                   "The task is to determine the breadth-first search (BFS) traversal "
                   "order given a starting node.",
                   "What is the breadth-first search (BFS) traversal order for the "
                   "starting node {source}?"));
  c.push_back(make("has_cycle", D::kEasy, K::kBoolean, C::kExact, none, G::kForestish,
                   "The task is to determine whether the graph contains a cycle.",
                   "Does the graph have a cycle?"));
  c.push_back(make("dfs", D::kEasy, K::kNodeSequence, C::kVerifier, src, G::kAny,
                   "The task is to determine the depth-first search (DFS) traversal "
                   "order given a starting node.",
                   "What is the depth-first search (DFS) traversal order for the "
                   "starting node {source}?"));
  c.push_back(make("minimum_spanning_tree", D::kEasy, K::kEdgeSet, C::kVerifier, none,
                   G::kConnected,
                   "The task is to determine a minimum spanning tree of the graph.",
                   "What is a minimum spanning tree of the graph?"));
  c.push_back(make("weighted_minimum_spanning_tree", D::kEasy, K::kFloat,
                   C::kTolerantFloat, none, G::kWeightedConnected,
                   "The task is to determine the total weight of a minimum spanning "
                   "tree of the weighted graph.",
                   "What is the total weight of the minimum spanning tree of the graph?"));
  c.push_back(make("edge_existence", D::kEasy, K::kBoolean, C::kExact, pair, G::kAny,
                   "The task is to determine whether two nodes are directly connected "
                   "by an edge.",
                   "Is there an edge between node {u} and node {v}?"));
  c.push_back(make("is_regular", D::kEasy, K::kBoolean, C::kExact, none, G::kRegularish,
                   "The task is to determine whether the graph is regular, that is, "
                   "whether every node has the same degree.",
                   "Is the graph regular?"));
  c.push_back(make("degree", D::kEasy, K::kInteger, C::kExact, node, G::kAny,
                   "The task is to determine the degree of a node.",
                   "What is the degree of node {node}?"));
  c.push_back(make("is_tournament", D::kEasy, K::kBoolean, C::kExact, none,
                   G::kTournamentish,
                   "The task is to determine whether the directed graph is a "
                   "tournament, that is, whether every pair of distinct nodes is "
                   "joined by exactly one directed edge.",
                   "Is the graph a tournament?"));
  c.push_back(make("density", D::kEasy, K::kFloat, C::kTolerantFloat, none, G::kAny,
                   "The task is to determine the density of the graph.",
                   "What is the density of the graph?"));

  // Medium
  c.push_back(make("adamic_adar_index", D::kMedium, K::kFloat, C::kTolerantFloat, pair,
                   G::kAny,
                   "The task is to determine the Adamic-Adar index of two nodes.",
                   "What is the Adamic-Adar index between node {u} and node {v}?"));
  c.push_back(make("clustering_coefficient", D::kMedium, K::kFloat, C::kTolerantFloat,
                   node, G::kAny,
                   "The task is to determine the clustering coefficient of a node.",
                   "What is the clustering coefficient of node {node}?"));
  c.push_back(make("connected_component_number", D::kMedium, K::kInteger, C::kExact,
                   none, G::kAny,
                   "The task is to determine the number of connected components in "
                   "the graph.",
                   "How many connected components are in the graph?"));
  c.push_back(make("bipartite_maximum_matching", D::kMedium, K::kEdgeSet, C::kVerifier,
                   none, G::kSmallBipartite,
                   "The task is to determine a maximum matching of the bipartite graph.",
                   "What is a maximum matching of the graph?", false));
  c.push_back(make("local_connectivity", D::kMedium, K::kBoolean, C::kExact, st, G::kAny,
                   "The task is to determine whether two nodes are connected by a path.",
                   "Is there a path between node {source} and node {target}?"));
  c.push_back(make("jaccard_coefficient", D::kMedium, K::kFloat, C::kTolerantFloat, pair,
                   G::kAny,
                   "The task is to determine the Jaccard coefficient of two nodes.",
                   "What is the Jaccard coefficient between node {u} and node {v}?"));
  c.push_back(make("min_edge_covering", D::kMedium, K::kEdgeSet, C::kVerifier, none,
                   G::kSmall,
                   "The task is to determine a minimum edge cover of the graph.\n\n"
                   "An edge cover is a set of edges such that every node is incident "
                   "to at least one edge of the set.",
                   "What is a minimum edge cover of the graph?", false));
  c.push_back(make("is_eulerian", D::kMedium, K::kBoolean, C::kExact, none,
                   G::kEulerianish,
                   "The task is to determine whether the graph is Eulerian, that is, "
                   "whether it has a closed walk using every edge exactly once.",
                   "Is the graph Eulerian?"));
  c.push_back(make("degree_centrality", D::kMedium, K::kFloat, C::kTolerantFloat, node,
                   G::kAny,
                   "The task is to determine the degree centrality of a node.",
                   "What is the degree centrality of node {node}?"));
  c.push_back(make("is_bipartite", D::kMedium, K::kBoolean, C::kExact, none,
                   G::kBipartiteish,
                   "The task is to determine whether the graph is bipartite.",
                   "Is the graph bipartite?"));
  c.push_back(make("resource_allocation_index", D::kMedium, K::kFloat,
                   C::kTolerantFloat, pair, G::kAny,
                   "The task is to determine the resource allocation index of two nodes.",
                   "What is the resource allocation index between node {u} and node "
                   "{v}?"));
  c.push_back(make("pagerank", D::kMedium, K::kFloat, C::kTolerantFloat, node,
                   G::kDirected,
                   "The task is to determine the PageRank value of a node.\n\n"
                   "Use a damping factor of 0.85.",
                   "What is the PageRank value of node {node}?"));

  // Hard
  c.push_back(make("max_weight_matching", D::kHard, K::kEdgeSet, C::kVerifier, none,
                   G::kSmallWeighted,
                   "The task is to determine a maximum weight matching of the graph.",
                   "What is a maximum weight matching of the graph?", false));
  c.push_back(make("closeness_centrality", D::kHard, K::kFloat, C::kTolerantFloat, node,
                   G::kAny,
                   "The task is to determine the closeness centrality of a node.",
                   "What is the closeness centrality of node {node}?"));
  c.push_back(make("traveling_salesman_problem", D::kHard, K::kNodeSequence,
                   C::kVerifier, none, G::kSmallComplete,
                   "The task is to determine a shortest tour that visits every node "
                   "exactly once and returns to the starting node.",
                   "What is a shortest tour of the graph?", false));
  c.push_back(make("strongly_connected_number", D::kHard, K::kInteger, C::kExact, none,
                   G::kDirected,
                   "The task is to determine the number of strongly connected "
                   "components in the directed graph.",
                   "How many strongly connected components are in the graph?"));
  c.push_back(make("shortest_path", D::kHard, K::kNodeSequence, C::kVerifier, st,
                   G::kConnected,
                   "The task is to determine the shortest path between two nodes.\n\n"
                   "The input nodes are guaranteed to be connected.",
                   "What is the shortest path between node {source} and node {target}?"));
  c.push_back(make("weighted_shortest_path", D::kHard, K::kNodeSequence, C::kVerifier,
                   st, G::kWeightedConnected,
                   "The task is to determine the shortest path between two nodes of "
                   "the weighted graph.\n\nThe input nodes are guaranteed to be "
                   "connected.",
                   "What is the shortest path between node {source} and node {target}?"));
  c.push_back(make("center", D::kHard, K::kNodeSet, C::kExact, none, G::kConnected,
                   "The task is to determine the center of the graph, the set of nodes "
                   "with minimum eccentricity.",
                   "What is the center of the graph?"));
  c.push_back(make("diameter", D::kHard, K::kInteger, C::kExact, none, G::kConnected,
                   "The task is to determine the diameter of the graph.",
                   "What is the diameter of the graph?"));
  c.push_back(make("barycenter", D::kHard, K::kNodeSet, C::kExact, none, G::kConnected,
                   "The task is to determine the barycenter of the graph, the set of "
                   "nodes minimizing the sum of distances to all other nodes.",
                   "What is the barycenter of the graph?"));
  c.push_back(make("radius", D::kHard, K::kInteger, C::kExact, none, G::kConnected,
                   "The task is to determine the radius of the graph.",
                   "What is the radius of the graph?"));
  c.push_back(make("topological_sort", D::kHard, K::kNodeSequence, C::kVerifier, none,
                   G::kDag,
                   "The task is to determine a topological ordering of the directed "
                   "acyclic graph.",
                   "What is a topological ordering of the graph?"));
  c.push_back(make("periphery", D::kHard, K::kNodeSet, C::kExact, none, G::kConnected,
                   "The task is to determine the periphery of the graph, the set of "
                   "nodes with maximum eccentricity.",
                   "What is the periphery of the graph?"));
  c.push_back(make("betweenness_centrality", D::kHard, K::kFloat, C::kTolerantFloat,
                   node, G::kAny,
                   "The task is to determine the betweenness centrality of a node.",
                   "What is the betweenness centrality of node {node}?"));
  c.push_back(make("triangles", D::kHard, K::kInteger, C::kExact, none, G::kAny,
                   "The task is to determine the number of triangles in the graph.",
                   "How many triangles are in the graph?"));
  c.push_back(make("avg_neighbor_degree", D::kHard, K::kFloat, C::kTolerantFloat, node,
                   G::kAny,
                   "The task is to determine the average degree of the neighbors of a "
                   "node.",
                   "What is the average neighbor degree of node {node}?"));
  c.push_back(make("harmonic_centrality", D::kHard, K::kFloat, C::kTolerantFloat, node,
                   G::kAny,
                   "The task is to determine the harmonic centrality of a node.",
                   "What is the harmonic centrality of node {node}?"));
  c.push_back(make("bridges", D::kHard, K::kEdgeSet, C::kExact, none, G::kAny,
                   "The task is to determine all bridges of the graph.\n\n"
                   "A bridge is an edge whose removal increases the number of "
                   "connected components.",
                   "What are the bridges of the graph?"));

  // Challenging
  c.push_back(make("global_efficiency", D::kChallenging, K::kFloat, C::kTolerantFloat,
                   none, G::kAny,
                   "The task is to determine the global efficiency of the graph.",
                   "What is the global efficiency of the graph?"));
  c.push_back(make("maximal_independent_set", D::kChallenging, K::kNodeSet,
                   C::kVerifier, none, G::kAny,
                   "The task is to determine a maximal independent set of the graph.\n\n"
                   "An independent set is maximal when no further node can be added "
                   "to it.",
                   "What is a maximal independent set of the graph?", false));
  c.push_back(make("maximal_flow", D::kChallenging, K::kFloat, C::kTolerantFloat, st,
                   G::kFlowNetwork,
                   "The task is to determine the value of the maximum flow between two "
                   "nodes, using edge weights as capacities.",
                   "What is the value of the maximum flow from node {source} to node "
                   "{target}?"));
  c.push_back(make("wiener_index", D::kChallenging, K::kInteger, C::kExact, none,
                   G::kConnected,
                   "The task is to determine the Wiener index of the graph, the sum of "
                   "shortest-path distances over all pairs of nodes.",
                   "What is the Wiener index of the graph?"));
  c.push_back(make("hamiltonian_path", D::kChallenging, K::kNodeSequence, C::kVerifier,
                   none, G::kHamiltonian,
                   "The task is to determine a Hamiltonian path of the graph, a path "
                   "that visits every node exactly once.",
                   "What is a Hamiltonian path of the graph?", false));
  c.push_back(make("min_vertex_cover", D::kChallenging, K::kNodeSet, C::kVerifier, none,
                   G::kSmall,
                   "The task is to determine a minimum vertex cover of the graph.\n\n"
                   "A vertex cover is a set of nodes such that every edge has at least "
                   "one endpoint in the set.",
                   "What is a minimum vertex cover of the graph?", false));

  const std::pair<SpectralTask, const char*> kQuestions[] = {
      {SpectralTask::kGraphEnergy, "What is the graph energy of the graph?"},
      {SpectralTask::kNComponents,
       "How many connected components does the graph have?"},
      {SpectralTask::kSumLambdaSquared,
       "What is the sum of the squared adjacency eigenvalues of the graph?"},
      {SpectralTask::kAlgebraicConnectivity,
       "What is the algebraic connectivity of the graph?"},
      {SpectralTask::kEstradaIndex, "What is the Estrada index of the graph?"},
      {SpectralTask::kLaplacianEnergy, "What is the Laplacian energy of the graph?"},
      {SpectralTask::kNaturalConnectivity,
       "What is the natural connectivity of the graph?"},
      {SpectralTask::kSpectralGap, "What is the spectral gap of the graph?"},
      {SpectralTask::kSpectralRadius, "What is the spectral radius of the graph?"},
      {SpectralTask::kEigenvectorCentTop,
       "What is the top eigenvector centrality of the graph?"},
      {SpectralTask::kHeatTraceT1, "What is the heat trace at t = 1 of the graph?"},
      {SpectralTask::kVonNeumannEntropy,
       "What is the von Neumann entropy of the graph?"},
  };
  for (const auto& [s, question] : kQuestions) {
    const std::string_view diff = spectral_difficulty(s);
    TaskSpec t = make(std::string(to_string(s)),
                      diff == "Easy"     ? D::kEasy
                      : diff == "Medium" ? D::kMedium
                                         : D::kHard,
                      K::kFloat, C::kTolerantFloat, none, G::kAny,
                      "The task is to compute a spectral property of the graph.\n\n" +
                          std::string(spectral_definition(s)),
                      question);
    t.spectral = true;
    c.push_back(std::move(t));
  }
  return c;
}

}  // namespace

std::string_view to_string(Difficulty d) noexcept {
  switch (d) {
    case Difficulty::kEasy: return "Easy";
    case Difficulty::kMedium: return "Medium";
    case Difficulty::kHard: return "Hard";
    case Difficulty::kChallenging: return "Challenging";
  }
  return "?";
}

std::string_view to_string(AnswerKind k) noexcept {
  switch (k) {
    case AnswerKind::kInteger: return "integer";
    case AnswerKind::kFloat: return "float";
    case AnswerKind::kBoolean: return "boolean";
    case AnswerKind::kNode: return "node";
    case AnswerKind::kNodeSequence: return "node_sequence";
    case AnswerKind::kNodeSet: return "node_set";
    case AnswerKind::kEdgeSet: return "edge_set";
  }
  return "?";
}

std::string_view to_string(CheckerKind k) noexcept {
  switch (k) {
    case CheckerKind::kExact: return "exact";
    case CheckerKind::kTolerantFloat: return "tolerant_float";
    case CheckerKind::kVerifier: return "verifier";
  }
  return "?";
}

const std::vector<TaskSpec>& task_catalog() {
  static const std::vector<TaskSpec> catalog = build_catalog();
  return catalog;
}

std::string canonical_task_name(std::string_view raw) {
  std::string s;
  for (char ch : raw) {
    if (ch == ' ' || ch == '-') {
      s.push_back('_');
    } else {
      s.push_back(static_cast<char>(std::tolower(static_cast<unsigned char>(ch))));
    }
  }
  while (!s.empty() && s.back() == '_') s.pop_back();
  while (!s.empty() && s.front() == '_') s.erase(s.begin());
  // Spellings seen in scanned result tables.
  static const std::pair<const char*, const char*> kRepairs[] = {
      {"academic_adm_index", "adamic_adar_index"},
      {"adamic_adar", "adamic_adar_index"},
      {"faceted_coefficient", "jaccard_coefficient"},
      {"jaccard", "jaccard_coefficient"},
      {"triangle", "triangles"},
      {"page_rank", "pagerank"},
      {"eigenvector_centrality_top", "eigenvector_cent_top"},
  };
  for (const auto& [from, to] : kRepairs) {
    if (s == from) return to;
  }
  return s;
}

const TaskSpec& find_task(std::string_view name) {
  const std::string id = canonical_task_name(name);
  const auto& catalog = task_catalog();
  auto it = std::find_if(catalog.begin(), catalog.end(),
                         [&](const TaskSpec& t) { return t.id == id; });
  if (it == catalog.end()) throw UnknownTaskError("unknown task '" + std::string(name) + "'");
  return *it;
}

std::string question_text(const TaskSpec& task, const Params& params) {
  std::string out;
  const std::string& tpl = task.question_template;
  for (std::size_t i = 0; i < tpl.size();) {
    if (tpl[i] == '{') {
      const std::size_t close = tpl.find('}', i);
      const std::string key = tpl.substr(i + 1, close - i - 1);
      auto it = params.find(key);
      if (it == params.end()) {
        throw QueryError("task " + task.id + " needs parameter '" + key + "'");
      }
      out += std::to_string(it->second);
      i = close + 1;
    } else {
      out.push_back(tpl[i++]);
    }
  }
  return out;
}

std::string format_instruction(AnswerKind kind) {
  switch (kind) {
    case AnswerKind::kInteger:
      return "You need to format your answer as an integer.";
    case AnswerKind::kFloat:
      return "You need to format your answer as a float number.";
    case AnswerKind::kBoolean:
      return "You need to format your answer as True or False.";
    case AnswerKind::kNode:
      return "You need to format your answer as a single node id.";
    case AnswerKind::kNodeSequence:
      return "You need to format your answer as a list of nodes, e.g., "
             "[node-1, node-2, ..., node-n].";
    case AnswerKind::kNodeSet:
      return "You need to format your answer as a list of nodes in ascending "
             "order, e.g., [node-1, node-2, ..., node-n].";
    case AnswerKind::kEdgeSet:
      return "You need to format your answer as a list of edges, e.g., "
             "[(u1, v1), (u2, v2), ..., (un, vn)].";
  }
  return {};
}

}  // namespace graphsym
