#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include "graphsym/graph.hpp"

// Combinatorial primitives composed by the task solvers. Ties are always
// broken by ascending node id; traversals follow out-edges on directed graphs.
namespace graphsym {

// -- basic structure --------------------------------------------------------

double density(const Graph& g);
bool is_regular(const Graph& g);
/// Directed graph with exactly one arc between every pair of nodes.
bool is_tournament(const Graph& g);
std::vector<NodeId> common_neighbors(const Graph& g, NodeId u, NodeId v);

// -- connectivity -----------------------------------------------------------

/// Weak component id per node (index 0 unused). Components are numbered in
/// order of their smallest node id.
std::vector<int> component_labels(const Graph& g);
int connected_component_count(const Graph& g);
/// Tarjan; undirected graphs report their connected components.
int strongly_connected_count(const Graph& g);
bool is_bipartite(const Graph& g);
bool has_cycle(const Graph& g);
/// Euler circuit exists (every node has even degree / in == out, and the
/// graph is connected / strongly connected over all nodes).
bool is_eulerian(const Graph& g);
/// Kahn's algorithm, always taking the smallest available node.
std::vector<NodeId> topological_sort(const Graph& g);
/// Whether v is reachable from u.
bool reachable(const Graph& g, NodeId u, NodeId v);
/// Bridges as (min, max) pairs, sorted.
std::vector<std::pair<NodeId, NodeId>> bridges(const Graph& g);

// -- traversal and paths ----------------------------------------------------

std::vector<NodeId> bfs_order(const Graph& g, NodeId start);
/// Recursive pre-order DFS.
std::vector<NodeId> dfs_order(const Graph& g, NodeId start);
/// Hop distances from `source` (-1 when unreachable).
std::vector<int> bfs_distances(const Graph& g, NodeId source);
/// Throws NoPathError when target is unreachable.
std::vector<NodeId> shortest_path(const Graph& g, NodeId source, NodeId target);
/// Dijkstra distances using edge weights (1 when unweighted); +inf when
/// unreachable.
std::vector<double> weighted_distances(const Graph& g, NodeId source);
std::vector<NodeId> weighted_shortest_path(const Graph& g, NodeId source,
                                           NodeId target);
double path_weight(const Graph& g, const std::vector<NodeId>& path);

/// Kruskal spanning forest; ties between equal weights go to the
/// lexicographically smaller (min, max) pair.
std::vector<Edge> minimum_spanning_forest(const Graph& g);
double minimum_spanning_tree_weight(const Graph& g);

/// Edmonds-Karp; capacities are edge weights (1 when unweighted), both
/// directions for undirected graphs.
double max_flow(const Graph& g, NodeId source, NodeId sink);

// -- counting and local statistics ----------------------------------------

std::int64_t triangle_count(const Graph& g);
double local_clustering(const Graph& g, NodeId u);
double average_clustering(const Graph& g);
double average_neighbor_degree(const Graph& g, NodeId u);
double jaccard_coefficient(const Graph& g, NodeId u, NodeId v);
double adamic_adar_index(const Graph& g, NodeId u, NodeId v);
double resource_allocation_index(const Graph& g, NodeId u, NodeId v);

// -- distance-based summaries ----------------------------------------------

/// How eccentricity summaries treat disconnected graphs.
enum class DisconnectedPolicy {
  /// Evaluate on the largest component(s). When several components tie for
  /// the largest size they are all used (diameter = max, radius = min), so
  /// the answer does not depend on labels.
  kLargestComponent,
  /// Throw DisconnectedGraphError.
  kError,
};

int diameter(const Graph& g,
             DisconnectedPolicy policy = DisconnectedPolicy::kLargestComponent);
int radius(const Graph& g,
           DisconnectedPolicy policy = DisconnectedPolicy::kLargestComponent);
std::vector<NodeId> center(
    const Graph& g,
    DisconnectedPolicy policy = DisconnectedPolicy::kLargestComponent);
std::vector<NodeId> periphery(
    const Graph& g,
    DisconnectedPolicy policy = DisconnectedPolicy::kLargestComponent);
/// Nodes minimizing the sum of distances to the rest of their component.
std::vector<NodeId> barycenter(
    const Graph& g,
    DisconnectedPolicy policy = DisconnectedPolicy::kLargestComponent);
/// Sum of distances over unordered pairs. Throws DisconnectedGraphError.
std::int64_t wiener_index(const Graph& g);
/// Mean of 1/d(u, v) over ordered pairs u != v, 0 for unreachable pairs.
double global_efficiency(const Graph& g);

// -- centralities (normalizations follow NetworkX defaults) ----------------

double degree_centrality(const Graph& g, NodeId u);
/// Wasserman-Faust scaled closeness over incoming distances.
double closeness_centrality(const Graph& g, NodeId u);
double harmonic_centrality(const Graph& g, NodeId u);
/// Brandes, normalized by the number of ordered (directed) or unordered
/// (undirected) pairs excluding u.
std::vector<double> betweenness_centrality(const Graph& g);
/// Power iteration, damping 0.85, at most 100 sweeps, tolerance n * 1e-9
/// on the L1 change; dangling mass is spread uniformly.
std::vector<double> pagerank(const Graph& g);

}  // namespace graphsym
