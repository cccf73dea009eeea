#pragma once

#include <utility>
#include <vector>

#include "graphsym/graph.hpp"

// Validity predicates for answers that are not unique, and exact reference
// solvers for the NP-hard and matching tasks on small graphs.
namespace graphsym {

using EdgePairs = std::vector<std::pair<NodeId, NodeId>>;

/// Largest n accepted by the subset and matching solvers.
inline constexpr int kSubsetSolverLimit = 20;
/// Largest n accepted by the Held-Karp style solvers.
inline constexpr int kPermutationSolverLimit = 16;

bool is_valid_bfs_order(const Graph& g, NodeId start,
                        const std::vector<NodeId>& order);
bool is_valid_dfs_order(const Graph& g, NodeId start,
                        const std::vector<NodeId>& order);
/// Consecutive nodes adjacent, endpoints as given, no repeated node.
bool is_simple_path(const Graph& g, const std::vector<NodeId>& path,
                    NodeId source, NodeId target);
bool is_topological_order(const Graph& g, const std::vector<NodeId>& order);
/// Acyclic, uses existing edges, and spans every component.
bool is_spanning_forest(const Graph& g, const EdgePairs& edges);

bool is_dominating_set(const Graph& g, const std::vector<NodeId>& nodes);
bool is_vertex_cover(const Graph& g, const std::vector<NodeId>& nodes);
bool is_independent_set(const Graph& g, const std::vector<NodeId>& nodes);
bool is_maximal_independent_set(const Graph& g, const std::vector<NodeId>& nodes);
bool is_edge_cover(const Graph& g, const EdgePairs& edges);
bool is_matching(const Graph& g, const EdgePairs& edges);
/// Visits every node once; a repeated first node at the end closes the tour
/// and is accepted. The closing edge must exist.
bool is_tour(const Graph& g, const std::vector<NodeId>& tour);
bool is_hamiltonian_path(const Graph& g, const std::vector<NodeId>& path);

double matching_weight(const Graph& g, const EdgePairs& edges);
/// Weight of the closed tour (closing edge added when absent).
double tour_weight(const Graph& g, const std::vector<NodeId>& tour);
double edge_set_weight(const Graph& g, const EdgePairs& edges);

// Exact solvers. Ties resolve to the lexicographically smallest answer.
// Throw ReferenceUnavailableError above the size limits.
std::vector<NodeId> minimum_dominating_set(const Graph& g);
std::vector<NodeId> minimum_vertex_cover(const Graph& g);
/// Greedy by ascending id (maximal, not maximum).
std::vector<NodeId> greedy_maximal_independent_set(const Graph& g);
EdgePairs maximum_matching(const Graph& g);
EdgePairs maximum_weight_matching(const Graph& g);
/// Maximum matching extended by the smallest incident edge of every
/// unmatched node. Throws QueryError if some node is isolated.
EdgePairs minimum_edge_cover(const Graph& g);
/// Optimal closed tour starting at node 1 (without the repeated end).
std::vector<NodeId> shortest_tour(const Graph& g);
/// Some Hamiltonian path; throws NoPathError when none exists.
std::vector<NodeId> find_hamiltonian_path(const Graph& g);

}  // namespace graphsym
