#pragma once

#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>

#include <nlohmann/json.hpp>

#include "graphsym/graph.hpp"

namespace graphsym::testing {

inline std::filesystem::path tests_dir() { return GRAPHSYM_TESTS_DIR; }

inline std::string read_file(const std::filesystem::path& p) {
  std::ifstream in(p, std::ios::binary);
  if (!in) throw std::runtime_error("missing test file " + p.string());
  std::ostringstream s;
  s << in.rdbuf();
  return s.str();
}

inline nlohmann::json read_json(const std::filesystem::path& p) {
  return nlohmann::json::parse(read_file(p));
}

// The 19-node graph used throughout the prompt examples, in its stored order.
inline Graph appendix_graph() {
  return Graph::undirected(
      19, {{1, 7},   {1, 12},  {1, 6},   {1, 3},   {1, 2},   {7, 3},   {7, 6},
           {7, 12},  {12, 3},  {6, 17},  {6, 9},   {3, 2},   {4, 5},   {4, 8},
           {4, 10},  {4, 11},  {5, 15},  {5, 16},  {5, 8},   {5, 10},  {5, 13},
           {5, 11},  {5, 14},  {8, 10},  {10, 11}, {10, 14}, {11, 16}, {11, 13},
           {16, 18}, {13, 18}, {17, 9},  {17, 19}, {9, 19}});
}

inline Graph complete_graph(int n) {
  std::vector<Edge> edges;
  for (int u = 1; u <= n; ++u) {
    for (int v = u + 1; v <= n; ++v) edges.push_back({u, v, std::nullopt});
  }
  return Graph(n, false, std::move(edges));
}

}  // namespace graphsym::testing
