#pragma once

#include <map>
#include <optional>
#include <string>

#include <nlohmann/json.hpp>

#include "graphsym/graph.hpp"

namespace graphsym {

/// Query parameters by name ("node", "source", "target", ...). Every task
/// parameter is a node id.
using Params = std::map<std::string, NodeId>;

enum class InstanceSource { kComputed, kIngested };

/// One question about one graph. `truth` holds the ground-truth answer in
/// its JSON form (number, bool, list of nodes, list of [u, v] pairs), or a
/// reference solution for verifier tasks; null when unknown.
struct TaskInstance {
  std::string task;
  std::string graph_id;
  Graph graph;
  Params params;
  nlohmann::json truth;
  InstanceSource source = InstanceSource::kComputed;
  /// Verbatim question text for ingested records.
  std::optional<std::string> question;
};

}  // namespace graphsym
