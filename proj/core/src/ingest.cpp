#include <fstream>
#include <istream>
#include <string>

#include <spdlog/spdlog.h>

#include "graphsym/errors.hpp"
#include "graphsym/tasks.hpp"

namespace graphsym {

using nlohmann::json;

namespace {

Weight weight_from_json(const json& w) {
  if (w.is_string()) return Weight::parse(w.get<std::string>());
  if (w.is_number_integer()) return Weight::parse(std::to_string(w.get<long long>()));
  if (w.is_number_float()) return Weight::from_value(w.get<double>());
  throw InvalidGraphError("edge weight must be a number or a decimal string");
}

json map_nodes(const json& value, const Permutation& p) {
  if (value.is_number_integer()) {
    const auto u = value.get<NodeId>();
    if (u < 1 || u > p.size()) throw UnmappableInstanceError("node id out of range");
    return p(u);
  }
  if (!value.is_array()) throw UnmappableInstanceError("expected a node or a list");
  json out = json::array();
  for (const auto& item : value) out.push_back(map_nodes(item, p));
  return out;
}

bool is_scalar(AnswerKind kind) {
  return kind == AnswerKind::kInteger || kind == AnswerKind::kFloat ||
         kind == AnswerKind::kBoolean;
}

TaskInstance ingest_record(const json& rec, std::size_t index) {
  if (!rec.is_object()) throw IngestError("record is not a JSON object", index);
  for (const char* key : {"task", "graph"}) {
    if (!rec.contains(key)) {
      throw IngestError(std::string("missing field '") + key + "'", index);
    }
  }
  TaskInstance inst{.task = {},
                    .graph_id = {},
                    .graph = Graph(1, false, {}),
                    .params = {},
                    .truth = nullptr,
                    .source = InstanceSource::kIngested,
                    .question = std::nullopt};
  const TaskSpec* task = nullptr;
  try {
    task = &find_task(rec.at("task").get<std::string>());
    inst.task = task->id;
    inst.graph = graph_from_json(rec.at("graph"));
    if (rec.contains("params")) {
      for (const auto& [name, value] : rec.at("params").items()) {
        inst.params[name] = value.get<NodeId>();
      }
    }
    if (rec.contains("question") && rec.at("question").is_string()) {
      inst.question = rec.at("question").get<std::string>();
    }
  } catch (const IngestError&) {
    throw;
  } catch (const std::exception& e) {
    throw IngestError(e.what(), index);
  }
  inst.graph_id = rec.value("graph_id", "record-" + std::to_string(index));
  for (const auto& name : task->params) {
    if (!inst.params.count(name)) {
      throw IngestError("task " + task->id + " needs parameter '" + name + "'", index);
    }
    if (!inst.graph.contains(inst.params[name])) {
      throw IngestError("parameter " + name + " is not a node of the graph", index);
    }
  }

  const json answer = rec.value("answer", json(nullptr));
  std::optional<json> given;
  if (!answer.is_null()) {
    given = coerce_answer(task->answer_kind, answer);
    if (!given) {
      throw IngestError("answer " + answer.dump() + " does not fit answer kind " +
                        std::string(to_string(task->answer_kind)),
                        index);
    }
  }

  if (task->core_solver || task->spectral) {
    try {
      inst.truth = solve(*task, inst.graph, inst.params);
    } catch (const Error& e) {
      throw IngestError(std::string("ground truth not computable: ") + e.what(), index);
    }
    if (given && check(*task, inst.graph, inst.params, given, inst.truth) !=
                     Verdict::kCorrect) {
      spdlog::warn("record {}: ingested answer {} for {} disagrees with the solver ({}); "
                   "using the computed value",
                   index, given->dump(), task->id, inst.truth.dump());
    }
  } else if (given) {
    inst.truth = *given;
  } else {
    try {
      inst.truth = reference_answer(*task, inst.graph, inst.params);
    } catch (const Error& e) {
      spdlog::warn("record {}: no answer and no reference for {}: {}", index, task->id,
                   e.what());
    }
  }
  return inst;
}

}  // namespace

json graph_to_json(const Graph& g) {
  json edges = json::array();
  for (const Edge& e : g.edges()) {
    json item = {e.source, e.target};
    if (e.weight) {
      // Keep the exact decimal text when a JSON number would not reproduce it.
      json w = json::parse(e.weight->text(), nullptr, false);
      if (w.is_discarded() || !w.is_number() || w.dump() != e.weight->text()) {
        w = e.weight->text();
      }
      item.push_back(w);
    }
    edges.push_back(std::move(item));
  }
  return {{"n", g.node_count()}, {"directed", g.directed()}, {"edges", edges}};
}

Graph graph_from_json(const json& j) {
  if (!j.is_object() || !j.contains("n") || !j.contains("edges")) {
    throw InvalidGraphError("graph needs fields 'n' and 'edges'");
  }
  const int n = j.at("n").get<int>();
  const bool directed = j.value("directed", false);
  std::vector<Edge> edges;
  for (const auto& e : j.at("edges")) {
    if (!e.is_array() || e.size() < 2 || e.size() > 3) {
      throw InvalidGraphError("edge must be [u, v] or [u, v, w]");
    }
    Edge edge{e[0].get<NodeId>(), e[1].get<NodeId>(), std::nullopt};
    if (e.size() == 3) edge.weight = weight_from_json(e[2]);
    edges.push_back(std::move(edge));
  }
  return Graph(n, directed, std::move(edges));
}

std::vector<TaskInstance> ingest_erdos(std::istream& in) {
  std::vector<TaskInstance> out;
  std::string line;
  std::size_t index = 0;
  while (std::getline(in, line)) {
    if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
    json rec = json::parse(line, nullptr, false);
    if (rec.is_discarded()) throw IngestError("invalid JSON", index);
    out.push_back(ingest_record(rec, index));
    ++index;
  }
  return out;
}

std::vector<TaskInstance> ingest_erdos(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw IngestError("cannot open " + path.string(), 0);
  return ingest_erdos(in);
}

TaskInstance relabel_instance(const TaskInstance& inst, const Permutation& p) {
  if (p.size() != inst.graph.node_count()) {
    throw PermutationSizeError("permutation of size " + std::to_string(p.size()) +
                               " applied to a graph on " +
                               std::to_string(inst.graph.node_count()) + " nodes");
  }
  const TaskSpec& task = find_task(inst.task);
  TaskInstance out{.task = inst.task,
                   .graph_id = inst.graph_id,
                   .graph = relabel(inst.graph, p),
                   .params = {},
                   .truth = inst.truth,
                   .source = inst.source,
                   .question = std::nullopt};
  for (const auto& [name, u] : inst.params) out.params[name] = p(u);
  if (inst.truth.is_null() || is_scalar(task.answer_kind) || task.spectral) return out;
  if (task.core_solver) {
    out.truth = solve(task, out.graph, out.params);
  } else {
    out.truth = map_nodes(inst.truth, p);
  }
  return out;
}

}  // namespace graphsym
