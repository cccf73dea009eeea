#pragma once

#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include <nlohmann/json.hpp>

#include "graphsym/graph.hpp"
#include "graphsym/instance.hpp"
#include "graphsym/permutation.hpp"

namespace graphsym {

enum class Difficulty { kEasy, kMedium, kHard, kChallenging };

enum class AnswerKind {
  kInteger,
  kFloat,
  kBoolean,
  kNode,
  kNodeSequence,
  kNodeSet,
  kEdgeSet,
};

enum class CheckerKind { kExact, kTolerantFloat, kVerifier };

/// Family of graphs the synthetic generator draws for a task.
enum class GraphClass {
  kAny,             // undirected, possibly disconnected
  kConnected,       // undirected, connected
  kDirected,        // directed, possibly cyclic
  kDag,
  kTournamentish,   // tournaments and near-tournaments
  kRegularish,      // regular graphs and perturbed ones
  kBipartiteish,    // bipartite graphs and ones with an odd cycle
  kEulerianish,     // Eulerian graphs and perturbed ones
  kForestish,       // forests and graphs with a cycle
  kWeightedConnected,
  kFlowNetwork,     // directed, positive integer capacities
  kSmall,           // connected, n <= 10
  kSmallBipartite,
  kSmallWeighted,
  kSmallComplete,   // weighted complete graph, n <= 8
  kHamiltonian,     // small, contains a Hamiltonian path
};

struct TaskSpec {
  std::string id;
  Difficulty difficulty;
  AnswerKind answer_kind;
  CheckerKind checker;
  /// Parameter names in question order.
  std::vector<std::string> params;
  GraphClass graph_class;
  /// Task preamble placed before the graph block.
  std::string description;
  /// Question with {name} slots for the parameters.
  std::string question_template;
  bool spectral = false;
  /// Ground truth is computed exactly by solve().
  bool core_solver = true;
};

std::string_view to_string(Difficulty d) noexcept;
std::string_view to_string(AnswerKind k) noexcept;
std::string_view to_string(CheckerKind k) noexcept;

/// The 50 topological tasks followed by the 12 spectral tasks.
const std::vector<TaskSpec>& task_catalog();
/// Lowercases, maps spaces/hyphens to underscores and repairs known
/// misspellings of task names.
std::string canonical_task_name(std::string_view raw);
/// Looks up a task by (canonicalized) name. Throws UnknownTaskError.
const TaskSpec& find_task(std::string_view name);

std::string question_text(const TaskSpec& task, const Params& params);
std::string format_instruction(AnswerKind kind);

/// Exact ground truth for Core-Solver and spectral tasks.
/// Throws UnsupportedTaskError for verifier-only tasks and QueryError for
/// missing or invalid parameters.
nlohmann::json solve(const TaskSpec& task, const Graph& g, const Params& params);

/// Reference solution for any task: solve() when possible, otherwise an
/// exact small-instance solver. Throws ReferenceUnavailableError when the
/// graph is too large for the exact solver.
nlohmann::json reference_answer(const TaskSpec& task, const Graph& g,
                                const Params& params);

enum class Verdict { kCorrect, kIncorrect, kUnparsed };
std::string_view to_string(Verdict v) noexcept;
Verdict parse_verdict(std::string_view text);

struct CheckOptions {
  double abs_tol = 1e-2;
  double rel_tol = 1e-3;
};

/// Judges a parsed candidate (nullopt = unparsed) against the reference.
/// Throws MissingReferenceError when a verifier task has no reference.
Verdict check(const TaskSpec& task, const Graph& g, const Params& params,
              const std::optional<nlohmann::json>& candidate,
              const nlohmann::json& reference, const CheckOptions& options = {});

/// Converts a loosely typed value into the canonical JSON shape of `kind`
/// (e.g. 19.0 -> 19 for integers, [[1,2]] for edge sets). nullopt when the
/// value does not fit.
std::optional<nlohmann::json> coerce_answer(AnswerKind kind,
                                            const nlohmann::json& value);

/// Answer text in the format the question asks for.
std::string format_answer(AnswerKind kind, const nlohmann::json& value);

/// Reads the JSON-lines dataset format. Throws IngestError with the record
/// index on schema violations.
std::vector<TaskInstance> ingest_erdos(std::istream& in);
std::vector<TaskInstance> ingest_erdos(const std::filesystem::path& path);

/// Graph relabeled, parameters mapped, node-valued truths re-derived (solver
/// tasks) or mapped through p (verifier references).
TaskInstance relabel_instance(const TaskInstance& inst, const Permutation& p);

/// Seeded synthetic instances for a task, drawn from its graph class.
std::vector<TaskInstance> generate_instances(const TaskSpec& task, int count,
                                             std::uint64_t seed);

/// Random graph of the given class (used by the generator and by tests).
Graph random_graph(GraphClass cls, RngStream& rng);

/// Graph JSON in the ingestion schema {n, directed, edges}.
nlohmann::json graph_to_json(const Graph& g);
Graph graph_from_json(const nlohmann::json& j);

}  // namespace graphsym
