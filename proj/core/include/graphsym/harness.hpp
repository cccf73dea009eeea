#pragma once

#include <cstdint>
#include <filesystem>
#include <mutex>
#include <optional>
#include <fstream>
#include <set>
#include <string>
#include <variant>
#include <vector>

#include <nlohmann/json.hpp>

#include "graphsym/encoding.hpp"
#include "graphsym/instance.hpp"
#include "graphsym/tasks.hpp"

namespace graphsym {

// -- configuration ----------------------------------------------------------

enum class MockKind { kOracle, kMeanBaseline, kNoisy };

struct ModelConfig {
  std::string name;
  /// OpenAI-compatible base URL, e.g. http://127.0.0.1:8000/v1.
  std::string endpoint;
  /// Model name sent in the request; defaults to `name`.
  std::string model;
  /// Environment variable holding the API key; empty for none.
  std::string api_key_env;
  double temperature = 0.0;
  int max_tokens = 4096;
  std::optional<std::string> reasoning_effort;
  int max_in_flight = 4;
  int timeout_s = 600;
  int retry_base_ms = 200;
  /// Set for synthetic models; endpoint is ignored then.
  std::optional<MockKind> mock;
  double noise_sigma = 0.0;
  std::uint64_t noise_seed = 0;
};

struct SuiteConfig {
  /// "generate" or "ingest".
  std::string source = "generate";
  int count = 5;
  std::uint64_t seed = 1;
  std::filesystem::path path;
};

enum class ExtractRule { kBoxed, kFinalAnswer, kLastList, kLastScalar };

struct RunConfig {
  std::string run_id = "run";
  std::filesystem::path output = "runs";
  std::vector<ModelConfig> models;
  /// Task ids; "all", "core" and "spectral" expand to catalog subsets.
  std::vector<std::string> tasks;
  SuiteConfig suite;
  /// Either an ablation / grid name or an explicit list.
  std::string encoding_set = "baseline";
  std::vector<EncodingSpec> encodings;
  EncodingSpec baseline = erdos_baseline();
  std::vector<std::uint64_t> relabel_seeds;
  /// Also evaluate the original labeling (recorded with a null seed).
  bool include_identity = false;
  std::uint64_t shuffle_seed = 0;
  CheckOptions check;
  std::vector<ExtractRule> extract = {ExtractRule::kBoxed, ExtractRule::kFinalAnswer,
                                      ExtractRule::kLastList,
                                      ExtractRule::kLastScalar};
};

/// Throws ConfigError on schema problems. Missing relabel_seeds default to
/// ten seeds 1..10.
RunConfig config_from_json(const nlohmann::json& j);
nlohmann::json config_to_json(const RunConfig& cfg);
RunConfig load_config(const std::filesystem::path& path);

/// Task ids selected by the config, in catalog order.
std::vector<const TaskSpec*> selected_tasks(const RunConfig& cfg);
/// Specs to evaluate on a graph of the given directedness; specs invalid for
/// it are dropped. The baseline is always included first.
std::vector<EncodingSpec> selected_encodings(const RunConfig& cfg, bool directed);

// -- prompts and answers ----------------------------------------------------

/// Task description, graph block, question and format instruction.
std::string build_prompt(const TaskInstance& inst, const EncodingSpec& spec);

/// Parsed answer in canonical JSON form, or nullopt.
std::optional<nlohmann::json> extract_answer(
    std::string_view raw, AnswerKind kind,
    const std::vector<ExtractRule>& precedence = {
        ExtractRule::kBoxed, ExtractRule::kFinalAnswer, ExtractRule::kLastList,
        ExtractRule::kLastScalar});

std::string_view to_string(ExtractRule r) noexcept;
ExtractRule parse_extract_rule(std::string_view text);
std::string_view to_string(MockKind k) noexcept;

// -- persistence ------------------------------------------------------------

struct EvalRecord {
  std::string run_id;
  std::string model;
  std::string task;
  std::string graph_id;
  EncodingSpec encoding;
  std::optional<std::uint64_t> relabel_seed;
  /// Relabeled graph and parameters, so re-scoring needs nothing else.
  Graph graph = Graph(1, false, {});
  Params params;
  std::string prompt;
  std::string completion;
  std::optional<nlohmann::json> parsed;
  nlohmann::json truth;
  Verdict verdict = Verdict::kUnparsed;
  /// |prediction - truth| for numeric kinds.
  std::optional<double> error;
  double latency_ms = 0.0;
  std::optional<int> prompt_tokens;
  std::optional<int> completion_tokens;
  std::optional<std::string> transport_error;

  /// Resume key: model, task, graph, encoding id and relabel seed.
  std::string cell_key() const;
};

nlohmann::json record_to_json(const EvalRecord& r);
EvalRecord record_from_json(const nlohmann::json& j);

/// Append-only JSON-lines writer; each write is flushed and serialized.
class RecordSink {
 public:
  /// Throws ConfigError when the file cannot be opened for appending.
  explicit RecordSink(const std::filesystem::path& path);
  void write(const EvalRecord& r);

 private:
  std::mutex mu_;
  std::ofstream out_;
};

/// Reads a record file; a truncated last line (interrupted write) is skipped.
std::vector<EvalRecord> load_records(const std::filesystem::path& path);

/// Re-extracts and re-checks a record with the given options.
EvalRecord rescore(const EvalRecord& r, const CheckOptions& check,
                   const std::vector<ExtractRule>& extract);

}  // namespace graphsym
