#pragma once

#include <cstddef>
#include <filesystem>
#include <optional>
#include <string>
#include <vector>

#include "graphsym/harness.hpp"

namespace graphsym {

/// Instances for the configured tasks: generated from the suite seed, or
/// ingested and filtered to the selected tasks.
std::vector<TaskInstance> build_suite(const RunConfig& cfg);

/// One prompt of the corpus (model independent).
struct PromptCell {
  /// Index into the suite.
  std::size_t instance = 0;
  /// The instance after relabeling (identity for a null seed).
  TaskInstance relabeled;
  /// Encoding with its per-cell shuffle seed filled in.
  EncodingSpec spec;
  std::optional<std::uint64_t> relabel_seed;
  std::string prompt;

  /// Cell key without the model.
  std::string key() const;
};

/// Every (instance, encoding, relabel seed) prompt in a fixed order.
std::vector<PromptCell> build_cells(const RunConfig& cfg,
                                    const std::vector<TaskInstance>& suite);

/// Writes <dir>/prompts/<n>.txt plus <dir>/manifest.jsonl. Returns the
/// number of prompts.
std::size_t write_corpus(const RunConfig& cfg, const std::filesystem::path& dir);

struct RunSummary {
  std::filesystem::path records_path;
  std::size_t executed = 0;
  std::size_t skipped = 0;
  std::size_t transport_errors = 0;
};

/// <output>/<run_id>/records.jsonl
std::filesystem::path records_path(const RunConfig& cfg);

/// Runs every model over every cell, appending one record per inference.
/// Cells already present in the record file are skipped. A 4xx response
/// aborts with ConfigError once in-flight requests finish. `limit` caps the
/// number of new inferences (used to simulate interruption).
RunSummary run_matrix(const RunConfig& cfg,
                      std::optional<std::size_t> limit = std::nullopt);

}  // namespace graphsym
