#pragma once

#include <filesystem>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "graphsym/harness.hpp"
#include "graphsym/metrics.hpp"

namespace graphsym {

/// Aggregates for one (model, task, encoding) cell.
struct CellReport {
  std::string model;
  std::string task;
  std::string encoding;
  Difficulty difficulty = Difficulty::kEasy;
  std::size_t records = 0;
  /// Accuracy per relabel seed, then mean and sample std across seeds.
  MeanStd accuracy;
  double parse_failure_rate = 0.0;
  std::optional<double> nrmse_range;
  std::optional<double> nrmse_std;
  std::optional<double> smape_0_100;
  std::optional<double> relmae;
  std::optional<double> span;
  std::size_t span_excluded = 0;
  /// Accuracy minus the baseline encoding's accuracy for the same model/task.
  std::optional<double> delta_vs_baseline;
};

struct MetricReport {
  std::string baseline;
  std::vector<CellReport> cells;
  /// Global normalized error (sMAPE and RelMAE at the baseline encoding);
  /// empty with fewer than two models.
  std::map<std::string, double> global_error;
  std::vector<std::string> models;
  std::vector<std::string> encodings;
};

/// Pure function of the records (their order does not matter).
MetricReport score_records(const std::vector<EvalRecord>& records,
                           const EncodingSpec& baseline);

nlohmann::json cell_to_json(const CellReport& c);

/// Accuracy table: one row per task, one column per (model, encoding).
std::string accuracy_table_text(const MetricReport& r);
std::string accuracy_table_csv(const MetricReport& r);
/// Numeric-error table at the baseline encoding: nRMSE_std, nRMSE_range,
/// sMAPE_0-100, RelMAE and parse-failure rate, each per model.
std::string error_table_text(const MetricReport& r);
std::string error_table_csv(const MetricReport& r);

/// cells.jsonl, accuracy.{csv,txt}, errors.{csv,txt}, global_error.json.
void write_report(const MetricReport& r, const std::filesystem::path& dir);

}  // namespace graphsym
