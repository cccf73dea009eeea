#pragma once

#include <cstddef>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "graphsym/tasks.hpp"

// Scoring and aggregation. Numeric error metrics use parsed items only;
// accuracy counts unparsed answers as wrong.
namespace graphsym {

struct PairedSeries {
  std::vector<double> truths;
  std::vector<double> predictions;
  /// Empty means every item parsed.
  std::vector<bool> parsed;

  /// Throws ConsistencyError when the lengths disagree.
  void validate() const;
  std::size_t size() const noexcept { return truths.size(); }
  /// The parsed items only.
  PairedSeries parsed_only() const;
  double parse_failure_rate() const;
};

/// Throws EmptySeriesError on an empty list.
double accuracy(std::span<const Verdict> verdicts);

struct SpanResult {
  /// nullopt when no example has two parsed outputs.
  std::optional<double> value;
  std::size_t included = 0;
  std::size_t excluded = 0;
};

/// Mean over examples of (max - min) of the parsed outputs across relabelings,
/// divided by task_range. Throws ZeroRangeError unless task_range > 0.
SpanResult output_span(
    const std::vector<std::vector<std::optional<double>>>& per_example,
    double task_range);

/// max - min of the ground truths.
double answer_range(std::span<const double> truths);

enum class NrmseNorm { kRange, kStd };
enum class SmapeScale { k0To200, k0To100 };

inline constexpr double kSmapeEpsilon = 1e-12;

/// Throws EmptySeriesError below two parsed items and DegenerateNormError
/// for a zero range / zero standard deviation.
double nrmse(const PairedSeries& s, NrmseNorm norm);
/// Percentage. Throws EmptySeriesError when nothing parsed.
double smape(const PairedSeries& s, SmapeScale scale);
/// MAE over the MAE of predicting the mean truth. Throws
/// DegenerateBaselineError for constant truths.
double relmae(const PairedSeries& s);

struct MeanStd {
  double mean = 0.0;
  /// Sample std (n - 1); nullopt for a single value.
  std::optional<double> std;
  std::size_t count = 0;
};
MeanStd mean_std(std::span<const double> values);

/// One value of one metric for one (task, model) pair.
struct ErrorCell {
  std::string task;
  std::string model;
  std::string metric;
  double value = 0.0;
};

struct GlobalError {
  /// Mean min-max normalized error per model.
  std::map<std::string, double> scores;
  /// (task, metric) columns dropped for having zero range.
  std::vector<std::pair<std::string, std::string>> dropped;
};

/// Min-max normalizes each (task, metric) column across models, then
/// averages per model. Only `metrics` enter. Throws EmptySeriesError with
/// fewer than two models or no usable column.
GlobalError global_normalized_error(const std::vector<ErrorCell>& cells,
                                    const std::vector<std::string>& metrics = {
                                        "smape_0_100", "relmae"});

enum class CorrelationMode {
  /// One Pearson coefficient over all (task, model) rows.
  kPooled,
  /// Per model across tasks, then averaged over models.
  kPerModelMean,
};

struct CorrelationMatrix {
  std::vector<std::string> metrics;
  /// nullopt where a column has zero variance.
  std::vector<std::vector<std::optional<double>>> rho;
};

std::optional<double> pearson(std::span<const double> x, std::span<const double> y);

/// Throws EmptySeriesError with fewer than three tasks.
CorrelationMatrix metric_correlation(const std::vector<ErrorCell>& cells,
                                     const std::vector<std::string>& metrics,
                                     CorrelationMode mode = CorrelationMode::kPooled);

/// Mean value per difficulty group.
std::map<Difficulty, double> difficulty_rollup(
    const std::vector<std::pair<Difficulty, double>>& values);

}  // namespace graphsym
