#include "graphsym/metrics.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <set>

#include <spdlog/spdlog.h>

#include "graphsym/errors.hpp"

namespace graphsym {

void PairedSeries::validate() const {
  if (predictions.size() != truths.size() ||
      (!parsed.empty() && parsed.size() != truths.size())) {
    throw ConsistencyError("paired series lengths differ");
  }
}

PairedSeries PairedSeries::parsed_only() const {
  validate();
  PairedSeries out;
  for (std::size_t i = 0; i < truths.size(); ++i) {
    if (parsed.empty() || parsed[i]) {
      out.truths.push_back(truths[i]);
      out.predictions.push_back(predictions[i]);
    }
  }
  return out;
}

double PairedSeries::parse_failure_rate() const {
  validate();
  if (truths.empty()) throw EmptySeriesError("empty series");
  if (parsed.empty()) return 0.0;
  const auto failed = std::count(parsed.begin(), parsed.end(), false);
  return static_cast<double>(failed) / static_cast<double>(parsed.size());
}

double accuracy(std::span<const Verdict> verdicts) {
  if (verdicts.empty()) throw EmptySeriesError("no verdicts");
  const auto correct = std::count(verdicts.begin(), verdicts.end(), Verdict::kCorrect);
  return static_cast<double>(correct) / static_cast<double>(verdicts.size());
}

double answer_range(std::span<const double> truths) {
  if (truths.empty()) throw EmptySeriesError("no ground truths");
  const auto [lo, hi] = std::minmax_element(truths.begin(), truths.end());
  return *hi - *lo;
}

SpanResult output_span(
    const std::vector<std::vector<std::optional<double>>>& per_example,
    double task_range) {
  if (!(task_range > 0.0)) throw ZeroRangeError("task answer range is zero");
  SpanResult r;
  double total = 0.0;
  for (const auto& outputs : per_example) {
    std::vector<double> parsed;
    for (const auto& o : outputs) {
      if (o) parsed.push_back(*o);
    }
    if (parsed.size() < 2) {
      ++r.excluded;
      continue;
    }
    const auto [lo, hi] = std::minmax_element(parsed.begin(), parsed.end());
    total += (*hi - *lo) / task_range;
    ++r.included;
  }
  if (r.included > 0) r.value = total / static_cast<double>(r.included);
  return r;
}

namespace {

double mean_of(std::span<const double> v) {
  return std::accumulate(v.begin(), v.end(), 0.0) / static_cast<double>(v.size());
}

double sample_std(std::span<const double> v) {
  const double m = mean_of(v);
  double ss = 0.0;
  for (double x : v) ss += (x - m) * (x - m);
  return std::sqrt(ss / static_cast<double>(v.size() - 1));
}

}  // namespace

double nrmse(const PairedSeries& s, NrmseNorm norm) {
  const PairedSeries p = s.parsed_only();
  const std::size_t n = p.size();
  if (n < 2) throw EmptySeriesError("nRMSE needs at least two parsed items");
  double se = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    const double d = p.truths[i] - p.predictions[i];
    se += d * d;
  }
  const double rmse = std::sqrt(se / static_cast<double>(n));
  const double denom =
      norm == NrmseNorm::kRange ? answer_range(p.truths) : sample_std(p.truths);
  if (!(denom > 0.0)) throw DegenerateNormError("nRMSE normalizer is zero");
  return rmse / denom;
}

double smape(const PairedSeries& s, SmapeScale scale) {
  const PairedSeries p = s.parsed_only();
  if (p.size() == 0) throw EmptySeriesError("sMAPE needs a parsed item");
  double total = 0.0;
  for (std::size_t i = 0; i < p.size(); ++i) {
    const double y = p.truths[i];
    const double f = p.predictions[i];
    total += 2.0 * std::abs(y - f) / (std::abs(y) + std::abs(f) + kSmapeEpsilon);
  }
  const double v = 100.0 * total / static_cast<double>(p.size());
  return scale == SmapeScale::k0To200 ? v : v / 2.0;
}

double relmae(const PairedSeries& s) {
  const PairedSeries p = s.parsed_only();
  if (p.size() < 2) throw EmptySeriesError("RelMAE needs at least two parsed items");
  const double ybar = mean_of(p.truths);
  double mae = 0.0;
  double base = 0.0;
  for (std::size_t i = 0; i < p.size(); ++i) {
    mae += std::abs(p.truths[i] - p.predictions[i]);
    base += std::abs(p.truths[i] - ybar);
  }
  if (!(base > 0.0)) throw DegenerateBaselineError("ground truths are constant");
  return mae / base;
}

MeanStd mean_std(std::span<const double> values) {
  if (values.empty()) throw EmptySeriesError("no values");
  MeanStd r;
  r.count = values.size();
  r.mean = mean_of(values);
  if (values.size() >= 2) r.std = sample_std(values);
  return r;
}

GlobalError global_normalized_error(const std::vector<ErrorCell>& cells,
                                    const std::vector<std::string>& metrics) {
  std::set<std::string> models;
  // (task, metric) -> model -> value
  std::map<std::pair<std::string, std::string>, std::map<std::string, double>> columns;
  for (const auto& c : cells) {
    if (std::find(metrics.begin(), metrics.end(), c.metric) == metrics.end()) continue;
    models.insert(c.model);
    columns[{c.task, c.metric}][c.model] = c.value;
  }
  if (models.size() < 2) throw EmptySeriesError("global error needs two models");

  GlobalError out;
  std::map<std::string, double> sum;
  std::map<std::string, int> count;
  for (const auto& [key, values] : columns) {
    double lo = std::numeric_limits<double>::infinity();
    double hi = -lo;
    for (const auto& [m, v] : values) {
      lo = std::min(lo, v);
      hi = std::max(hi, v);
    }
    if (!(hi > lo)) {
      spdlog::warn("dropping column {}/{}: all models equal", key.first, key.second);
      out.dropped.push_back(key);
      continue;
    }
    for (const auto& [m, v] : values) {
      sum[m] += (v - lo) / (hi - lo);
      ++count[m];
    }
  }
  if (sum.empty()) throw EmptySeriesError("no column with a non-zero range");
  for (const auto& [m, total] : sum) out.scores[m] = total / count[m];
  return out;
}

std::optional<double> pearson(std::span<const double> x, std::span<const double> y) {
  if (x.size() != y.size()) throw ConsistencyError("correlation inputs differ in length");
  if (x.size() < 2) return std::nullopt;
  const double mx = mean_of(x);
  const double my = mean_of(y);
  double sxy = 0.0;
  double sxx = 0.0;
  double syy = 0.0;
  for (std::size_t i = 0; i < x.size(); ++i) {
    sxy += (x[i] - mx) * (y[i] - my);
    sxx += (x[i] - mx) * (x[i] - mx);
    syy += (y[i] - my) * (y[i] - my);
  }
  if (!(sxx > 0.0) || !(syy > 0.0)) return std::nullopt;
  return sxy / std::sqrt(sxx * syy);
}

CorrelationMatrix metric_correlation(const std::vector<ErrorCell>& cells,
                                     const std::vector<std::string>& metrics,
                                     CorrelationMode mode) {
  // model -> task -> metric -> value
  std::map<std::string, std::map<std::string, std::map<std::string, double>>> grid;
  std::set<std::string> tasks;
  for (const auto& c : cells) {
    grid[c.model][c.task][c.metric] = c.value;
    tasks.insert(c.task);
  }
  if (tasks.size() < 3) throw EmptySeriesError("correlation needs three tasks");

  auto column = [&](const std::string& metric, const std::string* only_model) {
    std::vector<double> v;
    for (const auto& [model, by_task] : grid) {
      if (only_model && model != *only_model) continue;
      for (const auto& [task, by_metric] : by_task) {
        auto it = by_metric.find(metric);
        v.push_back(it == by_metric.end() ? std::nan("") : it->second);
      }
    }
    return v;
  };

  CorrelationMatrix out;
  out.metrics = metrics;
  const std::size_t k = metrics.size();
  out.rho.assign(k, std::vector<std::optional<double>>(k));
  for (std::size_t a = 0; a < k; ++a) {
    for (std::size_t b = 0; b < k; ++b) {
      if (mode == CorrelationMode::kPooled) {
        out.rho[a][b] = pearson(column(metrics[a], nullptr), column(metrics[b], nullptr));
        continue;
      }
      double total = 0.0;
      int used = 0;
      for (const auto& [model, by_task] : grid) {
        auto r = pearson(column(metrics[a], &model), column(metrics[b], &model));
        if (r) {
          total += *r;
          ++used;
        }
      }
      if (used > 0) out.rho[a][b] = total / used;
    }
  }
  return out;
}

std::map<Difficulty, double> difficulty_rollup(
    const std::vector<std::pair<Difficulty, double>>& values) {
  std::map<Difficulty, std::pair<double, int>> acc;
  for (const auto& [d, v] : values) {
    acc[d].first += v;
    ++acc[d].second;
  }
  std::map<Difficulty, double> out;
  for (const auto& [d, sc] : acc) out[d] = sc.first / sc.second;
  return out;
}

}  // namespace graphsym
