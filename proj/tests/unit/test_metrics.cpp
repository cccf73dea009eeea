#include <gtest/gtest.h>

#include <cmath>
#include <fstream>
#include <sstream>

#include "graphsym/errors.hpp"
#include "graphsym/metrics.hpp"
#include "graphsym/rng.hpp"
#include "support.hpp"

using namespace graphsym;

namespace {

PairedSeries series(std::vector<double> y, std::vector<double> yhat) {
  PairedSeries s;
  s.truths = std::move(y);
  s.predictions = std::move(yhat);
  return s;
}

std::vector<ErrorCell> table10() {
  std::ifstream in(graphsym::testing::tests_dir() / "data/table10.tsv");
  std::string line;
  std::getline(in, line);
  std::vector<ErrorCell> cells;
  while (std::getline(in, line)) {
    std::istringstream row(line);
    ErrorCell c;
    row >> c.task >> c.metric >> c.model >> c.value;
    cells.push_back(c);
  }
  return cells;
}

PairedSeries random_series(RngStream& rng, std::size_t n) {
  PairedSeries s;
  for (std::size_t i = 0; i < n; ++i) {
    s.truths.push_back(20.0 * rng.uniform() - 5.0);
    s.predictions.push_back(20.0 * rng.uniform() - 5.0);
  }
  return s;
}

}  // namespace

TEST(Accuracy, Fractions) {
  std::vector<Verdict> v(100, Verdict::kCorrect);
  v[3] = Verdict::kIncorrect;
  v[7] = Verdict::kUnparsed;
  EXPECT_DOUBLE_EQ(accuracy(v), 0.98);
  EXPECT_DOUBLE_EQ(accuracy(std::vector<Verdict>(5, Verdict::kCorrect)), 1.0);
  EXPECT_DOUBLE_EQ(accuracy(std::vector<Verdict>(5, Verdict::kUnparsed)), 0.0);
  EXPECT_THROW(accuracy(std::vector<Verdict>{}), EmptySeriesError);
}

TEST(OutputSpan, Examples) {
  EXPECT_DOUBLE_EQ(*output_span({{4.0, 6.0}}, 10.0).value, 0.2);
  EXPECT_DOUBLE_EQ(*output_span({{3.0, 3.0, 3.0}, {1.0, 1.0}}, 5.0).value, 0.0);
  const SpanResult none = output_span({{1.0, std::nullopt}, {std::nullopt}}, 5.0);
  EXPECT_FALSE(none.value.has_value());
  EXPECT_EQ(none.excluded, 2u);
  const SpanResult mixed = output_span({{1.0, std::nullopt, 3.0}, {std::nullopt, 2.0}}, 4.0);
  EXPECT_DOUBLE_EQ(*mixed.value, 0.5);
  EXPECT_EQ(mixed.included, 1u);
  EXPECT_EQ(mixed.excluded, 1u);
  EXPECT_THROW(output_span({{1.0, 2.0}}, 0.0), ZeroRangeError);
}

TEST(AnswerRange, MaxMinusMin) {
  const std::vector<double> t{3.0, -1.0, 7.5};
  EXPECT_DOUBLE_EQ(answer_range(t), 8.5);
}

TEST(Nrmse, Examples) {
  const PairedSeries swap = series({0, 1}, {1, 0});
  EXPECT_DOUBLE_EQ(nrmse(swap, NrmseNorm::kRange), 1.0);
  EXPECT_NEAR(nrmse(swap, NrmseNorm::kStd), std::sqrt(2.0), 1e-12);
  EXPECT_DOUBLE_EQ(nrmse(series({1, 2, 3}, {1, 2, 3}), NrmseNorm::kRange), 0.0);
  EXPECT_THROW(nrmse(series({2, 2}, {1, 3}), NrmseNorm::kRange), DegenerateNormError);
  EXPECT_THROW(nrmse(series({2, 2}, {1, 3}), NrmseNorm::kStd), DegenerateNormError);
  EXPECT_THROW(nrmse(series({2}, {1}), NrmseNorm::kRange), EmptySeriesError);
}

TEST(Smape, WorkedExamples) {
  // The worked numbers are the 2|y - f| / (|y| + |f|) form, i.e. the 0-200
  // scale; the 0-100 value is half of it.
  EXPECT_NEAR(smape(series({150}, {100}), SmapeScale::k0To200), 40.0, 1e-9);
  EXPECT_NEAR(smape(series({100}, {150}), SmapeScale::k0To200), 40.0, 1e-9);
  EXPECT_NEAR(smape(series({150}, {100}), SmapeScale::k0To100), 20.0, 1e-9);
  EXPECT_NEAR(smape(series({0.1}, {0.2}), SmapeScale::k0To200), 200.0 / 3.0, 1e-6);
  EXPECT_DOUBLE_EQ(smape(series({5, 0}, {5, 0}), SmapeScale::k0To100), 0.0);
}

TEST(Relmae, WorkedExamples) {
  // Truths {0, 10}: mean 5, baseline MAE 5. Predictions off by 2.
  EXPECT_NEAR(relmae(series({0, 10}, {2, 8})), 0.4, 1e-12);
  EXPECT_DOUBLE_EQ(relmae(series({1, 4, 9}, {1, 4, 9})), 0.0);
  EXPECT_THROW(relmae(series({3, 3}, {1, 2})), DegenerateBaselineError);
}

TEST(Relmae, MeanPredictorScoresOne) {
  RngStream rng(3);
  for (int trial = 0; trial < 50; ++trial) {
    PairedSeries s = random_series(rng, 2 + rng.bounded(30));
    double mean = 0;
    for (double y : s.truths) mean += y;
    mean /= static_cast<double>(s.size());
    for (double& p : s.predictions) p = mean;
    EXPECT_NEAR(relmae(s), 1.0, 1e-12);
  }
}

TEST(ParsedSeries, FailuresAreExcludedAndCounted) {
  PairedSeries s = series({0, 1, 100}, {1, 0, 0});
  s.parsed = {true, true, false};
  EXPECT_DOUBLE_EQ(s.parse_failure_rate(), 1.0 / 3.0);
  EXPECT_DOUBLE_EQ(nrmse(s, NrmseNorm::kRange), 1.0);
  s.parsed = {true};
  EXPECT_THROW(s.validate(), ConsistencyError);
}

TEST(MetricProperties, SmapeBoundedAndSymmetric) {
  RngStream rng(5);
  for (int trial = 0; trial < 200; ++trial) {
    const PairedSeries s = random_series(rng, 1 + rng.bounded(20));
    const double a = smape(s, SmapeScale::k0To200);
    EXPECT_GE(a, 0.0);
    EXPECT_LE(a, 200.0);
    EXPECT_NEAR(a, smape(series(s.predictions, s.truths), SmapeScale::k0To200), 1e-9);
    EXPECT_NEAR(smape(s, SmapeScale::k0To100), a / 2.0, 1e-12);
  }
}

TEST(MetricProperties, NrmseRangeAffineInvariant) {
  RngStream rng(7);
  for (int trial = 0; trial < 100; ++trial) {
    const PairedSeries s = random_series(rng, 2 + rng.bounded(20));
    const double shift = 100.0 * rng.uniform() - 50.0;
    const double scale = 0.1 + 10.0 * rng.uniform();
    PairedSeries t = s;
    for (double& y : t.truths) y = scale * y + shift;
    for (double& y : t.predictions) y = scale * y + shift;
    const double base = nrmse(s, NrmseNorm::kRange);
    EXPECT_NEAR(nrmse(t, NrmseNorm::kRange), base, 1e-9 * std::max(1.0, base));
    EXPECT_NEAR(nrmse(t, NrmseNorm::kStd), nrmse(s, NrmseNorm::kStd), 1e-9 * std::max(1.0, base));
  }
}

TEST(MetricProperties, InvariantUnderExampleOrder) {
  RngStream rng(9);
  for (int trial = 0; trial < 100; ++trial) {
    const PairedSeries s = random_series(rng, 2 + rng.bounded(20));
    std::vector<std::size_t> idx(s.size());
    for (std::size_t i = 0; i < idx.size(); ++i) idx[i] = i;
    rng.shuffle(std::span<std::size_t>(idx));
    PairedSeries t;
    for (std::size_t i : idx) {
      t.truths.push_back(s.truths[i]);
      t.predictions.push_back(s.predictions[i]);
    }
    EXPECT_NEAR(nrmse(s, NrmseNorm::kRange), nrmse(t, NrmseNorm::kRange), 1e-9);
    EXPECT_NEAR(nrmse(s, NrmseNorm::kStd), nrmse(t, NrmseNorm::kStd), 1e-9);
    EXPECT_NEAR(smape(s, SmapeScale::k0To200), smape(t, SmapeScale::k0To200), 1e-9);
    EXPECT_NEAR(relmae(s), relmae(t), 1e-9);
  }
}

TEST(MeanStd, SampleDenominator) {
  const std::vector<double> v{2, 4, 4, 4, 5, 5, 7, 9};
  const MeanStd m = mean_std(v);
  EXPECT_DOUBLE_EQ(m.mean, 5.0);
  EXPECT_NEAR(*m.std, std::sqrt(32.0 / 7.0), 1e-12);
  EXPECT_EQ(m.count, 8u);
  EXPECT_FALSE(mean_std(std::vector<double>{1.0}).std.has_value());
}

TEST(GlobalError, BestEverywhereScoresZero) {
  std::vector<ErrorCell> cells;
  for (std::string task : {"a", "b"}) {
    for (std::string metric : {"smape_0_100", "relmae"}) {
      cells.push_back({task, "good", metric, 0.1});
      cells.push_back({task, "bad", metric, 0.9});
      cells.push_back({task, "mid", metric, 0.5});
    }
  }
  const GlobalError g = global_normalized_error(cells);
  EXPECT_DOUBLE_EQ(g.scores.at("good"), 0.0);
  EXPECT_DOUBLE_EQ(g.scores.at("bad"), 1.0);
  EXPECT_DOUBLE_EQ(g.scores.at("mid"), 0.5);
}

TEST(GlobalError, SymmetricSwapAndDroppedColumns) {
  const std::vector<ErrorCell> cells{
      {"a", "x", "smape_0_100", 1.0}, {"a", "y", "smape_0_100", 2.0},
      {"a", "x", "relmae", 2.0},      {"a", "y", "relmae", 1.0},
      {"b", "x", "relmae", 3.0},      {"b", "y", "relmae", 3.0},
  };
  const GlobalError g = global_normalized_error(cells);
  EXPECT_DOUBLE_EQ(g.scores.at("x"), 0.5);
  EXPECT_DOUBLE_EQ(g.scores.at("y"), 0.5);
  ASSERT_EQ(g.dropped.size(), 1u);
  EXPECT_EQ(g.dropped[0], (std::pair<std::string, std::string>{"b", "relmae"}));
  EXPECT_THROW(global_normalized_error({{"a", "x", "relmae", 1.0}}), EmptySeriesError);
}

TEST(GlobalError, PublishedErrorTableOrdering) {
  const GlobalError g = global_normalized_error(table10());
  ASSERT_EQ(g.scores.size(), 4u);
  // Published ordering: G1-7B < Qwen-7B < G1-3B < Qwen-3B.
  EXPECT_LT(g.scores.at("G1-7B"), g.scores.at("Qwen-7B"));
  EXPECT_LT(g.scores.at("Qwen-7B"), g.scores.at("G1-3B"));
  EXPECT_LT(g.scores.at("G1-3B"), g.scores.at("Qwen-3B"));
  // Frozen from an independent Python recomputation of the same table.
  EXPECT_NEAR(g.scores.at("G1-7B"), 0.164, 5e-4);
}

TEST(Correlation, Pearson) {
  const std::vector<double> x{1, 2, 3, 4}, neg{-1, -2, -3, -4}, flat{2, 2, 2, 2};
  EXPECT_NEAR(*pearson(x, x), 1.0, 1e-12);
  EXPECT_NEAR(*pearson(x, neg), -1.0, 1e-12);
  EXPECT_FALSE(pearson(x, flat).has_value());
}

TEST(Correlation, PublishedErrorTable) {
  const std::vector<std::string> metrics{"nrmse_std", "nrmse_range", "smape_0_100", "relmae"};
  const CorrelationMatrix pooled = metric_correlation(table10(), metrics);
  ASSERT_EQ(pooled.rho.size(), 4u);
  EXPECT_NEAR(*pooled.rho[0][0], 1.0, 1e-12);
  EXPECT_GT(*pooled.rho[1][3], 0.9);
  EXPECT_NEAR(*pooled.rho[1][3], 0.998, 1e-3);
  EXPECT_LT(std::abs(*pooled.rho[2][3]), 0.2);
  const CorrelationMatrix per_model =
      metric_correlation(table10(), metrics, CorrelationMode::kPerModelMean);
  EXPECT_GT(*per_model.rho[1][3], 0.9);
}

TEST(Correlation, NeedsThreeTasks) {
  const std::vector<ErrorCell> cells{{"a", "x", "m1", 1}, {"a", "x", "m2", 2},
                                     {"b", "x", "m1", 2}, {"b", "x", "m2", 3}};
  EXPECT_THROW(metric_correlation(cells, {"m1", "m2"}), EmptySeriesError);
}

TEST(DifficultyRollup, MeansPerGroup) {
  const auto r = difficulty_rollup({{Difficulty::kEasy, 1.0},
                                    {Difficulty::kEasy, 0.5},
                                    {Difficulty::kHard, 0.2}});
  EXPECT_DOUBLE_EQ(r.at(Difficulty::kEasy), 0.75);
  EXPECT_DOUBLE_EQ(r.at(Difficulty::kHard), 0.2);
  EXPECT_EQ(r.count(Difficulty::kMedium), 0u);
}
