#include <gtest/gtest.h>

#include <cmath>
#include <numeric>
#include <sstream>

#include "graphsym/algorithms.hpp"
#include "graphsym/errors.hpp"
#include "graphsym/permutation.hpp"
#include "graphsym/spectral.hpp"
#include "graphsym/tasks.hpp"
#include "support.hpp"

using namespace graphsym;
using nlohmann::json;
using graphsym::testing::complete_graph;

namespace {

double truth(std::string_view name, const Graph& g, const SpectralOptions& opt = {}) {
  return spectral_truth(*find_spectral_task(name), g, opt);
}

double det(const std::vector<std::vector<double>>& a) {
  if (a.size() == 1) return a[0][0];
  double d = 0.0;
  for (std::size_t c = 0; c < a.size(); ++c) {
    std::vector<std::vector<double>> minor;
    for (std::size_t r = 1; r < a.size(); ++r) {
      std::vector<double> row;
      for (std::size_t q = 0; q < a.size(); ++q) {
        if (q != c) row.push_back(a[r][q]);
      }
      minor.push_back(row);
    }
    d += (c % 2 ? -1.0 : 1.0) * a[0][c] * det(minor);
  }
  return d;
}

// det(M - x I) by Laplace expansion; fine for n <= 4.
double char_poly(std::vector<std::vector<double>> m, double x) {
  for (std::size_t i = 0; i < m.size(); ++i) m[i][i] -= x;
  return det(m);
}

Graph random_undirected(RngStream& rng) {
  const int n = 1 + static_cast<int>(rng.bounded(20));
  const double p = 0.05 + 0.5 * rng.uniform();
  std::vector<Edge> edges;
  for (int u = 1; u <= n; ++u) {
    for (int v = u + 1; v <= n; ++v) {
      if (rng.uniform() < p) edges.push_back({u, v, std::nullopt});
    }
  }
  return Graph(n, false, edges);
}

}  // namespace

TEST(Eigensym, KnownSpectra) {
  const Spectrum k2 = eigensym(adjacency_matrix(complete_graph(2)));
  ASSERT_EQ(k2.values.size(), 2u);
  EXPECT_NEAR(k2.values[0], 1.0, 1e-12);
  EXPECT_NEAR(k2.values[1], -1.0, 1e-12);

  Matrix d(3);
  d(0, 0) = 3;
  d(1, 1) = 1;
  d(2, 2) = 2;
  const Spectrum s = eigensym(d);
  EXPECT_EQ(s.values, (std::vector<double>{3, 2, 1}));
}

TEST(Eigensym, CompleteGraphSpectra) {
  for (int n = 2; n <= 8; ++n) {
    const Spectrum s = eigensym(adjacency_matrix(complete_graph(n)));
    EXPECT_NEAR(s.values[0], n - 1, 1e-8) << n;
    for (int i = 1; i < n; ++i) EXPECT_NEAR(s.values[i], -1.0, 1e-8) << n;
  }
}

TEST(Eigensym, RejectsAsymmetricInput) {
  Matrix m(2);
  m(0, 1) = 1.0;
  EXPECT_THROW(eigensym(m), AsymmetryError);
}

TEST(Eigensym, VectorsAreOrthonormalWithSmallResidual) {
  RngStream rng(5);
  for (int trial = 0; trial < 30; ++trial) {
    const Graph g = random_undirected(rng);
    const Matrix a = adjacency_matrix(g);
    const Spectrum s = eigensym(a);
    const int n = a.size();
    const double scale = std::max(1.0, a.frobenius_norm());
    double trace_sum = std::accumulate(s.values.begin(), s.values.end(), 0.0);
    EXPECT_LE(std::abs(trace_sum), 1e-8 * scale);
    for (int k = 0; k < n; ++k) {
      double res = 0.0;
      for (int i = 0; i < n; ++i) {
        double av = 0.0;
        for (int j = 0; j < n; ++j) av += a(i, j) * s.vectors[k][j];
        res += std::pow(av - s.values[k] * s.vectors[k][i], 2);
      }
      EXPECT_LE(std::sqrt(res), 1e-8 * scale);
      for (int l = k; l < n; ++l) {
        double dot = 0.0;
        for (int i = 0; i < n; ++i) dot += s.vectors[k][i] * s.vectors[l][i];
        EXPECT_NEAR(dot, k == l ? 1.0 : 0.0, 1e-9);
      }
    }
  }
}

TEST(Eigensym, RootsOfCharacteristicPolynomial) {
  RngStream rng(7);
  for (int trial = 0; trial < 200; ++trial) {
    const int n = 1 + static_cast<int>(rng.bounded(4));
    Matrix m(n);
    std::vector<std::vector<double>> dense(n, std::vector<double>(n));
    for (int i = 0; i < n; ++i) {
      for (int j = i; j < n; ++j) {
        const double x = 4.0 * rng.uniform() - 2.0;
        m(i, j) = m(j, i) = x;
        dense[i][j] = dense[j][i] = x;
      }
    }
    for (double lambda : eigensym(m, false).values) {
      EXPECT_NEAR(char_poly(dense, lambda), 0.0, 1e-6);
    }
  }
}

TEST(SpectralTruth, SmallCompleteGraphs) {
  const Graph k2 = complete_graph(2), k3 = complete_graph(3);
  EXPECT_NEAR(truth("graph_energy", k2), 2.0, 1e-12);
  EXPECT_NEAR(truth("algebraic_connectivity", k2), 2.0, 1e-12);
  EXPECT_NEAR(truth("von_neumann_entropy", k2), 0.0, 1e-12);
  EXPECT_NEAR(truth("heat_trace_t1", k2), 1.0 + std::exp(-2.0), 1e-12);
  EXPECT_NEAR(truth("estrada_index", k2), std::exp(1.0) + std::exp(-1.0), 1e-12);
  EXPECT_NEAR(truth("sum_lambda_squared", k3), 6.0, 1e-12);
  EXPECT_NEAR(truth("spectral_gap", k3), 3.0, 1e-12);
  EXPECT_NEAR(truth("spectral_radius", k3), 2.0, 1e-12);
}

TEST(SpectralTruth, MatchesNumpyOracle) {
  const json doc = graphsym::testing::read_json(graphsym::testing::tests_dir() /
                                                "data/oracle_values.json");
  int checked = 0;
  for (const auto& [name, values] : doc["spectral"].items()) {
    const Graph g = graph_from_json(doc["graphs"][name]);
    for (const auto& [task, value] : values.items()) {
      SCOPED_TRACE(name + " / " + task);
      if (value.is_null()) {
        continue;
      }
      EXPECT_NEAR(truth(task, g), value.get<double>(), 1e-8 * std::max(1.0, std::abs(value.get<double>())));
      ++checked;
    }
  }
  EXPECT_GE(checked, 40);
}

TEST(SpectralTruth, LaplacianAlternatives) {
  const Graph p3 = Graph::undirected(3, {{1, 2}, {2, 3}});
  SpectralOptions opt;
  opt.laplacian_gap = true;
  // Path on 3 nodes: Laplacian spectrum {0, 1, 3}.
  EXPECT_NEAR(truth("spectral_gap", p3, opt), 1.0, 1e-12);
  SpectralOptions norm;
  norm.normalized_laplacian = true;
  // Normalized Laplacian of P3: {0, 1, 2}.
  EXPECT_NEAR(truth("algebraic_connectivity", p3, norm), 1.0, 1e-12);
}

TEST(SpectralTruth, Errors) {
  const Graph edgeless = Graph::undirected(3, {});
  EXPECT_THROW(truth("von_neumann_entropy", edgeless), DegenerateSpectrumError);
  EXPECT_THROW(truth("eigenvector_cent_top", edgeless), DegenerateSpectrumError);
  EXPECT_THROW(truth("algebraic_connectivity", Graph::undirected(1, {})),
               DegenerateSpectrumError);
  EXPECT_THROW(truth("graph_energy", Graph::directed_graph(2, {{1, 2}})), QueryError);
  EXPECT_FALSE(find_spectral_task("spectral_diameter").has_value());
}

TEST(SpectralTruth, IdentitiesOnRandomGraphs) {
  RngStream rng(13);
  for (int trial = 0; trial < 100; ++trial) {
    const Graph g = random_undirected(rng);
    const int n = g.node_count();
    const double m = static_cast<double>(g.edge_count());
    int max_degree = 0;
    for (NodeId u = 1; u <= n; ++u) max_degree = std::max(max_degree, g.degree(u));
    const Spectrum s = eigensym(adjacency_matrix(g), false);
    EXPECT_LE(std::abs(std::accumulate(s.values.begin(), s.values.end(), 0.0)), 1e-8);
    EXPECT_NEAR(truth("sum_lambda_squared", g), 2.0 * m, 1e-6);
    EXPECT_EQ(truth("n_components", g), connected_component_count(g));
    EXPECT_LE(truth("heat_trace_t1", g), n + 1e-9);
    EXPECT_LE(truth("spectral_radius", g), max_degree + 1e-9);
    if (m > 0) {
      const double h = truth("von_neumann_entropy", g);
      EXPECT_GE(h, -1e-12);
      EXPECT_LE(h, std::log(n) + 1e-12);
    }
  }
}

TEST(SpectralTruth, InvariantUnderRelabeling) {
  RngStream rng(17);
  for (int trial = 0; trial < 40; ++trial) {
    const Graph g = random_undirected(rng);
    const Graph h = relabel(g, random_permutation(g.node_count(), rng));
    for (SpectralTask t : all_spectral_tasks()) {
      double a = 0, b = 0;
      try {
        a = spectral_truth(t, g);
      } catch (const DegenerateSpectrumError&) {
        EXPECT_THROW(spectral_truth(t, h), DegenerateSpectrumError);
        continue;
      }
      b = spectral_truth(t, h);
      EXPECT_NEAR(a, b, 1e-8 * std::max(1.0, std::abs(a))) << to_string(t);
    }
  }
}

TEST(SpectralTasks, DifficultyTiers) {
  int easy = 0, medium = 0, hard = 0;
  for (SpectralTask t : all_spectral_tasks()) {
    const auto d = spectral_difficulty(t);
    easy += d == "Easy";
    medium += d == "Medium";
    hard += d == "Hard";
  }
  EXPECT_EQ(easy, 3);
  EXPECT_EQ(medium, 6);
  EXPECT_EQ(hard, 3);
  EXPECT_EQ(spectral_difficulty(SpectralTask::kVonNeumannEntropy), "Hard");
  EXPECT_EQ(spectral_difficulty(SpectralTask::kNComponents), "Easy");
}

TEST(SpectralSuite, SizesAndValues) {
  EXPECT_TRUE(make_spectral_suite({}).empty());
  const auto suite = make_spectral_suite({{"k3", complete_graph(3)}});
  ASSERT_EQ(suite.size(), 12u);
  for (const auto& inst : suite) {
    if (inst.task == "spectral_radius") EXPECT_NEAR(inst.truth.get<double>(), 2.0, 1e-12);
    if (inst.task == "sum_lambda_squared") EXPECT_NEAR(inst.truth.get<double>(), 6.0, 1e-12);
  }
  // Edgeless graphs drop the two degenerate tasks.
  EXPECT_EQ(make_spectral_suite({{"e", Graph::undirected(3, {})}}).size(), 10u);

  std::ostringstream out;
  export_spectral_truths(out, suite);
  std::istringstream lines(out.str());
  std::string line;
  int count = 0;
  while (std::getline(lines, line)) {
    const json j = json::parse(line);
    EXPECT_EQ(j["graph_id"], "k3");
    ++count;
  }
  EXPECT_EQ(count, 12);
}
