#include "graphsym/spectral.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <cstdio>
#include <numeric>
#include <ostream>

#include <spdlog/spdlog.h>

#include "graphsym/algorithms.hpp"
#include "graphsym/errors.hpp"

namespace graphsym {

namespace {

constexpr int kMaxSweeps = 100;
constexpr double kRelativeTolerance = 1e-12;

struct TaskInfo {
  SpectralTask task;
  std::string_view name;
  std::string_view difficulty;
  std::string_view definition;
};

constexpr std::array<TaskInfo, 12> kTasks = {{
    {SpectralTask::kGraphEnergy, "graph_energy", "Easy",
     "The graph energy is the sum of the absolute values of the eigenvalues "
     "of the adjacency matrix."},
    {SpectralTask::kNComponents, "n_components", "Easy",
     "The number of connected components equals the multiplicity of the "
     "eigenvalue 0 of the Laplacian matrix L = D - A."},
    {SpectralTask::kSumLambdaSquared, "sum_lambda_squared", "Easy",
     "This is the sum of the squared eigenvalues of the adjacency matrix."},
    {SpectralTask::kAlgebraicConnectivity, "algebraic_connectivity", "Medium",
     "The algebraic connectivity is the second-smallest eigenvalue of the "
     "Laplacian matrix L = D - A."},
    {SpectralTask::kEstradaIndex, "estrada_index", "Medium",
     "The Estrada index is the sum of the exponentials of the eigenvalues of "
     "the adjacency matrix."},
    {SpectralTask::kLaplacianEnergy, "laplacian_energy", "Medium",
     "The Laplacian energy is the sum of |mu_i - 2m/n| over the eigenvalues "
     "mu_i of the Laplacian matrix L = D - A, where m is the number of edges "
     "and n the number of nodes."},
    {SpectralTask::kNaturalConnectivity, "natural_connectivity", "Medium",
     "The natural connectivity is the natural logarithm of the average of the "
     "exponentials of the eigenvalues of the adjacency matrix."},
    {SpectralTask::kSpectralGap, "spectral_gap", "Medium",
     "The spectral gap is the difference between the largest and the "
     "second-largest eigenvalue of the adjacency matrix."},
    {SpectralTask::kSpectralRadius, "spectral_radius", "Medium",
     "The spectral radius is the largest absolute value of the eigenvalues "
     "of the adjacency matrix."},
    {SpectralTask::kEigenvectorCentTop, "eigenvector_cent_top", "Hard",
     "The top eigenvector centrality is the largest entry of the principal "
     "eigenvector of the adjacency matrix, normalized to unit length and "
     "taken with non-negative entries."},
    {SpectralTask::kHeatTraceT1, "heat_trace_t1", "Hard",
     "The heat trace at t = 1 is the sum of exp(-mu_i) over the eigenvalues "
     "mu_i of the Laplacian matrix L = D - A."},
    {SpectralTask::kVonNeumannEntropy, "von_neumann_entropy", "Hard",
     "The von Neumann entropy is -sum(s_i * ln(s_i)) over the eigenvalues s_i "
     "of the density matrix L / trace(L), where L = D - A is the Laplacian "
     "matrix and 0 * ln(0) = 0."},
}};

const TaskInfo& info(SpectralTask t) {
  return kTasks[static_cast<std::size_t>(t)];
}

void require_undirected(const Graph& g) {
  if (g.directed()) {
    throw QueryError("spectral tasks are defined for undirected graphs");
  }
}

// Laplacian eigenvalues ascending, tiny negatives clamped to zero.
std::vector<double> laplacian_values(const Graph& g, bool normalized) {
  auto spectrum = eigensym(laplacian_matrix(g, normalized), false);
  std::vector<double> mu(spectrum.values.rbegin(), spectrum.values.rend());
  for (double& x : mu) x = std::max(x, 0.0);
  return mu;
}

double top_eigenvector_entry(const Graph& g) {
  if (g.edge_count() == 0) {
    throw DegenerateSpectrumError("edgeless graph has no principal eigenvector");
  }
  const auto labels = component_labels(g);
  const int comps = connected_component_count(g);
  std::vector<std::vector<NodeId>> members(static_cast<std::size_t>(comps));
  for (NodeId u = 1; u <= g.node_count(); ++u) members[labels[u]].push_back(u);

  // Each component's principal pair; the answer comes from the component(s)
  // attaining the overall spectral radius.
  double best_lambda = -1.0;
  double best_entry = 0.0;
  for (const auto& nodes : members) {
    if (nodes.size() < 2) continue;
    const int k = static_cast<int>(nodes.size());
    Matrix sub(k);
    for (int i = 0; i < k; ++i) {
      for (int j = 0; j < k; ++j) {
        if (g.has_edge(nodes[i], nodes[j])) sub(i, j) = 1.0;
      }
    }
    const auto spectrum = eigensym(sub, true);
    const double lambda = spectrum.values.front();
    double entry = 0.0;
    for (double x : spectrum.vectors.front()) entry = std::max(entry, std::abs(x));
    const double tol = 1e-9 * std::max(1.0, lambda);
    if (lambda > best_lambda + tol) {
      best_lambda = lambda;
      best_entry = entry;
    } else if (std::abs(lambda - best_lambda) <= tol) {
      best_entry = std::max(best_entry, entry);
    }
  }
  return best_entry;
}

}  // namespace

double Matrix::frobenius_norm() const {
  double sum = 0.0;
  for (double x : a_) sum += x * x;
  return std::sqrt(sum);
}

Spectrum eigensym(const Matrix& m, bool with_vectors) {
  const int n = m.size();
  const double norm = m.frobenius_norm();
  const double sym_tol = 1e-12 * std::max(1.0, norm);
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) {
      if (std::abs(m(i, j) - m(j, i)) > sym_tol) {
        throw AsymmetryError("matrix is not symmetric at (" +
                             std::to_string(i) + ", " + std::to_string(j) + ")");
      }
    }
  }

  Matrix a = m;
  Matrix v(n);
  for (int i = 0; i < n; ++i) v(i, i) = 1.0;

  auto off_norm = [&] {
    double sum = 0.0;
    for (int i = 0; i < n; ++i) {
      for (int j = 0; j < n; ++j) {
        if (i != j) sum += a(i, j) * a(i, j);
      }
    }
    return std::sqrt(sum);
  };

  int sweep = 0;
  double off = off_norm();
  while (off > kRelativeTolerance * norm) {
    if (sweep == kMaxSweeps) {
      throw ConvergenceError("Jacobi did not converge in 100 sweeps", off);
    }
    ++sweep;
    for (int p = 0; p < n - 1; ++p) {
      for (int q = p + 1; q < n; ++q) {
        const double apq = a(p, q);
        if (apq == 0.0) continue;
        const double h = a(q, q) - a(p, p);
        double t = 0.0;
        if (std::abs(h) + std::abs(apq) * 1e18 == std::abs(h)) {
          t = apq / h;
        } else {
          const double theta = 0.5 * h / apq;
          t = 1.0 / (std::abs(theta) + std::sqrt(1.0 + theta * theta));
          if (theta < 0.0) t = -t;
        }
        const double c = 1.0 / std::sqrt(1.0 + t * t);
        const double s = t * c;
        a(p, p) -= t * apq;
        a(q, q) += t * apq;
        a(p, q) = a(q, p) = 0.0;
        for (int r = 0; r < n; ++r) {
          if (r == p || r == q) continue;
          const double arp = a(r, p);
          const double arq = a(r, q);
          a(r, p) = a(p, r) = c * arp - s * arq;
          a(r, q) = a(q, r) = s * arp + c * arq;
        }
        if (with_vectors) {
          for (int r = 0; r < n; ++r) {
            const double vrp = v(r, p);
            const double vrq = v(r, q);
            v(r, p) = c * vrp - s * vrq;
            v(r, q) = s * vrp + c * vrq;
          }
        }
      }
    }
    off = off_norm();
  }

  std::vector<int> order(static_cast<std::size_t>(n));
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(),
                   [&](int x, int y) { return a(x, x) > a(y, y); });
  Spectrum out;
  out.sweeps = sweep;
  for (int k : order) {
    out.values.push_back(a(k, k));
    if (!with_vectors) continue;
    std::vector<double> vec(static_cast<std::size_t>(n));
    for (int r = 0; r < n; ++r) vec[r] = v(r, k);
    for (double x : vec) {
      if (std::abs(x) > 1e-10) {
        if (x < 0) {
          for (double& y : vec) y = -y;
        }
        break;
      }
    }
    out.vectors.push_back(std::move(vec));
  }
  return out;
}

Matrix adjacency_matrix(const Graph& g) {
  Matrix a(g.node_count());
  for (const Edge& e : g.edges()) {
    a(e.source - 1, e.target - 1) = 1.0;
    if (!g.directed()) a(e.target - 1, e.source - 1) = 1.0;
  }
  return a;
}

Matrix laplacian_matrix(const Graph& g, bool normalized) {
  require_undirected(g);
  const int n = g.node_count();
  Matrix l(n);
  for (NodeId u = 1; u <= n; ++u) {
    const double du = g.degree(u);
    if (du == 0) continue;
    l(u - 1, u - 1) = normalized ? 1.0 : du;
    for (NodeId v : g.neighbors(u)) {
      l(u - 1, v - 1) = normalized ? -1.0 / std::sqrt(du * g.degree(v)) : -1.0;
    }
  }
  return l;
}

const std::vector<SpectralTask>& all_spectral_tasks() {
  static const std::vector<SpectralTask> tasks = [] {
    std::vector<SpectralTask> out;
    for (const auto& t : kTasks) out.push_back(t.task);
    return out;
  }();
  return tasks;
}

std::string_view to_string(SpectralTask t) noexcept { return info(t).name; }

std::optional<SpectralTask> find_spectral_task(std::string_view name) {
  for (const auto& t : kTasks) {
    if (t.name == name) return t.task;
  }
  return std::nullopt;
}

std::string_view spectral_difficulty(SpectralTask t) noexcept {
  return info(t).difficulty;
}

std::string_view spectral_definition(SpectralTask t) noexcept {
  return info(t).definition;
}

double spectral_truth(SpectralTask task, const Graph& g,
                      const SpectralOptions& options) {
  require_undirected(g);
  const int n = g.node_count();
  const double m = static_cast<double>(g.edge_count());

  auto adjacency_values = [&] {
    return eigensym(adjacency_matrix(g), false).values;
  };

  switch (task) {
    case SpectralTask::kGraphEnergy: {
      double sum = 0.0;
      for (double x : adjacency_values()) sum += std::abs(x);
      return sum;
    }
    case SpectralTask::kNComponents: {
      const double threshold = 1e-8 * n;
      const auto mu = laplacian_values(g, false);
      return static_cast<double>(std::count_if(
          mu.begin(), mu.end(), [&](double x) { return x <= threshold; }));
    }
    case SpectralTask::kSumLambdaSquared: {
      double sum = 0.0;
      for (double x : adjacency_values()) sum += x * x;
      return sum;
    }
    case SpectralTask::kAlgebraicConnectivity: {
      if (n < 2) {
        throw DegenerateSpectrumError("algebraic connectivity needs n >= 2");
      }
      return laplacian_values(g, options.normalized_laplacian)[1];
    }
    case SpectralTask::kEstradaIndex: {
      double sum = 0.0;
      for (double x : adjacency_values()) sum += std::exp(x);
      return sum;
    }
    case SpectralTask::kLaplacianEnergy: {
      const double mean_degree = 2.0 * m / n;
      double sum = 0.0;
      for (double x : laplacian_values(g, false)) sum += std::abs(x - mean_degree);
      return sum;
    }
    case SpectralTask::kNaturalConnectivity: {
      double sum = 0.0;
      for (double x : adjacency_values()) sum += std::exp(x);
      return std::log(sum / n);
    }
    case SpectralTask::kSpectralGap: {
      if (n < 2) throw DegenerateSpectrumError("spectral gap needs n >= 2");
      if (options.laplacian_gap) return laplacian_values(g, false)[1];
      const auto values = adjacency_values();
      return values[0] - values[1];
    }
    case SpectralTask::kSpectralRadius: {
      double best = 0.0;
      for (double x : adjacency_values()) best = std::max(best, std::abs(x));
      return best;
    }
    case SpectralTask::kEigenvectorCentTop:
      return top_eigenvector_entry(g);
    case SpectralTask::kHeatTraceT1: {
      double sum = 0.0;
      for (double x : laplacian_values(g, options.normalized_laplacian)) {
        sum += std::exp(-x);
      }
      return sum;
    }
    case SpectralTask::kVonNeumannEntropy: {
      if (g.edge_count() == 0) {
        throw DegenerateSpectrumError("edgeless graph has trace(L) = 0");
      }
      const auto mu = laplacian_values(g, options.normalized_laplacian);
      const double trace = std::accumulate(mu.begin(), mu.end(), 0.0);
      double entropy = 0.0;
      for (double x : mu) {
        const double s = x / trace;
        if (s > 0.0) entropy -= s * std::log(s);
      }
      return entropy;
    }
  }
  return 0.0;
}

std::vector<TaskInstance> make_spectral_suite(
    const std::vector<std::pair<std::string, Graph>>& graphs,
    const SpectralOptions& options) {
  std::vector<TaskInstance> suite;
  for (const auto& [id, g] : graphs) {
    for (SpectralTask task : all_spectral_tasks()) {
      try {
        const double value = spectral_truth(task, g, options);
        suite.push_back(TaskInstance{std::string(to_string(task)), id, g, {},
                                     value, InstanceSource::kComputed,
                                     std::nullopt});
      } catch (const DegenerateSpectrumError& e) {
        spdlog::warn("skipping {} on graph {}: {}", to_string(task), id,
                     e.what());
      }
    }
  }
  return suite;
}

void export_spectral_truths(std::ostream& out,
                            const std::vector<TaskInstance>& suite) {
  for (const auto& inst : suite) {
    char value[64];
    std::snprintf(value, sizeof(value), "%.12g", inst.truth.get<double>());
    out << "{\"task\": " << nlohmann::json(inst.task).dump()
        << ", \"graph_id\": " << nlohmann::json(inst.graph_id).dump()
        << ", \"value\": " << value << "}\n";
  }
}

}  // namespace graphsym
