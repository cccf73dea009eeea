#pragma once

#include <iosfwd>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "graphsym/graph.hpp"
#include "graphsym/instance.hpp"

namespace graphsym {

/// Dense square matrix, row-major.
class Matrix {
 public:
  explicit Matrix(int n) : n_(n), a_(static_cast<std::size_t>(n) * n, 0.0) {}

  int size() const noexcept { return n_; }
  double& operator()(int i, int j) { return a_[index(i, j)]; }
  double operator()(int i, int j) const { return a_[index(i, j)]; }
  double frobenius_norm() const;

 private:
  std::size_t index(int i, int j) const {
    return static_cast<std::size_t>(i) * static_cast<std::size_t>(n_) +
           static_cast<std::size_t>(j);
  }
  int n_;
  std::vector<double> a_;
};

enum class SpectrumSource { kAdjacency, kLaplacian, kDensityMatrix, kOther };

struct Spectrum {
  /// Sorted descending.
  std::vector<double> values;
  /// vectors[k] is the unit eigenvector for values[k], sign fixed so its
  /// first clearly non-zero entry is positive. Empty if not requested.
  std::vector<std::vector<double>> vectors;
  SpectrumSource source = SpectrumSource::kOther;
  int sweeps = 0;
};

/// Cyclic Jacobi. Stops when the off-diagonal Frobenius norm drops below
/// 1e-12 * ||M||_F; throws ConvergenceError after 100 sweeps and
/// AsymmetryError if |M(i,j) - M(j,i)| > 1e-12 * max(1, ||M||_F).
Spectrum eigensym(const Matrix& m, bool with_vectors = true);

Matrix adjacency_matrix(const Graph& g);
/// L = D - A, or I - D^-1/2 A D^-1/2 when `normalized` (isolated nodes get a
/// zero row).
Matrix laplacian_matrix(const Graph& g, bool normalized = false);

enum class SpectralTask {
  kGraphEnergy,
  kNComponents,
  kSumLambdaSquared,
  kAlgebraicConnectivity,
  kEstradaIndex,
  kLaplacianEnergy,
  kNaturalConnectivity,
  kSpectralGap,
  kSpectralRadius,
  kEigenvectorCentTop,
  kHeatTraceT1,
  kVonNeumannEntropy,
};

const std::vector<SpectralTask>& all_spectral_tasks();
std::string_view to_string(SpectralTask t) noexcept;
std::optional<SpectralTask> find_spectral_task(std::string_view name);
/// "Easy", "Medium" or "Hard".
std::string_view spectral_difficulty(SpectralTask t) noexcept;
/// One-sentence definition used in prompts.
std::string_view spectral_definition(SpectralTask t) noexcept;

struct SpectralOptions {
  /// Use the normalized Laplacian for algebraic connectivity, heat trace and
  /// von Neumann entropy.
  bool normalized_laplacian = false;
  /// spectral_gap as mu_2 of the Laplacian instead of lambda_1 - lambda_2.
  bool laplacian_gap = false;
};

/// Ground truth for one spectral task on an undirected graph.
double spectral_truth(SpectralTask task, const Graph& g,
                      const SpectralOptions& options = {});

/// All twelve tasks for each graph; degenerate (graph, task) pairs are
/// skipped with a warning.
std::vector<TaskInstance> make_spectral_suite(
    const std::vector<std::pair<std::string, Graph>>& graphs,
    const SpectralOptions& options = {});

/// JSON lines {"task", "graph_id", "value"} with 12 significant digits.
void export_spectral_truths(std::ostream& out,
                            const std::vector<TaskInstance>& suite);

}  // namespace graphsym
