#pragma once

#include <span>
#include <string>
#include <vector>

#include "spexlab/graph.hpp"

namespace spexlab {

/// The matrix alpha*D + (1 - alpha)*A, with A(G) at alpha = 0 and the
/// signless Laplacian D + A kept as its own tag (it equals 2*A_{1/2}).
class MatrixKind {
 public:
  enum class Tag { Adjacency, SignlessLaplacian, Alpha };

  static MatrixKind adjacency() noexcept { return MatrixKind(Tag::Adjacency, 0.0); }
  static MatrixKind signless_laplacian() noexcept { return MatrixKind(Tag::SignlessLaplacian, 0.0); }
  /// Throws InvalidParameter unless 0 <= alpha <= 1.
  static MatrixKind alpha(double a);

  Tag tag() const noexcept { return tag_; }
  double alpha_value() const noexcept { return alpha_; }

  double diagonal_weight() const noexcept;
  double offdiagonal_weight() const noexcept;
  /// Iterations run on M + shift*I; only the adjacency matrix needs it.
  double iteration_shift() const noexcept { return diagonal_weight() == 0.0 ? 1.0 : 0.0; }

  std::string name() const;

 private:
  MatrixKind(Tag t, double a) : tag_(t), alpha_(a) {}
  Tag tag_;
  double alpha_;
};

/// Parses "adj", "q" or "alpha:<a>".
MatrixKind parse_matrix_kind(const std::string& text);

struct SolverSettings {
  double tolerance = 1e-10;
  int max_iterations = 200000;

  /// Defaults, with SPEXLAB_SOLVER_TOL overriding the tolerance when set.
  static SolverSettings from_environment();
};

struct SpectrumResult {
  double value = 0.0;
  std::vector<double> vector;
  double residual = 0.0;
  int iterations = 0;
  int support_component = 0;
};

/// Computes y = M x for the chosen matrix.
void apply_matrix(const Graph& g, MatrixKind kind, std::span<const double> x, std::span<double> y);

/// Spectral radius and a nonnegative unit eigenvector of the chosen matrix.
///
/// Power iteration with the value taken as the Rayleigh quotient of the
/// final iterate; stops once max_v |(Mx)_v - value x_v| <= tol * max(1, value).
/// Disconnected graphs are solved per component; the vector lives on the
/// lowest-indexed maximising component and is zero elsewhere. Throws
/// ConvergenceFailure (reporting the best residual) past the iteration cap.
SpectrumResult dominant_eigenpair(const Graph& g, MatrixKind kind, const SolverSettings& settings = {});

double rayleigh_quotient(const Graph& g, MatrixKind kind, std::span<const double> z);

/// max_v |(M x)_v - value x_v| recomputed for `result`.
double eigenvalue_equation_residual(const Graph& g, MatrixKind kind, const SpectrumResult& result);

/// True when the residual meets the solver contract for `settings`.
bool meets_residual_contract(const SpectrumResult& r, const SolverSettings& settings = {}) noexcept;

}  // namespace spexlab
