#include "spexlab/spectra.hpp"

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <limits>
#include <numeric>
#include <sstream>

#include "spexlab/error.hpp"

namespace spexlab {

MatrixKind MatrixKind::alpha(double a) {
  if (!(a >= 0.0 && a <= 1.0)) {
    throw SpexError(ErrorKind::InvalidParameter, "alpha must lie in [0, 1]");
  }
  return MatrixKind(Tag::Alpha, a);
}

double MatrixKind::diagonal_weight() const noexcept {
  switch (tag_) {
    case Tag::Adjacency: return 0.0;
    case Tag::SignlessLaplacian: return 1.0;
    case Tag::Alpha: return alpha_;
  }
  return 0.0;
}

double MatrixKind::offdiagonal_weight() const noexcept {
  return tag_ == Tag::Alpha ? 1.0 - alpha_ : 1.0;
}

std::string MatrixKind::name() const {
  switch (tag_) {
    case Tag::Adjacency: return "adj";
    case Tag::SignlessLaplacian: return "q";
    case Tag::Alpha: {
      std::ostringstream os;
      os << "alpha:" << alpha_;
      return os.str();
    }
  }
  return "?";
}

MatrixKind parse_matrix_kind(const std::string& text) {
  if (text == "adj") return MatrixKind::adjacency();
  if (text == "q") return MatrixKind::signless_laplacian();
  if (text.rfind("alpha:", 0) == 0) {
    char* end = nullptr;
    const double a = std::strtod(text.c_str() + 6, &end);
    if (end == text.c_str() + 6 || *end != '\0') {
      throw SpexError(ErrorKind::InvalidParameter, "bad alpha in '" + text + "'");
    }
    return MatrixKind::alpha(a);
  }
  throw SpexError(ErrorKind::InvalidParameter, "unknown matrix kind '" + text + "'");
}

SolverSettings SolverSettings::from_environment() {
  SolverSettings s;
  if (const char* env = std::getenv("SPEXLAB_SOLVER_TOL"); env != nullptr && *env != '\0') {
    char* end = nullptr;
    const double tol = std::strtod(env, &end);
    if (*end != '\0' || !(tol > 0.0)) {
      throw SpexError(ErrorKind::InvalidParameter, "SPEXLAB_SOLVER_TOL must be a positive number");
    }
    s.tolerance = tol;
  }
  return s;
}

void apply_matrix(const Graph& g, MatrixKind kind, std::span<const double> x, std::span<double> y) {
  const int n = g.order();
  if (static_cast<int>(x.size()) != n || static_cast<int>(y.size()) != n) {
    throw SpexError(ErrorKind::DimensionMismatch, "vector length differs from graph order");
  }
  const double dw = kind.diagonal_weight();
  const double ow = kind.offdiagonal_weight();
  for (int v = 0; v < n; ++v) {
    double sum = 0.0;
    int deg = 0;
    g.for_each_neighbor(v, [&](int u) {
      sum += x[u];
      ++deg;
    });
    y[v] = dw * deg * x[v] + ow * sum;
  }
}

namespace {

struct ComponentSolve {
  double value = 0.0;
  std::vector<double> vector;
  int iterations = 0;
};

double max_residual(std::span<const double> mx, std::span<const double> x, double value) {
  double r = 0.0;
  for (std::size_t i = 0; i < x.size(); ++i) r = std::max(r, std::abs(mx[i] - value * x[i]));
  return r;
}

void normalize(std::vector<double>& x) {
  double s = 0.0;
  for (double v : x) s += v * v;
  s = std::sqrt(s);
  for (double& v : x) v /= s;
}

ComponentSolve solve_connected(const Graph& g, MatrixKind kind, const SolverSettings& settings) {
  const int n = g.order();
  ComponentSolve out;
  if (n == 1) {
    out.vector = {1.0};
    return out;
  }
  const double shift = kind.iteration_shift();
  std::vector<double> x(n);
  {
    const auto deg = g.degrees();
    double norm = 0.0;
    for (int d : deg) norm += static_cast<double>(d) * d;
    norm = std::sqrt(norm);
    for (int v = 0; v < n; ++v) x[v] = deg[v] / norm + 1.0 / n;
    normalize(x);
  }
  std::vector<double> y(n);
  double best = std::numeric_limits<double>::infinity();
  for (int it = 1; it <= settings.max_iterations; ++it) {
    apply_matrix(g, kind, x, y);
    const double value = std::inner_product(x.begin(), x.end(), y.begin(), 0.0);
    const double r = max_residual(y, x, value);
    best = std::min(best, r);
    if (r <= settings.tolerance * std::max(1.0, value)) {
      out.value = value;
      out.vector = std::move(x);
      out.iterations = it;
      return out;
    }
    for (int v = 0; v < n; ++v) x[v] = y[v] + shift * x[v];
    normalize(x);
  }
  std::ostringstream os;
  os << "no convergence after " << settings.max_iterations << " iterations; best residual " << best;
  throw SpexError(ErrorKind::ConvergenceFailure, os.str());
}

}  // namespace

SpectrumResult dominant_eigenpair(const Graph& g, MatrixKind kind, const SolverSettings& settings) {
  const int n = g.order();
  const auto components = connected_components(g);
  SpectrumResult result;
  result.vector.assign(n, 0.0);
  if (components.size() == 1) {
    auto solved = solve_connected(g, kind, settings);
    result.value = solved.value;
    result.vector = std::move(solved.vector);
    result.iterations = solved.iterations;
  } else {
    // Only components that can beat the current best need a solve; a
    // component of order k never exceeds the spectral radius of K_k.
    int best_index = -1;
    ComponentSolve best;
    for (std::size_t c = 0; c < components.size(); ++c) {
      const auto& comp = components[c];
      const int k = static_cast<int>(comp.size());
      const double ceiling = (kind.tag() == MatrixKind::Tag::SignlessLaplacian ? 2.0 : 1.0) * (k - 1);
      if (best_index >= 0 && ceiling <= best.value) continue;
      std::vector<int> local(n, -1);
      for (int i = 0; i < k; ++i) local[comp[i]] = i;
      GraphBuilder b(k);
      for (int i = 0; i < k; ++i)
        g.for_each_neighbor(comp[i], [&](int u) {
          if (comp[i] < u) b.add_edge(i, local[u]);
        });
      auto solved = solve_connected(std::move(b).build(), kind, settings);
      result.iterations += solved.iterations;
      const double tie = 1e-12 * std::max(1.0, best.value);
      if (best_index < 0 || solved.value > best.value + tie) {
        best_index = static_cast<int>(c);
        best = std::move(solved);
      }
    }
    result.value = best.value;
    result.support_component = best_index;
    const auto& comp = components[best_index];
    for (std::size_t i = 0; i < comp.size(); ++i) result.vector[comp[i]] = best.vector[i];
  }
  result.residual = eigenvalue_equation_residual(g, kind, result);
  return result;
}

double rayleigh_quotient(const Graph& g, MatrixKind kind, std::span<const double> z) {
  if (static_cast<int>(z.size()) != g.order()) {
    throw SpexError(ErrorKind::DimensionMismatch, "vector length differs from graph order");
  }
  const double zz = std::inner_product(z.begin(), z.end(), z.begin(), 0.0);
  if (zz == 0.0) throw SpexError(ErrorKind::ZeroVector, "Rayleigh quotient of the zero vector");
  std::vector<double> mz(z.size());
  apply_matrix(g, kind, z, mz);
  return std::inner_product(z.begin(), z.end(), mz.begin(), 0.0) / zz;
}

double eigenvalue_equation_residual(const Graph& g, MatrixKind kind, const SpectrumResult& result) {
  if (static_cast<int>(result.vector.size()) != g.order()) {
    throw SpexError(ErrorKind::DimensionMismatch, "eigenvector length differs from graph order");
  }
  std::vector<double> mx(result.vector.size());
  apply_matrix(g, kind, result.vector, mx);
  return max_residual(mx, result.vector, result.value);
}

bool meets_residual_contract(const SpectrumResult& r, const SolverSettings& settings) noexcept {
  return r.residual <= settings.tolerance * std::max(1.0, r.value);
}

}  // namespace spexlab
