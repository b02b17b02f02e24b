#include "spexlab/bounds.hpp"

#include <cmath>
#include <numeric>

#include "spexlab/canon.hpp"
#include "spexlab/error.hpp"
#include "spexlab/family.hpp"
#include "spexlab/graph6.hpp"

namespace spexlab {

std::string graph_id(const Graph& g) { return g.order() <= 64 ? canonical_form(g) : graph6_encode(g); }

namespace {

void require_clique_cap(const Graph& g) {
  if (g.order() > 64) throw SpexError(ErrorKind::CapacityExceeded, "clique-number bounds support n <= 64");
}

double l1_norm(std::span<const double> x) { return std::accumulate(x.begin(), x.end(), 0.0); }

double edge_sum(const Graph& g, std::span<const double> x) {
  double s = 0.0;
  for (auto [u, v] : g.edges()) s += x[u] * x[v];
  return s;
}

double dot(std::span<const double> a, std::span<const double> b) {
  return std::inner_product(a.begin(), a.end(), b.begin(), 0.0);
}

}  // namespace

BoundReport hong_nikiforov_bound(const Graph& g, const SolverSettings& solver) {
  const double n = g.order();
  const double m = g.edge_count();
  const double d = degree_summary(g).min_degree;
  double radicand = 2.0 * m - d * n + (d + 1.0) * (d + 1.0) / 4.0;
  const bool clamped = radicand < 0.0;
  if (clamped) radicand = 0.0;
  const double lambda = dominant_eigenpair(g, MatrixKind::adjacency(), solver).value;
  auto r = make_bound_report(BoundName::HongNikiforov, graph_id(g), (d - 1.0) / 2.0 + std::sqrt(radicand), lambda);
  r.clamped = clamped;
  return r;
}

BoundReport wilf_bound(const Graph& g, const SolverSettings& solver) {
  require_clique_cap(g);
  const auto pair = dominant_eigenpair(g, MatrixKind::adjacency(), solver);
  const double omega = clique_number(g);
  const double l1 = l1_norm(pair.vector);
  return make_bound_report(BoundName::Wilf, graph_id(g), l1 * l1 * (1.0 - 1.0 / omega), pair.value);
}

BoundReport feng_yu_bound(const Graph& g, const SolverSettings& solver) {
  const double n = g.order();
  if (g.order() < 2) throw SpexError(ErrorKind::DegenerateOrder, "Feng-Yu bound needs n >= 2");
  const double q = dominant_eigenpair(g, MatrixKind::signless_laplacian(), solver).value;
  return make_bound_report(BoundName::FengYu, graph_id(g), 2.0 * g.edge_count() / (n - 1.0) + n - 2.0, q);
}

BoundReport motzkin_straus_check(const Graph& g, std::span<const double> z) {
  if (static_cast<int>(z.size()) != g.order()) {
    throw SpexError(ErrorKind::DimensionMismatch, "distribution length differs from graph order");
  }
  double total = 0.0;
  for (double v : z) {
    if (!(v >= 0.0)) throw SpexError(ErrorKind::InvalidDistribution, "negative or NaN entry");
    total += v;
  }
  if (std::abs(total - 1.0) > 1e-12) {
    throw SpexError(ErrorKind::InvalidDistribution, "entries must sum to 1");
  }
  require_clique_cap(g);
  const double omega = clique_number(g);
  return make_bound_report(BoundName::MotzkinStraus, graph_id(g), 1.0 - 1.0 / omega, 2.0 * edge_sum(g, z));
}

BoundReport clique_vector_check(const Graph& g, const SolverSettings& solver) {
  require_clique_cap(g);
  const auto pair = dominant_eigenpair(g, MatrixKind::adjacency(), solver);
  const double omega = clique_number(g);
  const double l1 = l1_norm(pair.vector);
  return make_bound_report(BoundName::CliqueVector, graph_id(g), 1.0 - 1.0 / omega,
                           2.0 / (l1 * l1) * edge_sum(g, pair.vector));
}

SolverSettings identity_solver_settings() {
  SolverSettings s;
  s.tolerance = 1e-13;
  return s;
}

IdentityReport double_eigenvector_identity(const Graph& g, const Graph& h, const SolverSettings& solver) {
  if (g.order() != h.order()) throw SpexError(ErrorKind::OrderMismatch, "graphs differ in order");
  if (!is_connected(g) || !is_connected(h)) {
    throw SpexError(ErrorKind::DisconnectedInput, "Perron vectors need connected graphs");
  }
  const auto q = MatrixKind::signless_laplacian();
  const auto pg = dominant_eigenpair(g, q, solver);
  const auto ph = dominant_eigenpair(h, q, solver);
  const auto& x = pg.vector;
  const auto& y = ph.vector;
  const std::size_t n = x.size();

  std::vector<double> qg_y(n);
  std::vector<double> qh_y(n);
  apply_matrix(g, q, y, qg_y);
  apply_matrix(h, q, y, qh_y);

  IdentityReport r;
  r.lhs1 = dot(x, qg_y);
  for (auto [i, j] : g.edges()) r.rhs1 += (x[i] + x[j]) * (y[i] + y[j]);
  r.lhs2 = dot(x, y) * (ph.value - pg.value);
  std::vector<double> diff(n);
  for (std::size_t i = 0; i < n; ++i) diff[i] = qh_y[i] - qg_y[i];
  r.rhs2 = dot(x, diff);
  r.max_abs_gap = std::max(std::abs(r.lhs1 - r.rhs1), std::abs(r.lhs2 - r.rhs2));
  return r;
}

LemmaReport q_test_vector_bound(int n, int delta) {
  if (n < 2 || delta < 1 || delta > n - 1) {
    throw SpexError(ErrorKind::InvalidParameter, "q_test_vector_bound needs 1 <= delta <= n-1");
  }
  const Graph h = extremal_h(n, delta);
  std::vector<double> y(n, 1.0);
  y[n - 1] = (delta - 1.0) / (2.0 * n);
  const double quotient = rayleigh_quotient(h, MatrixKind::signless_laplacian(), y);
  const double rhs = 2.0 * n - 4.0 + (delta - 1.0) / (n - 1.0);
  return make_lemma_report(LemmaId::L4_1, {n, delta, std::nullopt}, quotient, Relation::AtLeast, rhs,
                           "Rayleigh quotient of Q(H_{n,delta}) at the low-entry test vector");
}

}  // namespace spexlab
