#include <doctest.h>

#include <cmath>
#include <numeric>
#include <random>

#include "spexlab/error.hpp"
#include "spexlab/family.hpp"
#include "spexlab/spectra.hpp"
#include "support/oracles.hpp"

using namespace spexlab;

namespace {

const auto kAdj = MatrixKind::adjacency();
const auto kQ = MatrixKind::signless_laplacian();

void check_contract(const Graph& g, MatrixKind kind) {
  const auto r = dominant_eigenpair(g, kind);
  CHECK(r.residual <= 1e-10 * std::max(1.0, r.value));
  CHECK(eigenvalue_equation_residual(g, kind, r) <= 1e-10 * std::max(1.0, r.value));
  double norm = 0.0;
  for (double x : r.vector) {
    CHECK(x >= 0.0);
    norm += x * x;
  }
  CHECK(norm == doctest::Approx(1.0).epsilon(1e-12));
}

}  // namespace

TEST_CASE("closed forms") {
  for (int n = 2; n <= 40; ++n) {
    CHECK(dominant_eigenpair(complete_graph(n), kAdj).value == doctest::Approx(n - 1).epsilon(1e-12));
    CHECK(dominant_eigenpair(complete_graph(n), kQ).value == doctest::Approx(2 * n - 2).epsilon(1e-12));
  }
  for (int a = 1; a <= 8; ++a)
    for (int b = 1; b <= 8; ++b)
      CHECK(std::abs(dominant_eigenpair(complete_bipartite(a, b), kAdj).value - std::sqrt(a * b)) <= 1e-9);
  for (int n = 3; n <= 30; ++n) {
    CHECK(std::abs(dominant_eigenpair(cycle_graph(n), kQ).value - 4.0) <= 1e-9);
    CHECK(std::abs(dominant_eigenpair(cycle_graph(n), kAdj).value - 2.0) <= 1e-9);
  }
  CHECK(std::abs(dominant_eigenpair(petersen_graph(), kAdj).value - 3.0) <= 1e-9);
}

TEST_CASE("edgeless and tiny graphs") {
  const auto r = dominant_eigenpair(Graph(1), kAdj);
  CHECK(r.value == 0.0);
  CHECK(r.vector.size() == 1);
  CHECK(dominant_eigenpair(Graph(5), kQ).value == 0.0);
  CHECK(dominant_eigenpair(complete_graph(2), kAdj).value == doctest::Approx(1.0));
}

TEST_CASE("agreement with a dense eigensolver and the residual contract") {
  std::mt19937_64 rng(21);
  for (int t = 0; t < 150; ++t) {
    const Graph g = oracle::random_graph(rng, 2 + t % 40, 0.1 + 0.8 * (t % 7) / 7.0);
    CHECK(std::abs(dominant_eigenpair(g, kAdj).value - oracle::lambda(g)) <= 1e-8 * std::max(1.0, oracle::lambda(g)));
    CHECK(std::abs(dominant_eigenpair(g, kQ).value - oracle::q(g)) <= 1e-8 * std::max(1.0, oracle::q(g)));
    check_contract(g, kAdj);
    check_contract(g, kQ);
  }
}

TEST_CASE("H_{9,2} lies strictly between K_8 and K_9") {
  const double v = dominant_eigenpair(extremal_h(9, 2), kAdj).value;
  CHECK(v > 7.0);
  CHECK(v < 8.0);
  CHECK(std::abs(v - oracle::lambda(extremal_h(9, 2))) <= 1e-9);
}

TEST_CASE("adding an edge to a connected graph raises both radii") {
  std::mt19937_64 rng(4);
  for (int t = 0; t < 60; ++t) {
    const Graph g = oracle::random_connected_graph(rng, 4 + t % 20);
    for (int u = 0; u < g.order(); ++u)
      for (int v = u + 1; v < g.order(); ++v) {
        if (g.has_edge(u, v)) continue;
        GraphBuilder b(g);
        b.add_edge(u, v);
        const Graph h = b.build();
        CHECK(dominant_eigenpair(h, kAdj).value > dominant_eigenpair(g, kAdj).value);
        CHECK(dominant_eigenpair(h, kQ).value > dominant_eigenpair(g, kQ).value);
        u = g.order();
        break;
      }
  }
}

TEST_CASE("disjoint unions take the maximum component") {
  const Graph g = disjoint_union(cycle_graph(6), complete_graph(5));
  const auto r = dominant_eigenpair(g, kAdj);
  CHECK(r.value == doctest::Approx(4.0));
  CHECK(r.support_component == 1);
  for (int v = 0; v < 6; ++v) CHECK(r.vector[v] == 0.0);
  // Ties go to the lowest-indexed component.
  const auto tie = dominant_eigenpair(disjoint_union(complete_graph(4), complete_graph(4)), kAdj);
  CHECK(tie.support_component == 0);
  CHECK(tie.vector[7] == 0.0);
}

TEST_CASE("regular graphs") {
  for (const Graph& g : {petersen_graph(), build(CyclePower{13, 3}), build(Turan{12, 4})}) {
    const int d = g.degree(0);
    CHECK(dominant_eigenpair(g, kAdj).value == doctest::Approx(d).epsilon(1e-12));
    CHECK(dominant_eigenpair(g, kQ).value == doctest::Approx(2 * d).epsilon(1e-12));
    // Vertex-transitive: uniform Perron vector.
    const auto r = dominant_eigenpair(g, kAdj);
    for (double x : r.vector) CHECK(x == doctest::Approx(1.0 / std::sqrt(g.order())).epsilon(1e-9));
  }
}

TEST_CASE("alpha interpolation") {
  std::mt19937_64 rng(8);
  for (int t = 0; t < 30; ++t) {
    const Graph g = oracle::random_connected_graph(rng, 3 + t % 15);
    CHECK(dominant_eigenpair(g, MatrixKind::alpha(0.0)).value ==
          doctest::Approx(dominant_eigenpair(g, kAdj).value).epsilon(1e-9));
    CHECK(2.0 * dominant_eigenpair(g, MatrixKind::alpha(0.5)).value ==
          doctest::Approx(dominant_eigenpair(g, kQ).value).epsilon(1e-9));
    for (double a : {0.25, 0.75, 1.0}) {
      const double want = oracle::largest_eigenvalue(oracle::dense(g, a, 1.0 - a));
      CHECK(dominant_eigenpair(g, MatrixKind::alpha(a)).value == doctest::Approx(want).epsilon(1e-9));
    }
  }
  CHECK_THROWS_AS(MatrixKind::alpha(1.5), SpexError);
  CHECK(parse_matrix_kind("alpha:0.3").alpha_value() == doctest::Approx(0.3));
  CHECK(parse_matrix_kind("q").tag() == MatrixKind::Tag::SignlessLaplacian);
  CHECK_THROWS_AS(parse_matrix_kind("laplacian"), SpexError);
}

TEST_CASE("rayleigh quotient") {
  const Graph k = complete_graph(5);
  std::vector<double> ones(5, 1.0);
  CHECK(rayleigh_quotient(k, kAdj, ones) == doctest::Approx(4.0));
  CHECK(rayleigh_quotient(k, kQ, ones) == doctest::Approx(8.0));
  std::vector<double> zero(5, 0.0);
  std::vector<double> short_vec(4, 1.0);
  try {
    rayleigh_quotient(k, kAdj, zero);
    FAIL("zero vector accepted");
  } catch (const SpexError& e) {
    CHECK(e.kind() == ErrorKind::ZeroVector);
  }
  try {
    rayleigh_quotient(k, kAdj, short_vec);
    FAIL("short vector accepted");
  } catch (const SpexError& e) {
    CHECK(e.kind() == ErrorKind::DimensionMismatch);
  }
}

TEST_CASE("iteration cap reports convergence failure") {
  SolverSettings tight;
  tight.max_iterations = 2;
  tight.tolerance = 1e-15;
  try {
    dominant_eigenpair(extremal_h(60, 3), kQ, tight);
    FAIL("expected failure");
  } catch (const SpexError& e) {
    CHECK(e.kind() == ErrorKind::ConvergenceFailure);
  }
}

TEST_CASE("large sparse graph") {
  const Graph c = cycle_graph(512);
  const auto r = dominant_eigenpair(c, kQ);
  CHECK(std::abs(r.value - 4.0) <= 1e-9);
}
