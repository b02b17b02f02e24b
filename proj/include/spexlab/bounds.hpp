#pragma once

#include <span>
#include <string>

#include "spexlab/graph.hpp"
#include "spexlab/report.hpp"
#include "spexlab/spectra.hpp"

namespace spexlab {

/// Canonical graph6 for n <= 64, plain graph6 beyond.
std::string graph_id(const Graph& g);

/// lambda(G) <= (d-1)/2 + sqrt(2m - d n + (d+1)^2/4) with d = min degree.
BoundReport hong_nikiforov_bound(const Graph& g, const SolverSettings& solver = {});

/// lambda(G) <= |x|_1^2 (1 - 1/omega(G)) for the adjacency Perron vector x.
/// n <= 64.
BoundReport wilf_bound(const Graph& g, const SolverSettings& solver = {});

/// q(G) <= 2m/(n-1) + n - 2. Throws DegenerateOrder for n = 1.
BoundReport feng_yu_bound(const Graph& g, const SolverSettings& solver = {});

/// 2 sum_{ij in E} z_i z_j <= 1 - 1/omega(G) for a probability vector z.
/// Throws InvalidDistribution unless z >= 0 and sum z = 1 +- 1e-12.
BoundReport motzkin_straus_check(const Graph& g, std::span<const double> z);

/// The Motzkin-Straus inequality at y = x/|x|_1, x the adjacency Perron
/// vector: (2/|x|_1^2) sum_{ij in E} x_i x_j <= 1 - 1/omega(G).
BoundReport clique_vector_check(const Graph& g, const SolverSettings& solver = {});

/// Solver settings used for the double-eigenvector identities. The second
/// identity is only as exact as the eigen-residual, so it is solved to a
/// tighter tolerance than the default.
SolverSettings identity_solver_settings();

/// Both double-eigenvector identities for the Q-Perron vectors x of G and
/// y of H. Throws OrderMismatch or DisconnectedInput.
IdentityReport double_eigenvector_identity(const Graph& g, const Graph& h,
                                           const SolverSettings& solver = identity_solver_settings());

/// Rayleigh quotient of Q(H_{n,delta}) at the vector with entry
/// (delta-1)/(2n) on the low-degree vertex and 1 elsewhere, checked against
/// 2n - 4 + (delta-1)/(n-1). Throws InvalidParameter unless 1 <= delta <= n-1.
LemmaReport q_test_vector_bound(int n, int delta);

}  // namespace spexlab
