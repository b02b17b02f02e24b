#pragma once

#include <string_view>
#include <variant>
#include <vector>

#include "spexlab/graph.hpp"
#include "spexlab/report.hpp"
#include "spexlab/spectra.hpp"

namespace spexlab {

constexpr double kDefaultEpsilon = 0.1;

/// Adjacency chain on G with w the minimum-degree vertex (lowest index on
/// ties). One report per lemma, two for L3.3 (lower and upper side, told
/// apart by the note). Failed inequalities are reported, never thrown.
/// Throws InvalidParameter unless n >= 3 and deltaF >= 1.
std::vector<LemmaReport> check_adjacency_chain(const Graph& g, int delta_f, const SolverSettings& solver = {});

struct QChainResult {
  std::vector<LemmaReport> reports;
  PartitionReport partition;
  std::vector<VertexEntryReport> entries;
};

/// Signless Laplacian chain on G with w the vertex of smallest Q-Perron
/// entry (lowest index on ties). The L4.6 report carries the worst margin
/// of the finite-n sandwich
///   c/((2-c)sqrt n) - 3/(sqrt n (n-2)) < x_v <= sqrt n d(v)/((n-2)(2n-4-d(v)))
/// over all v; the o(1/sqrt n) term itself appears only as the per-vertex
/// deviation. Throws InvalidEpsilon unless 0 < eps < 1/7.
QChainResult check_q_chain(const Graph& g, int delta_f, double epsilon = kDefaultEpsilon,
                           const SolverSettings& solver = {});

struct CyclePowerCase {
  int n;
  int k;
};
struct FactorCase {
  int n;
  int a;
  int b;
};
struct CliqueFactorCase {
  int n;
  int r;
};
using CorollaryCase = std::variant<CyclePowerCase, FactorCase, CliqueFactorCase>;

/// Parses `cyclepower:n,k | factor:n,a,b | cliquefactor:n,r`.
CorollaryCase parse_corollary_case(std::string_view text);
std::string to_string(const CorollaryCase& c);

struct CorollaryOptions {
  /// Largest order at which the exhaustive cross-check runs.
  int exhaustive_max_n = 9;
  int workers = 1;
  SolverSettings solver{};
};

/// Builds F and H for the case, confirms H avoids F (or has no
/// [a,b]-factor), records lambda(H) and e(H), and below
/// exhaustive_max_n compares lambda(H) with the exhaustive maximum.
/// Throws InvalidParameter for invalid cases, CapacityExceeded when a
/// containment query is undecided.
std::vector<LemmaReport> verify_corollary(const CorollaryCase& c, const CorollaryOptions& options = {});

}  // namespace spexlab
