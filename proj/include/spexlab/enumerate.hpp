#pragma once

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "spexlab/embed.hpp"
#include "spexlab/family.hpp"
#include "spexlab/graph.hpp"
#include "spexlab/spectra.hpp"

namespace spexlab {

constexpr int kMaxGenerationOrder = 10;

// ---------------------------------------------------------------------------
// Generation
// ---------------------------------------------------------------------------

/// Representatives one vertex smaller than n, in generation order. Each
/// one owns the partition of order-n classes produced by for_each_child.
std::vector<Graph> generation_parents(int n);

/// Emits the order-(n+1) classes whose canonical parent is `parent`.
///
/// The new vertex gets every neighbourhood subset; a child survives iff
/// deleting the new vertex is isomorphic to deleting the vertex the
/// canonical labeling puts last, and it is the first child of this
/// parent with its certificate.
void for_each_child(const Graph& parent, const std::function<void(const Graph&)>& visit);

/// One representative per isomorphism class on n vertices, 1 <= n <= 10.
void for_each_graph(int n, const std::function<void(const Graph&)>& visit);
std::vector<Graph> generate_graphs(int n);

/// Reference generator: all 2^C(n,2) labelled graphs deduplicated by
/// canonical form. n <= 7.
std::vector<Graph> generate_graphs_by_dedup(int n);

/// Classes whose complement has at most `max_missing_edges` edges.
std::vector<Graph> generate_dense_graphs(int n, int max_missing_edges);

// ---------------------------------------------------------------------------
// Extremal search
// ---------------------------------------------------------------------------

enum class Objective { EdgeCount, AdjSpectralRadius, QSpectralRadius };

Objective parse_objective(const std::string& text);  // edges | lambda | q
std::string to_string(Objective objective);

struct SearchOptions {
  bool dense_mode = false;
  /// Complement edge budget in dense mode; negative means 2n.
  int max_missing_edges = -1;
  int workers = 1;
  double tie_tolerance = 1e-9;
  SolverSettings solver{};
  EmbedOptions embed{};
};

struct SearchOutcome {
  int n = 0;
  FamilySpec family;
  Objective objective = Objective::EdgeCount;
  double best_value = 0.0;
  /// Canonical graph6 strings of every co-extremal graph, sorted.
  std::vector<std::string> witnesses;
  std::uint64_t graphs_examined = 0;
  /// Graphs certified F-free by degree dominance alone.
  std::uint64_t graphs_pruned = 0;
  double tie_tolerance = 1e-9;
};

/// Maximises `objective` over the F-free graphs of order n.
///
/// Full mode scans every class (n <= 10); dense mode scans the classes
/// with at most max_missing_edges non-edges. Work is split by generation
/// parent and merged deterministically, so the outcome does not depend on
/// the worker count. Witnesses are re-verified F-free and re-scored with
/// a dense eigensolver; a mismatch raises InternalAssertion.
SearchOutcome search_extremal(int n, const FamilySpec& family, Objective objective, const SearchOptions& options = {});

/// Same search over an explicit list of graphs (e.g. a graph6 stream).
SearchOutcome search_extremal_in(const std::vector<Graph>& graphs, const FamilySpec& family, Objective objective,
                                 const SearchOptions& options = {});

/// Objective value of one graph, computed by the iterative solver.
double objective_value(const Graph& g, Objective objective, const SolverSettings& solver = {});

/// Spectral radius from a dense symmetric eigensolver, independent of the
/// power iteration.
double dense_spectral_radius(const Graph& g, MatrixKind kind);

}  // namespace spexlab
