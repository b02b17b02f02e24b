#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "spexlab/graph.hpp"

namespace spexlab {

/// mapping[f] is the host vertex receiving F-vertex f; a bijection.
struct EmbeddingWitness {
  std::vector<int> mapping;
};

enum class Containment { Found, Absent, Unknown };

struct ContainmentResult {
  Containment status = Containment::Unknown;
  std::optional<EmbeddingWitness> witness;
  std::uint64_t expansions = 0;

  bool found() const noexcept { return status == Containment::Found; }
  bool absent() const noexcept { return status == Containment::Absent; }
};

struct EmbedOptions {
  /// Search nodes expanded before giving up with Containment::Unknown.
  std::uint64_t max_expansions = 100'000'000;
};

/// Decides whether `host` contains `pattern` as a spanning subgraph.
///
/// Backtracking over pattern vertices, most constrained domain first
/// (ties: larger pattern degree, then lower index). Domains are host
/// bit sets seeded by degree and narrowed to the neighbourhood of each
/// assigned pattern neighbour. Throws OrderMismatch when the orders differ.
ContainmentResult contains_spanning(const Graph& host, const Graph& pattern, const EmbedOptions& options = {});

/// Tries all n! bijections; n <= 8.
std::optional<EmbeddingWitness> contains_spanning_bruteforce(const Graph& host, const Graph& pattern);

/// Checks the bijection and every pattern edge independently of the search.
bool verify_witness(const Graph& host, const Graph& pattern, const EmbeddingWitness& witness);

/// True iff the i-th largest pattern degree never exceeds the i-th largest
/// host degree. A false return certifies that no spanning copy exists.
bool sorted_degree_dominance(const Graph& host, const Graph& pattern);

/// Degree window [a, b] of a spanning subgraph.
struct FactorQuery {
  int a = 0;
  int b = 0;
};

/// True iff `g` has a spanning subgraph with every degree in [a, b].
///
/// Reduction: every vertex v becomes d(v) edge ports, max(0, d(v)-b)
/// mandatory absorbers and the remaining d(v)-a-max(0, d(v)-b) optional
/// absorbers, ports joined completely to both absorber sets and matching
/// ports of the same edge joined to each other. A filler clique attached
/// to every optional absorber, sized |optional| plus the parity of
/// |ports| + |mandatory|, turns "ports and mandatory absorbers covered"
/// into a perfect matching question. Throws InvalidQuery when b < a.
bool has_factor(const Graph& g, FactorQuery q);

}  // namespace spexlab
