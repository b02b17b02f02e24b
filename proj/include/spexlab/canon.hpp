#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "spexlab/graph.hpp"

namespace spexlab {

/// Result of the individualisation-refinement search.
struct CanonicalLabeling {
  /// order[p] is the vertex placed at canonical position p.
  std::vector<int> order;
  /// Row p holds the canonical positions adjacent to position p.
  std::vector<std::uint64_t> certificate;
  /// Automorphisms discovered during the search, as vertex maps.
  std::vector<std::vector<int>> generators;
  /// Smallest vertex in each vertex's orbit under `generators`.
  std::vector<int> orbit_min;
};

/// Canonical labeling for n <= 64 (CapacityExceeded otherwise).
///
/// The search refines an ordered partition to equitability, branches on
/// the first smallest non-singleton cell and keeps the leaf with the
/// lexicographically smallest certificate. Leaves that reproduce a
/// stored certificate yield automorphisms, which prune sibling subtrees.
CanonicalLabeling canonical_labeling(const Graph& g);

/// graph6 of the canonical relabeling; equal exactly for isomorphic inputs.
std::string canonical_form(const Graph& g);
Graph canonical_graph(const Graph& g);

/// Equitable refinement of the unit partition (cells in invariant order).
/// Exposed for cheap pre-filters during generation.
std::vector<std::vector<int>> equitable_partition(const Graph& g);

}  // namespace spexlab
