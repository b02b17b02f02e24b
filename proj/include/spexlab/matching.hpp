#pragma once

#include <vector>

namespace spexlab {

/// Maximum cardinality matching in a general graph (Edmonds' blossom
/// algorithm). `adj` is an adjacency list on vertices 0..n-1; the result
/// holds each vertex's mate or -1.
std::vector<int> maximum_matching(const std::vector<std::vector<int>>& adj);

/// Stops at the first vertex that cannot be matched.
bool has_perfect_matching(const std::vector<std::vector<int>>& adj);

}  // namespace spexlab
