#pragma once

#include <string>
#include <string_view>
#include <variant>

#include "spexlab/graph.hpp"

namespace spexlab {

/// K_{k-1} join (K_{n-k} + K_1); the low-degree vertex sits at index n-1.
struct ExtremalH {
  int n;
  int k;
};
/// Complete r-partite graph with balanced parts.
struct Turan {
  int n;
  int r;
};
/// i ~ j iff circular distance <= k.
struct CyclePower {
  int n;
  int k;
};
/// (n/(r+1)) disjoint copies of K_{r+1}.
struct CliqueFactor {
  int n;
  int r;
};
struct PerfectMatching {
  int n;
};
struct Custom {
  std::string graph6;
};

using FamilySpec = std::variant<ExtremalH, Turan, CyclePower, CliqueFactor, PerfectMatching, Custom>;

/// Throws InvalidParameter on out-of-range parameters.
void validate(const FamilySpec& spec);
Graph build(const FamilySpec& spec);

/// Parses `h:n,k | turan:n,r | cyclepower:n,k | cliquefactor:n,r |
/// perfectmatching:n | g6:<string>`.
FamilySpec parse_family(std::string_view text);
std::string to_string(const FamilySpec& spec);

/// Vertex count of the built graph.
int family_order(const FamilySpec& spec);

inline Graph extremal_h(int n, int k) { return build(ExtremalH{n, k}); }

}  // namespace spexlab
