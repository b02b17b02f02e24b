#pragma once

#include <iosfwd>
#include <string>
#include <string_view>
#include <vector>

#include "spexlab/graph.hpp"

namespace spexlab {

// graph6: size header, then the upper triangle column by column
// ((0,1),(0,2),(1,2),(0,3),...) packed big-endian into 6-bit groups, each
// group written as value + 63. Trailing padding bits must be zero.

std::string graph6_encode(const Graph& g);

/// Throws MalformedGraph6 naming the offending byte offset.
Graph graph6_decode(std::string_view s);

/// Reads a newline-delimited graph6 stream. Blank lines are skipped; a bad
/// line raises MalformedGraph6 naming the 1-based line number.
std::vector<Graph> read_graph6_stream(std::istream& in);

void write_graph6_stream(std::ostream& out, const std::vector<std::string>& lines);

}  // namespace spexlab
