#include "spexlab/graph6.hpp"

#include <algorithm>
#include <istream>
#include <ostream>

#include "spexlab/error.hpp"

namespace spexlab {

namespace {

[[noreturn]] void malformed(const std::string& why, std::size_t offset) {
  throw SpexError(ErrorKind::MalformedGraph6, why + " at byte " + std::to_string(offset));
}

std::size_t triangle_bytes(long long n) {
  const long long bits = n * (n - 1) / 2;
  return static_cast<std::size_t>((bits + 5) / 6);
}

}  // namespace

std::string graph6_encode(const Graph& g) {
  const int n = g.order();
  std::string out;
  if (n < 63) {
    out.push_back(static_cast<char>(n + 63));
  } else {
    out.push_back(static_cast<char>(126));
    out.push_back(static_cast<char>(((n >> 12) & 63) + 63));
    out.push_back(static_cast<char>(((n >> 6) & 63) + 63));
    out.push_back(static_cast<char>((n & 63) + 63));
  }
  int acc = 0;
  int filled = 0;
  for (int j = 1; j < n; ++j) {
    for (int i = 0; i < j; ++i) {
      acc = (acc << 1) | (g.has_edge(i, j) ? 1 : 0);
      if (++filled == 6) {
        out.push_back(static_cast<char>(acc + 63));
        acc = 0;
        filled = 0;
      }
    }
  }
  if (filled > 0) out.push_back(static_cast<char>((acc << (6 - filled)) + 63));
  return out;
}

Graph graph6_decode(std::string_view s) {
  if (s.empty()) malformed("empty graph6 string", 0);
  for (std::size_t i = 0; i < s.size(); ++i) {
    const auto c = static_cast<unsigned char>(s[i]);
    if (c < 63 || c > 126) malformed("byte outside 63..126", i);
  }
  long long n = 0;
  std::size_t pos = 0;
  if (static_cast<unsigned char>(s[0]) != 126) {
    n = s[0] - 63;
    pos = 1;
  } else {
    if (s.size() >= 2 && static_cast<unsigned char>(s[1]) == 126) {
      throw SpexError(ErrorKind::CapacityExceeded, "8-byte graph6 headers exceed the n <= 512 cap");
    }
    if (s.size() < 4) malformed("truncated size header", s.size());
    n = ((s[1] - 63LL) << 12) | ((s[2] - 63LL) << 6) | (s[3] - 63LL);
    pos = 4;
    if (n < 63) malformed("non-canonical size header", 0);
  }
  if (n < 1) malformed("graph6 order must be at least 1", 0);
  if (n > Graph::kMaxOrder) {
    throw SpexError(ErrorKind::CapacityExceeded, "graph6 order " + std::to_string(n) + " exceeds 512");
  }
  const std::size_t expected = pos + triangle_bytes(n);
  if (s.size() != expected) {
    malformed("expected " + std::to_string(expected) + " bytes, got " + std::to_string(s.size()),
              std::min(s.size(), expected));
  }
  const long long total_bits = n * (n - 1) / 2;
  const int pad = static_cast<int>(triangle_bytes(n) * 6 - total_bits);
  if (pad > 0) {
    const int last = s.back() - 63;
    if ((last & ((1 << pad) - 1)) != 0) malformed("nonzero padding bits", s.size() - 1);
  }

  GraphBuilder b(static_cast<int>(n));
  long long k = 0;
  for (int j = 1; j < n; ++j) {
    for (int i = 0; i < j; ++i, ++k) {
      const int byte = s[pos + static_cast<std::size_t>(k / 6)] - 63;
      if ((byte >> (5 - k % 6)) & 1) b.add_edge(i, j);
    }
  }
  return std::move(b).build();
}

std::vector<Graph> read_graph6_stream(std::istream& in) {
  std::vector<Graph> out;
  std::string line;
  std::size_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty()) continue;
    if (line.rfind(">>graph6<<", 0) == 0) line.erase(0, 10);
    try {
      out.push_back(graph6_decode(line));
    } catch (const SpexError& e) {
      throw SpexError(e.kind(), "line " + std::to_string(lineno) + ": " + e.detail());
    }
  }
  return out;
}

void write_graph6_stream(std::ostream& out, const std::vector<std::string>& lines) {
  for (const auto& l : lines) out << l << '\n';
}

}  // namespace spexlab
