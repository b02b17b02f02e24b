#pragma once

#include <cstdint>
#include <span>
#include <utility>
#include <vector>

namespace spexlab {

/// Immutable simple graph on vertices 0..n-1 with one bit row per vertex.
///
/// Rows are stored contiguously as `words()` 64-bit words each; bit j of
/// row i is set iff ij is an edge. Symmetry and the absence of loops are
/// enforced by GraphBuilder, the only way to produce a non-empty edge set.
class Graph {
 public:
  static constexpr int kMaxOrder = 512;

  /// Empty graph on n vertices. Throws CapacityExceeded outside [1, 512].
  explicit Graph(int n);

  static Graph from_edges(int n, std::span<const std::pair<int, int>> edges);

  int order() const noexcept { return n_; }
  int edge_count() const noexcept { return m_; }
  int words() const noexcept { return words_; }

  bool has_edge(int u, int v) const noexcept {
    return (bits_[static_cast<std::size_t>(u) * words_ + (v >> 6)] >> (v & 63)) & 1U;
  }

  std::span<const std::uint64_t> row(int v) const noexcept {
    return {bits_.data() + static_cast<std::size_t>(v) * words_, static_cast<std::size_t>(words_)};
  }

  int degree(int v) const noexcept;
  std::vector<int> degrees() const;
  std::vector<int> neighbors(int v) const;
  std::vector<std::pair<int, int>> edges() const;

  template <class Fn>
  void for_each_neighbor(int v, Fn&& fn) const {
    auto r = row(v);
    for (int w = 0; w < words_; ++w) {
      std::uint64_t word = r[w];
      while (word != 0) {
        int bit = __builtin_ctzll(word);
        fn(w * 64 + bit);
        word &= word - 1;
      }
    }
  }

  bool operator==(const Graph& other) const = default;

 private:
  friend class GraphBuilder;

  int n_;
  int words_;
  int m_ = 0;
  std::vector<std::uint64_t> bits_;
};

/// Mutable staging area for a Graph.
class GraphBuilder {
 public:
  explicit GraphBuilder(int n) : g_(n) {}
  explicit GraphBuilder(const Graph& g) : g_(g) {}

  int order() const noexcept { return g_.n_; }
  bool has_edge(int u, int v) const noexcept { return g_.has_edge(u, v); }

  /// Adds uv; loops and repeated edges are rejected with InvalidParameter.
  GraphBuilder& add_edge(int u, int v);
  GraphBuilder& remove_edge(int u, int v);
  /// Adds uv unless it is already present.
  GraphBuilder& connect(int u, int v);

  Graph build() const& { return g_; }
  Graph build() && { return std::move(g_); }

 private:
  void check_pair(int u, int v) const;
  void set_bit(int u, int v, bool on) noexcept;

  Graph g_;
};

struct DegreeSummary {
  std::vector<int> sorted_degrees;  // non-increasing
  int min_degree = 0;
  int max_degree = 0;
};

Graph complete_graph(int n);
Graph empty_graph(int n);
Graph cycle_graph(int n);
Graph complete_bipartite(int a, int b);
Graph petersen_graph();

Graph join(const Graph& g, const Graph& h);
Graph disjoint_union(const Graph& g, const Graph& h);
Graph complement(const Graph& g);

/// Relabels so that vertex v of `g` becomes perm[v].
Graph relabel(const Graph& g, std::span<const int> perm);
/// Induced subgraph on all vertices except v (n >= 2).
Graph remove_vertex(const Graph& g, int v);
bool is_complete(const Graph& g) noexcept;

DegreeSummary degree_summary(const Graph& g);
/// Components ordered by their smallest vertex; vertices ascending.
std::vector<std::vector<int>> connected_components(const Graph& g);
bool is_connected(const Graph& g);

/// Exact clique number by branch and bound with greedy-colouring bounds.
/// Limited to n <= 64.
int clique_number(const Graph& g);

}  // namespace spexlab
