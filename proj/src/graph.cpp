#include "spexlab/graph.hpp"

#include <algorithm>
#include <bit>
#include <functional>
#include <string>

#include "spexlab/error.hpp"

namespace spexlab {

Graph::Graph(int n) : n_(n), words_((n + 63) / 64) {
  if (n < 1 || n > kMaxOrder) {
    throw SpexError(ErrorKind::CapacityExceeded,
                    "graph order " + std::to_string(n) + " outside [1, 512]");
  }
  bits_.assign(static_cast<std::size_t>(n_) * words_, 0);
}

Graph Graph::from_edges(int n, std::span<const std::pair<int, int>> edges) {
  GraphBuilder b(n);
  for (auto [u, v] : edges) b.add_edge(u, v);
  return std::move(b).build();
}

int Graph::degree(int v) const noexcept {
  int d = 0;
  for (std::uint64_t w : row(v)) d += std::popcount(w);
  return d;
}

std::vector<int> Graph::degrees() const {
  std::vector<int> d(n_);
  for (int v = 0; v < n_; ++v) d[v] = degree(v);
  return d;
}

std::vector<int> Graph::neighbors(int v) const {
  std::vector<int> out;
  for_each_neighbor(v, [&](int u) { out.push_back(u); });
  return out;
}

std::vector<std::pair<int, int>> Graph::edges() const {
  std::vector<std::pair<int, int>> out;
  out.reserve(m_);
  for (int u = 0; u < n_; ++u) {
    for_each_neighbor(u, [&](int v) {
      if (u < v) out.emplace_back(u, v);
    });
  }
  return out;
}

void GraphBuilder::check_pair(int u, int v) const {
  if (u < 0 || v < 0 || u >= g_.n_ || v >= g_.n_) {
    throw SpexError(ErrorKind::InvalidParameter, "vertex index out of range");
  }
  if (u == v) throw SpexError(ErrorKind::InvalidParameter, "loops are not allowed");
}

void GraphBuilder::set_bit(int u, int v, bool on) noexcept {
  auto& a = g_.bits_[static_cast<std::size_t>(u) * g_.words_ + (v >> 6)];
  auto& b = g_.bits_[static_cast<std::size_t>(v) * g_.words_ + (u >> 6)];
  const std::uint64_t ma = std::uint64_t{1} << (v & 63);
  const std::uint64_t mb = std::uint64_t{1} << (u & 63);
  if (on) {
    a |= ma;
    b |= mb;
  } else {
    a &= ~ma;
    b &= ~mb;
  }
}

GraphBuilder& GraphBuilder::add_edge(int u, int v) {
  check_pair(u, v);
  if (g_.has_edge(u, v)) {
    throw SpexError(ErrorKind::InvalidParameter, "repeated edge");
  }
  set_bit(u, v, true);
  ++g_.m_;
  return *this;
}

GraphBuilder& GraphBuilder::connect(int u, int v) {
  check_pair(u, v);
  if (!g_.has_edge(u, v)) {
    set_bit(u, v, true);
    ++g_.m_;
  }
  return *this;
}

GraphBuilder& GraphBuilder::remove_edge(int u, int v) {
  check_pair(u, v);
  if (g_.has_edge(u, v)) {
    set_bit(u, v, false);
    --g_.m_;
  }
  return *this;
}

Graph complete_graph(int n) {
  GraphBuilder b(n);
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v) b.add_edge(u, v);
  return std::move(b).build();
}

Graph empty_graph(int n) { return Graph(n); }

Graph cycle_graph(int n) {
  if (n < 3) throw SpexError(ErrorKind::InvalidParameter, "cycle needs n >= 3");
  GraphBuilder b(n);
  for (int v = 0; v < n; ++v) b.add_edge(v, (v + 1) % n);
  return std::move(b).build();
}

Graph complete_bipartite(int a, int b) {
  if (a < 1 || b < 1) throw SpexError(ErrorKind::InvalidParameter, "parts must be non-empty");
  GraphBuilder g(a + b);
  for (int u = 0; u < a; ++u)
    for (int v = 0; v < b; ++v) g.add_edge(u, a + v);
  return std::move(g).build();
}

Graph petersen_graph() {
  GraphBuilder b(10);
  for (int i = 0; i < 5; ++i) {
    b.add_edge(i, (i + 1) % 5);
    b.add_edge(i, i + 5);
    b.add_edge(5 + i, 5 + (i + 2) % 5);
  }
  return std::move(b).build();
}

namespace {

void check_capacity(int n) {
  if (n > Graph::kMaxOrder) {
    throw SpexError(ErrorKind::CapacityExceeded,
                    "combined order " + std::to_string(n) + " exceeds 512");
  }
}

GraphBuilder union_builder(const Graph& g, const Graph& h) {
  const int ng = g.order();
  check_capacity(ng + h.order());
  GraphBuilder b(ng + h.order());
  for (auto [u, v] : g.edges()) b.add_edge(u, v);
  for (auto [u, v] : h.edges()) b.add_edge(ng + u, ng + v);
  return b;
}

}  // namespace

Graph join(const Graph& g, const Graph& h) {
  GraphBuilder b = union_builder(g, h);
  for (int u = 0; u < g.order(); ++u)
    for (int v = 0; v < h.order(); ++v) b.add_edge(u, g.order() + v);
  return std::move(b).build();
}

Graph disjoint_union(const Graph& g, const Graph& h) { return union_builder(g, h).build(); }

Graph complement(const Graph& g) {
  const int n = g.order();
  GraphBuilder b(n);
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v)
      if (!g.has_edge(u, v)) b.add_edge(u, v);
  return std::move(b).build();
}

Graph relabel(const Graph& g, std::span<const int> perm) {
  if (static_cast<int>(perm.size()) != g.order()) {
    throw SpexError(ErrorKind::DimensionMismatch, "permutation length differs from order");
  }
  GraphBuilder b(g.order());
  for (auto [u, v] : g.edges()) b.add_edge(perm[u], perm[v]);
  return std::move(b).build();
}

Graph remove_vertex(const Graph& g, int v) {
  const int n = g.order();
  if (n < 2) throw SpexError(ErrorKind::InvalidParameter, "cannot delete the only vertex");
  GraphBuilder b(n - 1);
  auto shift = [v](int x) { return x < v ? x : x - 1; };
  for (auto [x, y] : g.edges())
    if (x != v && y != v) b.add_edge(shift(x), shift(y));
  return std::move(b).build();
}

bool is_complete(const Graph& g) noexcept {
  const long long n = g.order();
  return g.edge_count() == n * (n - 1) / 2;
}

DegreeSummary degree_summary(const Graph& g) {
  DegreeSummary s;
  s.sorted_degrees = g.degrees();
  std::sort(s.sorted_degrees.begin(), s.sorted_degrees.end(), std::greater<>());
  s.max_degree = s.sorted_degrees.front();
  s.min_degree = s.sorted_degrees.back();
  return s;
}

std::vector<std::vector<int>> connected_components(const Graph& g) {
  const int n = g.order();
  std::vector<int> comp(n, -1);
  std::vector<std::vector<int>> out;
  std::vector<int> stack;
  for (int s = 0; s < n; ++s) {
    if (comp[s] >= 0) continue;
    const int id = static_cast<int>(out.size());
    out.emplace_back();
    comp[s] = id;
    stack.push_back(s);
    while (!stack.empty()) {
      int v = stack.back();
      stack.pop_back();
      out[id].push_back(v);
      g.for_each_neighbor(v, [&](int u) {
        if (comp[u] < 0) {
          comp[u] = id;
          stack.push_back(u);
        }
      });
    }
    std::sort(out[id].begin(), out[id].end());
  }
  return out;
}

bool is_connected(const Graph& g) { return connected_components(g).size() == 1; }

namespace {

// Colour-bounded maximum clique search over 64-bit vertex sets.
class CliqueSearch {
 public:
  explicit CliqueSearch(const Graph& g) : adj_(g.order()) {
    for (int v = 0; v < g.order(); ++v) adj_[v] = g.row(v)[0];
  }

  int run(std::uint64_t all) {
    expand(all, 0);
    return best_;
  }

 private:
  void expand(std::uint64_t cand, int size) {
    std::vector<int> order;
    std::vector<int> colour;
    std::uint64_t uncoloured = cand;
    for (int k = 1; uncoloured != 0; ++k) {
      std::uint64_t q = uncoloured;
      while (q != 0) {
        int v = std::countr_zero(q);
        q &= ~(std::uint64_t{1} << v);
        q &= ~adj_[v];
        uncoloured &= ~(std::uint64_t{1} << v);
        order.push_back(v);
        colour.push_back(k);
      }
    }
    for (int i = static_cast<int>(order.size()) - 1; i >= 0; --i) {
      if (size + colour[i] <= best_) return;
      const int v = order[i];
      const std::uint64_t next = cand & adj_[v];
      if (next == 0) {
        best_ = std::max(best_, size + 1);
      } else {
        expand(next, size + 1);
      }
      cand &= ~(std::uint64_t{1} << v);
    }
  }

  std::vector<std::uint64_t> adj_;
  int best_ = 0;
};

}  // namespace

int clique_number(const Graph& g) {
  const int n = g.order();
  if (n > 64) {
    throw SpexError(ErrorKind::CapacityExceeded, "clique_number supports n <= 64");
  }
  const std::uint64_t all = n == 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << n) - 1;
  return CliqueSearch(g).run(all);
}

}  // namespace spexlab
