#include "spexlab/canon.hpp"

#include <algorithm>
#include <array>
#include <bit>
#include <climits>
#include <numeric>

#include "spexlab/error.hpp"
#include "spexlab/graph6.hpp"

namespace spexlab {

namespace {

constexpr int kMaxCanon = 64;

// Ordered partition: lab lists the vertices, cell_start marks where a cell
// begins. Cell order is an isomorphism invariant; order inside a cell is not.
struct Partition {
  std::array<int, kMaxCanon> lab{};
  std::array<bool, kMaxCanon + 1> cell_start{};
  int n = 0;

  int cell_end(int start) const noexcept {
    int e = start + 1;
    while (e < n && !cell_start[e]) ++e;
    return e;
  }

  bool discrete() const noexcept {
    for (int i = 0; i < n; ++i)
      if (!cell_start[i]) return false;
    return true;
  }
};

class Refiner {
 public:
  Refiner(const std::vector<std::uint64_t>& adj, int n) : adj_(adj), n_(n) {}

  Partition unit() const {
    Partition p;
    p.n = n_;
    for (int i = 0; i < n_; ++i) p.lab[i] = i;
    p.cell_start[0] = true;
    p.cell_start[n_] = true;
    return p;
  }

  void refine(Partition& p) const {
    bool changed = true;
    while (changed) {
      changed = false;
      for (int s = 0; s < n_; s = p.cell_end(s)) {
        std::uint64_t splitter = 0;
        const int se = p.cell_end(s);
        for (int i = s; i < se; ++i) splitter |= std::uint64_t{1} << p.lab[i];
        for (int c = 0; c < n_; c = p.cell_end(c)) {
          const int ce = p.cell_end(c);
          if (ce - c > 1 && split(p, c, ce, splitter)) changed = true;
        }
      }
    }
  }

  // Splits [begin, end) by neighbour count into `splitter`, ascending.
  bool split(Partition& p, int begin, int end, std::uint64_t splitter) const {
    std::array<int, kMaxCanon> count{};
    bool uniform = true;
    for (int i = begin; i < end; ++i) {
      count[i] = std::popcount(adj_[p.lab[i]] & splitter);
      if (count[i] != count[begin]) uniform = false;
    }
    if (uniform) return false;
    // Insertion sort keeps this allocation free; cells are tiny.
    for (int i = begin + 1; i < end; ++i) {
      const int v = p.lab[i];
      const int k = count[i];
      int j = i - 1;
      while (j >= begin && count[j] > k) {
        p.lab[j + 1] = p.lab[j];
        count[j + 1] = count[j];
        --j;
      }
      p.lab[j + 1] = v;
      count[j + 1] = k;
    }
    for (int i = begin + 1; i < end; ++i)
      if (count[i] != count[i - 1]) p.cell_start[i] = true;
    return true;
  }

 private:
  const std::vector<std::uint64_t>& adj_;
  int n_;
};

class Search {
 public:
  Search(const std::vector<std::uint64_t>& adj, int n) : adj_(adj), n_(n), refiner_(adj, n) {}

  void run() {
    Partition p = refiner_.unit();
    descend(p);
  }

  std::vector<int> best_lab;
  std::vector<std::uint64_t> best_cert;
  std::vector<std::vector<int>> generators;

 private:
  static constexpr int kContinue = INT_MAX;

  int descend(Partition p) {
    refiner_.refine(p);
    if (p.discrete()) return leaf(p);

    int target = -1;
    int target_size = INT_MAX;
    for (int c = 0; c < n_; c = p.cell_end(c)) {
      const int size = p.cell_end(c) - c;
      if (size > 1 && size < target_size) {
        target = c;
        target_size = size;
      }
    }
    const int target_end = target + target_size;
    std::vector<int> candidates(p.lab.begin() + target, p.lab.begin() + target_end);
    std::sort(candidates.begin(), candidates.end());

    const int depth = static_cast<int>(prefix_.size());
    std::vector<int> explored;
    for (int v : candidates) {
      if (equivalent_to_explored(v, explored)) continue;
      explored.push_back(v);
      Partition child = p;
      const auto pos = std::find(child.lab.begin() + target, child.lab.begin() + target_end, v);
      std::rotate(child.lab.begin() + target, pos, pos + 1);
      child.cell_start[target + 1] = true;
      prefix_.push_back(v);
      const int jump = descend(child);
      prefix_.pop_back();
      if (jump < depth) return jump;
    }
    return kContinue;
  }

  // Union-find over the generators that fix the current prefix pointwise.
  bool equivalent_to_explored(int v, const std::vector<int>& explored) const {
    if (explored.empty() || generators.empty()) return false;
    std::array<int, kMaxCanon> parent{};
    std::iota(parent.begin(), parent.begin() + n_, 0);
    auto find = [&](int x) {
      while (parent[x] != x) x = parent[x] = parent[parent[x]];
      return x;
    };
    bool any = false;
    for (const auto& gen : generators) {
      const bool fixes = std::all_of(prefix_.begin(), prefix_.end(), [&](int u) { return gen[u] == u; });
      if (!fixes) continue;
      any = true;
      for (int x = 0; x < n_; ++x) parent[find(x)] = find(gen[x]);
    }
    if (!any) return false;
    const int root = find(v);
    return std::any_of(explored.begin(), explored.end(), [&](int u) { return find(u) == root; });
  }

  int leaf(const Partition& p) {
    std::array<int, kMaxCanon> pos{};
    for (int i = 0; i < n_; ++i) pos[p.lab[i]] = i;
    std::vector<std::uint64_t> cert(n_, 0);
    for (int i = 0; i < n_; ++i) {
      std::uint64_t row = adj_[p.lab[i]];
      while (row != 0) {
        const int u = std::countr_zero(row);
        row &= row - 1;
        cert[i] |= std::uint64_t{1} << pos[u];
      }
    }
    std::vector<int> lab(p.lab.begin(), p.lab.begin() + n_);
    if (best_cert.empty()) {
      first_cert_ = best_cert = std::move(cert);
      first_lab_ = best_lab = std::move(lab);
      first_prefix_ = best_prefix_ = prefix_;
      return kContinue;
    }
    if (cert == first_cert_) return record_automorphism(first_lab_, lab, first_prefix_);
    if (cert == best_cert) return record_automorphism(best_lab, lab, best_prefix_);
    if (cert < best_cert) {
      best_cert = std::move(cert);
      best_lab = std::move(lab);
      best_prefix_ = prefix_;
    }
    return kContinue;
  }

  int record_automorphism(const std::vector<int>& from, const std::vector<int>& to,
                          const std::vector<int>& other_prefix) {
    std::vector<int> gen(n_);
    for (int i = 0; i < n_; ++i) gen[from[i]] = to[i];
    generators.push_back(std::move(gen));
    int lcp = 0;
    while (lcp < static_cast<int>(prefix_.size()) && lcp < static_cast<int>(other_prefix.size()) &&
           prefix_[lcp] == other_prefix[lcp]) {
      ++lcp;
    }
    return lcp;
  }

  const std::vector<std::uint64_t>& adj_;
  int n_;
  Refiner refiner_;
  std::vector<int> prefix_;
  std::vector<std::uint64_t> first_cert_;
  std::vector<int> first_lab_;
  std::vector<int> first_prefix_;
  std::vector<int> best_prefix_;
};

std::vector<std::uint64_t> small_rows(const Graph& g) {
  if (g.order() > kMaxCanon) {
    throw SpexError(ErrorKind::CapacityExceeded, "canonical labeling supports n <= 64");
  }
  std::vector<std::uint64_t> adj(g.order());
  for (int v = 0; v < g.order(); ++v) adj[v] = g.row(v)[0];
  return adj;
}

}  // namespace

CanonicalLabeling canonical_labeling(const Graph& g) {
  const auto adj = small_rows(g);
  const int n = g.order();
  Search search(adj, n);
  search.run();

  CanonicalLabeling out;
  out.order = std::move(search.best_lab);
  out.certificate = std::move(search.best_cert);
  out.generators = std::move(search.generators);
  out.orbit_min.resize(n);
  std::iota(out.orbit_min.begin(), out.orbit_min.end(), 0);
  // Propagate minima until stable; generator lists are short.
  bool changed = true;
  while (changed) {
    changed = false;
    for (const auto& gen : out.generators) {
      for (int v = 0; v < n; ++v) {
        const int a = out.orbit_min[v];
        const int b = out.orbit_min[gen[v]];
        if (a != b) {
          out.orbit_min[v] = out.orbit_min[gen[v]] = std::min(a, b);
          changed = true;
        }
      }
    }
  }
  return out;
}

Graph canonical_graph(const Graph& g) {
  const auto lab = canonical_labeling(g);
  GraphBuilder b(g.order());
  for (int i = 0; i < g.order(); ++i) {
    std::uint64_t row = lab.certificate[i];
    while (row != 0) {
      const int j = std::countr_zero(row);
      row &= row - 1;
      if (i < j) b.add_edge(i, j);
    }
  }
  return std::move(b).build();
}

std::string canonical_form(const Graph& g) { return graph6_encode(canonical_graph(g)); }

std::vector<std::vector<int>> equitable_partition(const Graph& g) {
  const auto adj = small_rows(g);
  Refiner refiner(adj, g.order());
  Partition p = refiner.unit();
  refiner.refine(p);
  std::vector<std::vector<int>> cells;
  for (int c = 0; c < p.n; c = p.cell_end(c)) cells.emplace_back(p.lab.begin() + c, p.lab.begin() + p.cell_end(c));
  return cells;
}

}  // namespace spexlab
