#include "spexlab/embed.hpp"

#include <algorithm>
#include <bit>
#include <functional>
#include <numeric>

#include "spexlab/error.hpp"
#include "spexlab/matching.hpp"

namespace spexlab {

namespace {

void check_orders(const Graph& host, const Graph& pattern) {
  if (host.order() != pattern.order()) {
    throw SpexError(ErrorKind::OrderMismatch, "host has " + std::to_string(host.order()) +
                                                  " vertices, pattern has " + std::to_string(pattern.order()));
  }
}

// Classes of pattern vertices sharing a closed (or else open)
// neighbourhood; -1 for vertices without a twin.
std::vector<int> twin_classes(const Graph& pattern) {
  const int n = pattern.order();
  std::vector<int> cls(n, -1);
  int next = 0;
  for (bool closed : {true, false}) {
    for (int u = 0; u < n; ++u) {
      if (cls[u] >= 0) continue;
      for (int v = u + 1; v < n; ++v) {
        if (cls[v] >= 0 || pattern.has_edge(u, v) != closed) continue;
        bool same = true;
        for (int x = 0; x < n && same; ++x) {
          if (x != u && x != v) same = pattern.has_edge(u, x) == pattern.has_edge(v, x);
        }
        if (!same) continue;
        if (cls[u] < 0) cls[u] = next++;
        cls[v] = cls[u];
      }
    }
  }
  return cls;
}

class SpanningSearch {
 public:
  SpanningSearch(const Graph& host, const Graph& pattern, const EmbedOptions& options)
      : host_(host), pattern_(pattern), n_(host.order()), words_(host.words()), cap_(options.max_expansions),
        pattern_degree_(pattern.degrees()), twin_class_(twin_classes(pattern)) {}

  ContainmentResult run() {
    ContainmentResult result;
    if (!sorted_degree_dominance(host_, pattern_)) {
      result.status = Containment::Absent;
      return result;
    }
    const auto host_degree = host_.degrees();
    std::vector<std::uint64_t> domains(static_cast<std::size_t>(n_) * words_, 0);
    for (int f = 0; f < n_; ++f)
      for (int g = 0; g < n_; ++g)
        if (host_degree[g] >= pattern_degree_[f]) set(domains, f, g);

    std::vector<int> mapping(n_, -1);
    const Outcome outcome = descend(domains, mapping, 0);
    result.expansions = expansions_;
    if (outcome == Outcome::Found) {
      result.status = Containment::Found;
      result.witness = EmbeddingWitness{std::move(mapping)};
    } else {
      result.status = outcome == Outcome::Exhausted ? Containment::Absent : Containment::Unknown;
    }
    return result;
  }

 private:
  enum class Outcome { Found, Exhausted, Aborted };

  std::uint64_t* dom(std::vector<std::uint64_t>& d, int f) const { return d.data() + static_cast<std::size_t>(f) * words_; }
  const std::uint64_t* dom(const std::vector<std::uint64_t>& d, int f) const {
    return d.data() + static_cast<std::size_t>(f) * words_;
  }
  void set(std::vector<std::uint64_t>& d, int f, int g) const { dom(d, f)[g >> 6] |= std::uint64_t{1} << (g & 63); }

  int count(const std::vector<std::uint64_t>& d, int f) const {
    int c = 0;
    const auto* p = dom(d, f);
    for (int w = 0; w < words_; ++w) c += std::popcount(p[w]);
    return c;
  }

  // Twins are interchangeable, so their images are forced into index order.
  void keep_order(std::uint64_t* p, int g, bool above) const {
    for (int x = 0; x < words_; ++x) {
      const int lo = x * 64;
      std::uint64_t below_mask;  // bits for hosts < g within this word
      if (g <= lo) {
        below_mask = 0;
      } else if (g >= lo + 64) {
        below_mask = ~std::uint64_t{0};
      } else {
        below_mask = (std::uint64_t{1} << (g - lo)) - 1;
      }
      p[x] &= above ? ~below_mask : below_mask;
    }
  }

  // Unassigned pattern vertices must be able to reach that many hosts.
  bool hall_ok(const std::vector<std::uint64_t>& d, const std::vector<int>& mapping, int assigned) const {
    std::vector<std::uint64_t> acc(words_, 0);
    for (int f = 0; f < n_; ++f) {
      if (mapping[f] >= 0) continue;
      const auto* p = dom(d, f);
      for (int w = 0; w < words_; ++w) acc[w] |= p[w];
    }
    int reach = 0;
    for (auto w : acc) reach += std::popcount(w);
    return reach >= n_ - assigned;
  }

  Outcome descend(const std::vector<std::uint64_t>& domains, std::vector<int>& mapping, int assigned) {
    if (assigned == n_) return Outcome::Found;
    if (!hall_ok(domains, mapping, assigned)) return Outcome::Exhausted;

    int pick = -1;
    int pick_size = 0;
    for (int f = 0; f < n_; ++f) {
      if (mapping[f] >= 0) continue;
      const int size = count(domains, f);
      if (size == 0) return Outcome::Exhausted;
      if (pick < 0 || size < pick_size ||
          (size == pick_size && pattern_degree_[f] > pattern_degree_[pick])) {
        pick = f;
        pick_size = size;
      }
    }

    const auto* candidates = dom(domains, pick);
    std::vector<std::uint64_t> next(domains.size());
    for (int w = 0; w < words_; ++w) {
      std::uint64_t bits = candidates[w];
      while (bits != 0) {
        const int g = w * 64 + std::countr_zero(bits);
        bits &= bits - 1;
        if (++expansions_ > cap_) return Outcome::Aborted;

        next = domains;
        const auto host_row = host_.row(g);
        bool wiped = false;
        for (int f = 0; f < n_ && !wiped; ++f) {
          if (mapping[f] >= 0 || f == pick) continue;
          auto* p = dom(next, f);
          p[g >> 6] &= ~(std::uint64_t{1} << (g & 63));
          if (pattern_.has_edge(pick, f)) {
            for (int x = 0; x < words_; ++x) p[x] &= host_row[x];
          }
          if (twin_class_[f] >= 0 && twin_class_[f] == twin_class_[pick]) keep_order(p, g, f > pick);
          bool empty = true;
          for (int x = 0; x < words_; ++x) empty = empty && p[x] == 0;
          wiped = empty;
        }
        if (wiped) continue;
        mapping[pick] = g;
        const Outcome o = descend(next, mapping, assigned + 1);
        if (o != Outcome::Exhausted) return o;
        mapping[pick] = -1;
      }
    }
    return Outcome::Exhausted;
  }

  const Graph& host_;
  const Graph& pattern_;
  int n_;
  int words_;
  std::uint64_t cap_;
  std::uint64_t expansions_ = 0;
  std::vector<int> pattern_degree_;
  std::vector<int> twin_class_;
};

}  // namespace

ContainmentResult contains_spanning(const Graph& host, const Graph& pattern, const EmbedOptions& options) {
  check_orders(host, pattern);
  return SpanningSearch(host, pattern, options).run();
}

std::optional<EmbeddingWitness> contains_spanning_bruteforce(const Graph& host, const Graph& pattern) {
  check_orders(host, pattern);
  const int n = host.order();
  if (n > 8) throw SpexError(ErrorKind::CapacityExceeded, "brute-force containment supports n <= 8");
  const auto edges = pattern.edges();
  std::vector<int> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  do {
    const bool ok =
        std::all_of(edges.begin(), edges.end(), [&](const auto& e) { return host.has_edge(perm[e.first], perm[e.second]); });
    if (ok) return EmbeddingWitness{perm};
  } while (std::next_permutation(perm.begin(), perm.end()));
  return std::nullopt;
}

bool verify_witness(const Graph& host, const Graph& pattern, const EmbeddingWitness& witness) {
  const int n = pattern.order();
  if (host.order() != n || static_cast<int>(witness.mapping.size()) != n) return false;
  std::vector<bool> hit(n, false);
  for (int v : witness.mapping) {
    if (v < 0 || v >= n || hit[v]) return false;
    hit[v] = true;
  }
  for (auto [u, v] : pattern.edges())
    if (!host.has_edge(witness.mapping[u], witness.mapping[v])) return false;
  return true;
}

bool sorted_degree_dominance(const Graph& host, const Graph& pattern) {
  check_orders(host, pattern);
  auto hd = host.degrees();
  auto pd = pattern.degrees();
  std::sort(hd.begin(), hd.end(), std::greater<>());
  std::sort(pd.begin(), pd.end(), std::greater<>());
  for (std::size_t i = 0; i < hd.size(); ++i)
    if (pd[i] > hd[i]) return false;
  return true;
}

bool has_factor(const Graph& g, FactorQuery q) {
  if (q.a < 0 || q.b < q.a) {
    throw SpexError(ErrorKind::InvalidQuery, "factor query needs 0 <= a <= b");
  }
  const int n = g.order();
  const auto deg = g.degrees();
  for (int v = 0; v < n; ++v)
    if (deg[v] < q.a) return false;

  // port[v][i] stands for the edge from v to its i-th neighbour.
  std::vector<std::vector<int>> port(n);
  int next_id = 0;
  for (int v = 0; v < n; ++v) {
    port[v].resize(deg[v]);
    for (int& p : port[v]) p = next_id++;
  }
  const int ports = next_id;
  std::vector<std::vector<int>> mandatory(n);
  std::vector<std::vector<int>> optional(n);
  int optional_total = 0;
  int mandatory_total = 0;
  for (int v = 0; v < n; ++v) {
    const int m = std::max(0, deg[v] - q.b);
    const int o = deg[v] - q.a - m;
    for (int i = 0; i < m; ++i) mandatory[v].push_back(next_id++);
    for (int i = 0; i < o; ++i) optional[v].push_back(next_id++);
    mandatory_total += m;
    optional_total += o;
  }
  const int filler = optional_total + ((ports + mandatory_total) % 2);
  const int filler_start = next_id;
  next_id += filler;

  std::vector<std::vector<int>> adj(next_id);
  auto link = [&](int x, int y) {
    adj[x].push_back(y);
    adj[y].push_back(x);
  };
  std::vector<std::vector<int>> nbrs(n);
  for (int v = 0; v < n; ++v) nbrs[v] = g.neighbors(v);
  for (int v = 0; v < n; ++v) {
    for (std::size_t i = 0; i < nbrs[v].size(); ++i) {
      const int u = nbrs[v][i];
      if (v < u) {
        const auto j = std::lower_bound(nbrs[u].begin(), nbrs[u].end(), v) - nbrs[u].begin();
        link(port[v][i], port[u][j]);
      }
      for (int m : mandatory[v]) link(port[v][i], m);
      for (int o : optional[v]) link(port[v][i], o);
    }
  }
  for (int f = filler_start; f < next_id; ++f) {
    for (int v = 0; v < n; ++v)
      for (int o : optional[v]) link(f, o);
    for (int h = f + 1; h < next_id; ++h) link(f, h);
  }
  return has_perfect_matching(adj);
}

}  // namespace spexlab
