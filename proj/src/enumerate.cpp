#include "spexlab/enumerate.hpp"

#include <Eigen/Dense>
#include <algorithm>
#include <atomic>
#include <bit>
#include <cmath>
#include <mutex>
#include <set>
#include <thread>

#include "spexlab/canon.hpp"
#include "spexlab/error.hpp"

namespace spexlab {

namespace {

using Certificate = std::vector<std::uint64_t>;

Certificate certificate_of(const Graph& g) { return canonical_labeling(g).certificate; }

void check_generation_order(int n) {
  if (n < 1 || n > kMaxGenerationOrder) {
    throw SpexError(ErrorKind::CapacityExceeded,
                    "full generation supports 1 <= n <= " + std::to_string(kMaxGenerationOrder));
  }
}

}  // namespace

void for_each_child(const Graph& parent, const std::function<void(const Graph&)>& visit) {
  const int m = parent.order();
  const int n = m + 1;
  check_generation_order(n);
  const auto parent_degree = parent.degrees();
  const Certificate parent_cert = certificate_of(parent);
  const auto parent_edges = parent.edges();
  std::set<Certificate> seen;

  for (std::uint32_t subset = 0; subset < (1U << m); ++subset) {
    // The canonical last vertex always has maximum degree, so the new
    // vertex must too.
    const int new_degree = std::popcount(subset);
    bool max_degree = true;
    for (int u = 0; u < m && max_degree; ++u) {
      max_degree = parent_degree[u] + static_cast<int>((subset >> u) & 1U) <= new_degree;
    }
    if (!max_degree) continue;

    GraphBuilder b(n);
    for (auto [x, y] : parent_edges) b.add_edge(x, y);
    for (int u = 0; u < m; ++u)
      if ((subset >> u) & 1U) b.add_edge(u, m);
    Graph child = std::move(b).build();

    auto lab = canonical_labeling(child);
    const int last = lab.order[n - 1];
    const bool accepted = last == m || lab.orbit_min[last] == lab.orbit_min[m] ||
                          certificate_of(remove_vertex(child, last)) == parent_cert;
    if (!accepted) continue;
    if (seen.insert(std::move(lab.certificate)).second) visit(child);
  }
}

std::vector<Graph> generation_parents(int n) {
  check_generation_order(n);
  if (n == 1) return {};
  return generate_graphs(n - 1);
}

void for_each_graph(int n, const std::function<void(const Graph&)>& visit) {
  check_generation_order(n);
  if (n == 1) {
    visit(Graph(1));
    return;
  }
  for (const auto& parent : generation_parents(n)) for_each_child(parent, visit);
}

std::vector<Graph> generate_graphs(int n) {
  std::vector<Graph> out;
  for_each_graph(n, [&](const Graph& g) { out.push_back(g); });
  return out;
}

std::vector<Graph> generate_graphs_by_dedup(int n) {
  if (n < 1 || n > 7) throw SpexError(ErrorKind::CapacityExceeded, "dedup generation supports 1 <= n <= 7");
  std::vector<std::pair<int, int>> pairs;
  for (int j = 1; j < n; ++j)
    for (int i = 0; i < j; ++i) pairs.emplace_back(i, j);
  std::set<Certificate> seen;
  std::vector<Graph> out;
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << pairs.size()); ++mask) {
    GraphBuilder b(n);
    for (std::size_t k = 0; k < pairs.size(); ++k)
      if ((mask >> k) & 1U) b.add_edge(pairs[k].first, pairs[k].second);
    Graph g = std::move(b).build();
    if (seen.insert(certificate_of(g)).second) out.push_back(std::move(g));
  }
  return out;
}

std::vector<Graph> generate_dense_graphs(int n, int max_missing_edges) {
  if (n < 1 || n > 64) throw SpexError(ErrorKind::CapacityExceeded, "dense generation supports 1 <= n <= 64");
  const int pairs = n * (n - 1) / 2;
  const int budget = std::min(std::max(max_missing_edges, 0), pairs);
  // Level e holds the complements with exactly e edges.
  std::vector<Graph> level{Graph(n)};
  std::vector<Graph> out{complete_graph(n)};
  for (int e = 1; e <= budget; ++e) {
    std::set<Certificate> seen;
    std::vector<Graph> next;
    for (const auto& h : level) {
      for (int j = 1; j < n; ++j) {
        for (int i = 0; i < j; ++i) {
          if (h.has_edge(i, j)) continue;
          Graph grown = GraphBuilder(h).add_edge(i, j).build();
          if (seen.insert(certificate_of(grown)).second) next.push_back(std::move(grown));
        }
      }
    }
    for (const auto& h : next) out.push_back(complement(h));
    level = std::move(next);
  }
  return out;
}

Objective parse_objective(const std::string& text) {
  if (text == "edges") return Objective::EdgeCount;
  if (text == "lambda") return Objective::AdjSpectralRadius;
  if (text == "q") return Objective::QSpectralRadius;
  throw SpexError(ErrorKind::InvalidParameter, "unknown objective '" + text + "'");
}

std::string to_string(Objective objective) {
  switch (objective) {
    case Objective::EdgeCount: return "edges";
    case Objective::AdjSpectralRadius: return "lambda";
    case Objective::QSpectralRadius: return "q";
  }
  return "?";
}

double objective_value(const Graph& g, Objective objective, const SolverSettings& solver) {
  switch (objective) {
    case Objective::EdgeCount: return g.edge_count();
    case Objective::AdjSpectralRadius: return dominant_eigenpair(g, MatrixKind::adjacency(), solver).value;
    case Objective::QSpectralRadius: return dominant_eigenpair(g, MatrixKind::signless_laplacian(), solver).value;
  }
  return 0.0;
}

double dense_spectral_radius(const Graph& g, MatrixKind kind) {
  const int n = g.order();
  Eigen::MatrixXd m = Eigen::MatrixXd::Zero(n, n);
  for (int v = 0; v < n; ++v) {
    m(v, v) = kind.diagonal_weight() * g.degree(v);
    g.for_each_neighbor(v, [&](int u) { m(v, u) = kind.offdiagonal_weight(); });
  }
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver(m, Eigen::EigenvaluesOnly);
  return solver.eigenvalues().maxCoeff();
}

namespace {

struct Candidate {
  Graph graph;
  double score;
};

struct PartialBest {
  double best = -1.0;
  std::vector<Candidate> near;
  std::uint64_t examined = 0;
  std::uint64_t pruned = 0;
};

class Evaluator {
 public:
  Evaluator(const Graph& pattern, Objective objective, const SearchOptions& options)
      : pattern_(pattern), objective_(objective), options_(options) {}

  void consider(const Graph& g, PartialBest& acc) const {
    ++acc.examined;
    const double tol = options_.tie_tolerance;
    const bool dominated = !sorted_degree_dominance(g, pattern_);
    if (dominated) ++acc.pruned;
    const double score = objective_value(g, objective_, options_.solver);
    if (score < acc.best - tol) return;
    // Only graphs that could enter the candidate set pay for containment.
    if (!dominated) {
      const auto r = contains_spanning(g, pattern_, options_.embed);
      if (r.status == Containment::Unknown) {
        throw SpexError(ErrorKind::CapacityExceeded, "containment budget exhausted on " + std::to_string(g.order()) +
                                                         "-vertex graph");
      }
      if (r.found()) return;
    }
    if (score > acc.best) {
      acc.best = score;
      std::erase_if(acc.near, [&](const Candidate& c) { return c.score < acc.best - tol; });
    }
    acc.near.push_back({g, score});
  }

 private:
  const Graph& pattern_;
  Objective objective_;
  const SearchOptions& options_;
};

// Runs `work(i, acc)` for every partition and merges in partition order.
PartialBest run_partitions(std::size_t count, int workers,
                           const std::function<void(std::size_t, PartialBest&)>& work) {
  std::vector<PartialBest> parts(count);
  std::atomic<std::size_t> next{0};
  std::exception_ptr failure;
  std::mutex failure_mutex;
  auto worker = [&] {
    for (std::size_t i = next++; i < count; i = next++) {
      try {
        work(i, parts[i]);
      } catch (...) {
        std::lock_guard lock(failure_mutex);
        if (!failure) failure = std::current_exception();
        next = count;
      }
    }
  };
  const int threads = std::max(1, workers);
  if (threads == 1) {
    worker();
  } else {
    std::vector<std::thread> pool;
    for (int t = 0; t < threads; ++t) pool.emplace_back(worker);
    for (auto& t : pool) t.join();
  }
  if (failure) std::rethrow_exception(failure);

  PartialBest merged;
  for (auto& p : parts) {
    merged.examined += p.examined;
    merged.pruned += p.pruned;
    merged.best = std::max(merged.best, p.best);
  }
  for (auto& p : parts)
    for (auto& c : p.near) merged.near.push_back(std::move(c));
  return merged;
}

SearchOutcome finish(PartialBest merged, int n, const FamilySpec& family, const Graph& pattern, Objective objective,
                     const SearchOptions& options) {
  if (merged.near.empty()) {
    throw SpexError(ErrorKind::EmptyFeasibleSet, "no F-free graph found for " + to_string(family));
  }
  SearchOutcome out;
  out.n = n;
  out.family = family;
  out.objective = objective;
  out.best_value = merged.best;
  out.graphs_examined = merged.examined;
  out.graphs_pruned = merged.pruned;
  out.tie_tolerance = options.tie_tolerance;

  for (const auto& c : merged.near) {
    if (c.score < merged.best - options.tie_tolerance) continue;
    if (!contains_spanning(c.graph, pattern, options.embed).absent()) {
      throw SpexError(ErrorKind::InternalAssertion, "witness failed F-freeness re-verification");
    }
    double rescored = c.graph.edge_count();
    if (objective == Objective::AdjSpectralRadius) {
      rescored = dense_spectral_radius(c.graph, MatrixKind::adjacency());
    } else if (objective == Objective::QSpectralRadius) {
      rescored = dense_spectral_radius(c.graph, MatrixKind::signless_laplacian());
    }
    if (std::abs(rescored - c.score) > 1e-8 * std::max(1.0, c.score)) {
      throw SpexError(ErrorKind::InternalAssertion, "witness score disagrees with the dense eigensolver");
    }
    out.witnesses.push_back(canonical_form(c.graph));
  }
  std::sort(out.witnesses.begin(), out.witnesses.end());
  out.witnesses.erase(std::unique(out.witnesses.begin(), out.witnesses.end()), out.witnesses.end());
  return out;
}

Graph pattern_for(int n, const FamilySpec& family) {
  Graph pattern = build(family);
  if (pattern.order() != n) {
    throw SpexError(ErrorKind::InvalidParameter, "family " + to_string(family) + " has order " +
                                                     std::to_string(pattern.order()) + ", search order is " +
                                                     std::to_string(n));
  }
  return pattern;
}

}  // namespace

SearchOutcome search_extremal(int n, const FamilySpec& family, Objective objective, const SearchOptions& options) {
  const Graph pattern = pattern_for(n, family);
  const Evaluator eval(pattern, objective, options);
  if (options.dense_mode) {
    const int budget = options.max_missing_edges < 0 ? 2 * n : options.max_missing_edges;
    const auto graphs = generate_dense_graphs(n, budget);
    auto merged = run_partitions(graphs.size(), options.workers,
                                 [&](std::size_t i, PartialBest& acc) { eval.consider(graphs[i], acc); });
    return finish(std::move(merged), n, family, pattern, objective, options);
  }
  check_generation_order(n);
  if (n == 1) {
    PartialBest acc;
    eval.consider(Graph(1), acc);
    return finish(std::move(acc), n, family, pattern, objective, options);
  }
  const auto parents = generation_parents(n);
  auto merged = run_partitions(parents.size(), options.workers, [&](std::size_t i, PartialBest& acc) {
    for_each_child(parents[i], [&](const Graph& g) { eval.consider(g, acc); });
  });
  return finish(std::move(merged), n, family, pattern, objective, options);
}

SearchOutcome search_extremal_in(const std::vector<Graph>& graphs, const FamilySpec& family, Objective objective,
                                 const SearchOptions& options) {
  if (graphs.empty()) throw SpexError(ErrorKind::InvalidParameter, "empty graph list");
  const int n = graphs.front().order();
  for (const auto& g : graphs) {
    if (g.order() != n) throw SpexError(ErrorKind::OrderMismatch, "graph list mixes orders");
  }
  const Graph pattern = pattern_for(n, family);
  const Evaluator eval(pattern, objective, options);
  auto merged = run_partitions(graphs.size(), options.workers,
                               [&](std::size_t i, PartialBest& acc) { eval.consider(graphs[i], acc); });
  return finish(std::move(merged), n, family, pattern, objective, options);
}

}  // namespace spexlab
