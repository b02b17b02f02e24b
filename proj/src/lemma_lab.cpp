#include "spexlab/lemma_lab.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <cstdio>
#include <limits>
#include <numeric>
#include <string>

#include "spexlab/embed.hpp"
#include "spexlab/enumerate.hpp"
#include "spexlab/error.hpp"
#include "spexlab/family.hpp"

namespace spexlab {

namespace {

constexpr const char* kAsymptotic = "asymptotic claim, evaluated at finite n";

double choose2(double n) { return n * (n - 1.0) / 2.0; }

template <class Less>
int argmin_index(int n, Less less) {
  int best = 0;
  for (int v = 1; v < n; ++v) {
    if (less(v, best)) best = v;
  }
  return best;
}

void require_chain_inputs(const Graph& g, int delta_f) {
  if (g.order() < 3) throw SpexError(ErrorKind::InvalidParameter, "lemma chains need n >= 3");
  if (delta_f < 1) throw SpexError(ErrorKind::InvalidParameter, "deltaF must be at least 1");
}

int min_degree_except(const Graph& g, int w) {
  int best = g.order();
  for (int v = 0; v < g.order(); ++v) {
    if (v != w) best = std::min(best, g.degree(v));
  }
  return best;
}

std::string regime_note(int n, int delta_f, const char* claim) {
  std::string note = std::string(claim) + "; " + kAsymptotic;
  // Thresholds in the chains assume 2 deltaF <= sqrt(n)/20.
  if (40.0 * delta_f > std::sqrt(static_cast<double>(n))) note += "; outside the guaranteed regime";
  return note;
}

}  // namespace

std::vector<LemmaReport> check_adjacency_chain(const Graph& g, int delta_f, const SolverSettings& solver) {
  require_chain_inputs(g, delta_f);
  const int n = g.order();
  const double dn = n;
  const LemmaInputs in{n, delta_f, std::nullopt};
  const auto pair = dominant_eigenpair(g, MatrixKind::adjacency(), solver);
  const auto& x = pair.vector;
  const int delta = degree_summary(g).min_degree;
  const int w = argmin_index(n, [&](int a, int b) { return g.degree(a) < g.degree(b); });
  const double x_max = *std::max_element(x.begin(), x.end());
  const double l1 = std::accumulate(x.begin(), x.end(), 0.0);
  double x_rest = std::numeric_limits<double>::infinity();
  for (int v = 0; v < n; ++v) {
    if (v != w) x_rest = std::min(x_rest, x[v]);
  }
  const Graph rest = remove_vertex(g, w);

  std::vector<LemmaReport> out;
  out.push_back(make_lemma_report(LemmaId::L3_1, in, pair.value, Relation::AtLeast, dn - 2.0, "lambda(G) >= n-2"));
  out.push_back(make_lemma_report(LemmaId::L3_2, in, g.edge_count(), Relation::AtLeast,
                                  choose2(dn - 1.0) + delta / 2.0, "m >= C(n-1,2) + delta(G)/2"));
  out.push_back(make_lemma_report(LemmaId::L3_3, in, delta, Relation::AtLeast, delta_f - 1.0,
                                  "left inequality: deltaF - 1 <= delta(G)"));
  out.push_back(make_lemma_report(LemmaId::L3_3, in, delta, Relation::AtMost, 2.0 * (delta_f - 1.0),
                                  "right inequality: delta(G) <= 2(deltaF - 1)"));
  out.push_back(make_lemma_report(LemmaId::L3_4, in, min_degree_except(g, w), Relation::AtLeast,
                                  dn - 2.0 - delta, "min over v != w of d(v) >= n-2-delta(G)"));
  out.push_back(make_lemma_report(LemmaId::L3_5, in, x_max, Relation::AtMost, std::sqrt(dn) / (dn - 1.0),
                                  regime_note(n, delta_f, "x_max <= sqrt(n)/(n-1)")));
  out.push_back(make_lemma_report(LemmaId::L3_6, in, l1, Relation::AtLeast, std::sqrt(dn - 1.0),
                                  regime_note(n, delta_f, "|x|_1 >= sqrt(n-1)")));
  out.push_back(make_lemma_report(LemmaId::L3_7, in, x_rest, Relation::Greater, 9.0 / (10.0 * std::sqrt(dn)),
                                  regime_note(n, delta_f, "min over v != w of x_v > 9/(10 sqrt n)")));
  out.push_back(make_lemma_report(LemmaId::L3_8, in, x[w], Relation::Less, 1.0 / (19.0 * dn),
                                  regime_note(n, delta_f, "x_w < 1/(19n)")));
  out.push_back(make_lemma_report(LemmaId::L3_9, in, rest.edge_count(), Relation::Equal, choose2(dn - 1.0),
                                  is_complete(rest) ? "G - w is complete" : "G - w is not complete"));
  return out;
}

QChainResult check_q_chain(const Graph& g, int delta_f, double epsilon, const SolverSettings& solver) {
  if (!(epsilon > 0.0 && epsilon < 1.0 / 7.0)) {
    throw SpexError(ErrorKind::InvalidEpsilon, "epsilon must lie in (0, 1/7)");
  }
  require_chain_inputs(g, delta_f);
  const int n = g.order();
  const double dn = n;
  const double sn = std::sqrt(dn);
  const LemmaInputs in{n, delta_f, epsilon};
  const auto pair = dominant_eigenpair(g, MatrixKind::signless_laplacian(), solver);
  const auto& x = pair.vector;
  const int delta = degree_summary(g).min_degree;
  const int w = argmin_index(n, [&](int a, int b) { return x[a] < x[b]; });
  const double x_max = *std::max_element(x.begin(), x.end());
  const double l1 = std::accumulate(x.begin(), x.end(), 0.0);

  QChainResult result;
  auto& out = result.reports;
  out.push_back(make_lemma_report(LemmaId::L4_1, in, pair.value, Relation::AtLeast,
                                  2.0 * (dn - 2.0) + (delta_f - 1.0) / (dn - 1.0),
                                  "q(G) >= 2(n-2) + (deltaF-1)/(n-1)"));
  out.push_back(make_lemma_report(LemmaId::L4_2, in, g.edge_count(), Relation::AtLeast,
                                  choose2(dn - 1.0) + (delta_f - 1.0) / 2.0, "m >= C(n-1,2) + (deltaF-1)/2"));
  out.push_back(make_lemma_report(LemmaId::L4_3, in, delta, Relation::AtLeast, delta_f - 1.0,
                                  "delta(G) >= deltaF - 1"));
  out.push_back(make_lemma_report(LemmaId::L4_4, in, x_max, Relation::AtMost, sn / (dn - 2.0),
                                  regime_note(n, delta_f, "x_max <= sqrt(n)/(n-2)")));
  out.push_back(make_lemma_report(LemmaId::L4_5, in, l1, Relation::AtLeast, std::sqrt(dn - 2.0),
                                  regime_note(n, delta_f, "|x|_1 >= sqrt(n-2)")));

  double worst_margin = std::numeric_limits<double>::infinity();
  int worst_vertex = 0;
  for (int v = 0; v < n; ++v) {
    const double d = g.degree(v);
    const double c = d / dn;
    const double predicted = c / ((2.0 - c) * sn);
    const double lower = predicted - 3.0 / (sn * (dn - 2.0));
    const double upper = sn * d / ((dn - 2.0) * (2.0 * dn - 4.0 - d));
    const double margin = std::min(x[v] - lower, upper - x[v]);
    if (margin < worst_margin) {
      worst_margin = margin;
      worst_vertex = v;
    }
    result.entries.push_back({v, c, predicted, x[v], std::abs(x[v] - predicted) * sn});
  }
  out.push_back(make_lemma_report(
      LemmaId::L4_6, in, worst_margin, Relation::AtLeast, 0.0,
      "worst margin of the finite-n entry sandwich, tightest at vertex " + std::to_string(worst_vertex) +
          "; the o(1/sqrt n) term is reported per vertex as deviation"));

  int l_size = 0;
  for (int v = 0; v < n; ++v) {
    if (g.degree(v) > (1.0 - epsilon) * dn) ++l_size;
  }
  auto& part = result.partition;
  part.epsilon = epsilon;
  part.L_size = l_size;
  part.S_size = n - l_size;
  part.bound_3_over_eps = 3.0 / epsilon;
  part.within_bound = part.S_size < part.bound_3_over_eps;
  out.push_back(make_lemma_report(LemmaId::L4_7, in, part.S_size, Relation::Less, part.bound_3_over_eps,
                                  regime_note(n, delta_f, "|S| < 3/eps")));
  out.push_back(make_lemma_report(LemmaId::L4_8, in, g.degree(w), Relation::Less,
                                  delta_f + 14.0 / (epsilon * epsilon),
                                  regime_note(n, delta_f, "d(w) < deltaF + 14/eps^2, w of minimum entry")));
  const Graph rest = remove_vertex(g, w);
  out.push_back(make_lemma_report(LemmaId::L4_9, in, rest.edge_count(), Relation::Equal, choose2(dn - 1.0),
                                  is_complete(rest) ? "G - w is complete" : "G - w is not complete"));
  return result;
}

namespace {

std::vector<int> case_ints(std::string_view body, std::size_t count, std::string_view text) {
  std::vector<int> out;
  std::size_t start = 0;
  while (start <= body.size()) {
    std::size_t end = body.find(',', start);
    if (end == std::string_view::npos) end = body.size();
    auto field = body.substr(start, end - start);
    int value = 0;
    auto [ptr, ec] = std::from_chars(field.data(), field.data() + field.size(), value);
    if (field.empty() || ec != std::errc{} || ptr != field.data() + field.size()) {
      throw SpexError(ErrorKind::InvalidParameter, "bad integer in case '" + std::string(text) + "'");
    }
    out.push_back(value);
    start = end + 1;
  }
  if (out.size() != count) {
    throw SpexError(ErrorKind::InvalidParameter,
                    "case '" + std::string(text) + "' expects " + std::to_string(count) + " integers");
  }
  return out;
}

void require_case(bool ok, const char* why) {
  if (!ok) throw SpexError(ErrorKind::InvalidParameter, why);
}

bool avoids(const Graph& host, const Graph& pattern) {
  const auto r = contains_spanning(host, pattern);
  if (r.status == Containment::Unknown) {
    throw SpexError(ErrorKind::CapacityExceeded, "containment query exceeded the expansion cap");
  }
  return r.absent();
}

std::string fmt(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.12g", v);
  return buf;
}

LemmaReport count_report(const Graph& h, int delta_f) {
  const int n = h.order();
  return make_lemma_report(LemmaId::T1_4_count, {n, delta_f, std::nullopt}, h.edge_count(), Relation::Equal,
                           choose2(n - 1.0) + delta_f - 1.0, "e(H) = C(n-1,2) + deltaF - 1");
}

LemmaReport threshold_report(LemmaId id, const Graph& h, int delta_f, double best, bool searched, const char* what) {
  const int n = h.order();
  const double lambda = dense_spectral_radius(h, MatrixKind::adjacency());
  std::string note = std::string("lambda(H) recorded as threshold for ") + what;
  if (!searched) {
    return make_lemma_report(id, {n, delta_f, std::nullopt}, lambda, Relation::Equal, lambda,
                             note + "; no exhaustive cross-check at this n");
  }
  note += "; compared with the exhaustive maximum " + fmt(best) + " (small n, outside the guaranteed regime)";
  return make_lemma_report(id, {n, delta_f, std::nullopt}, lambda, Relation::AtLeast, best, note);
}

double exhaustive_lambda(int n, const FamilySpec& family, const CorollaryOptions& options) {
  SearchOptions so;
  so.workers = options.workers;
  so.solver = options.solver;
  return search_extremal(n, family, Objective::AdjSpectralRadius, so).best_value;
}

std::vector<LemmaReport> run_free_case(LemmaId id, const FamilySpec& family, int h_k, const CorollaryOptions& options,
                                       const char* what) {
  validate(family);
  const Graph f = build(family);
  const int n = f.order();
  const int delta_f = degree_summary(f).min_degree;
  const Graph h = extremal_h(n, h_k);
  const bool free = avoids(h, f);
  std::vector<LemmaReport> out;
  out.push_back(make_lemma_report(id, {n, delta_f, std::nullopt}, free ? 1.0 : 0.0, Relation::Equal, 1.0,
                                  std::string("H is ") + (free ? "" : "not ") + what + "-free (embed)"));
  const bool searched = n <= options.exhaustive_max_n && n <= kMaxGenerationOrder;
  const double best = searched ? exhaustive_lambda(n, family, options) : 0.0;
  out.push_back(threshold_report(id, h, delta_f, best, searched, what));
  out.push_back(count_report(h, delta_f));
  return out;
}

std::vector<LemmaReport> run_factor_case(const FactorCase& c, const CorollaryOptions& options) {
  const Graph h = extremal_h(c.n, c.a);
  const FactorQuery q{c.a, c.b};
  const bool factor = has_factor(h, q);
  std::vector<LemmaReport> out;
  out.push_back(make_lemma_report(LemmaId::C5_3_factor, {c.n, c.a, std::nullopt}, factor ? 1.0 : 0.0,
                                  Relation::Equal, 0.0,
                                  std::string("H_{n,a} ") + (factor ? "has" : "has no") + " [a,b]-factor"));
  const bool searched = c.n <= options.exhaustive_max_n && c.n <= kMaxGenerationOrder;
  double best = 0.0;
  if (searched) {
    for_each_graph(c.n, [&](const Graph& g) {
      if (degree_summary(g).min_degree >= c.a && has_factor(g, q)) return;
      best = std::max(best, objective_value(g, Objective::AdjSpectralRadius, options.solver));
    });
  }
  out.push_back(threshold_report(LemmaId::C5_3_factor, h, c.a, best, searched, "graphs without an [a,b]-factor"));
  out.push_back(count_report(h, c.a));
  return out;
}

}  // namespace

CorollaryCase parse_corollary_case(std::string_view text) {
  const auto colon = text.find(':');
  require_case(colon != std::string_view::npos, "corollary case needs '<kind>:<params>'");
  const auto kind = text.substr(0, colon);
  const auto body = text.substr(colon + 1);
  if (kind == "cyclepower") {
    auto v = case_ints(body, 2, text);
    return CyclePowerCase{v[0], v[1]};
  }
  if (kind == "factor") {
    auto v = case_ints(body, 3, text);
    return FactorCase{v[0], v[1], v[2]};
  }
  if (kind == "cliquefactor") {
    auto v = case_ints(body, 2, text);
    return CliqueFactorCase{v[0], v[1]};
  }
  throw SpexError(ErrorKind::InvalidParameter, "unknown corollary case '" + std::string(kind) + "'");
}

std::string to_string(const CorollaryCase& c) {
  if (auto* p = std::get_if<CyclePowerCase>(&c)) {
    return "cyclepower:" + std::to_string(p->n) + "," + std::to_string(p->k);
  }
  if (auto* p = std::get_if<FactorCase>(&c)) {
    return "factor:" + std::to_string(p->n) + "," + std::to_string(p->a) + "," + std::to_string(p->b);
  }
  const auto& p = std::get<CliqueFactorCase>(c);
  return "cliquefactor:" + std::to_string(p.n) + "," + std::to_string(p.r);
}

std::vector<LemmaReport> verify_corollary(const CorollaryCase& c, const CorollaryOptions& options) {
  if (auto* p = std::get_if<CyclePowerCase>(&c)) {
    require_case(p->n >= 3 && p->n <= Graph::kMaxOrder, "cyclepower case needs 3 <= n <= 512");
    require_case(p->k >= 1 && 2 * p->k < p->n, "cyclepower case needs 1 <= k < n/2");
    return run_free_case(LemmaId::C5_1_cyclepower, CyclePower{p->n, p->k}, 2 * p->k, options, "C_n^k");
  }
  if (auto* p = std::get_if<FactorCase>(&c)) {
    require_case(p->n >= 3 && p->n <= Graph::kMaxOrder, "factor case needs 3 <= n <= 512");
    require_case(p->a >= 1 && p->a <= p->b, "factor case needs 1 <= a <= b");
    require_case(p->a <= p->n - 1, "factor case needs a <= n-1");
    return run_factor_case(*p, options);
  }
  const auto& p = std::get<CliqueFactorCase>(c);
  require_case(p.n >= 3 && p.n <= Graph::kMaxOrder, "cliquefactor case needs 3 <= n <= 512");
  require_case(p.r >= 1 && p.r <= p.n - 1, "cliquefactor case needs 1 <= r <= n-1");
  require_case(p.n % (p.r + 1) == 0, "cliquefactor case needs (r+1) | n");
  return run_free_case(LemmaId::C5_5_cliquefactor, CliqueFactor{p.n, p.r}, p.r, options, "(n/(r+1))K_{r+1}");
}

}  // namespace spexlab
