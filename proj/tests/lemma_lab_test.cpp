#include <doctest.h>

#include <cmath>
#include <map>
#include <random>

#include "spexlab/embed.hpp"
#include "spexlab/error.hpp"
#include "spexlab/family.hpp"
#include "spexlab/graph6.hpp"
#include "spexlab/lemma_lab.hpp"
#include "support/oracles.hpp"

using namespace spexlab;

namespace {

const LemmaReport& find(const std::vector<LemmaReport>& rs, LemmaId id, int nth = 0) {
  for (const auto& r : rs)
    if (r.lemma_id == id && nth-- == 0) return r;
  FAIL("missing report");
  return rs.front();
}

}  // namespace

TEST_CASE("adjacency chain examples") {
  const auto rs = check_adjacency_chain(extremal_h(100, 3), 3);
  const auto& l31 = find(rs, LemmaId::L3_1);
  CHECK(l31.satisfied);
  CHECK(l31.rhs == 98.0);
  CHECK(std::abs(l31.lhs - oracle::lambda(extremal_h(100, 3))) <= 1e-8);
  // One report per lemma, two for L3.3.
  CHECK(rs.size() == 10);
  CHECK(find(rs, LemmaId::L3_3, 0).note.find("left") != std::string::npos);
  CHECK(find(rs, LemmaId::L3_3, 1).note.find("right") != std::string::npos);

  const auto c8 = check_adjacency_chain(cycle_graph(8), 2);
  CHECK_FALSE(find(c8, LemmaId::L3_1).satisfied);
  CHECK(find(c8, LemmaId::L3_1).lhs == doctest::Approx(2.0));
  CHECK(find(c8, LemmaId::L3_1).rhs == 6.0);
  CHECK_FALSE(find(c8, LemmaId::L3_9).satisfied);
}

TEST_CASE("L3.9 holds on every H") {
  for (int n : {3, 5, 10, 33})
    for (int d = 1; d < n; d += 2) CHECK(find(check_adjacency_chain(extremal_h(n, d), d), LemmaId::L3_9).satisfied);
}

TEST_CASE("q chain examples") {
  const auto r = check_q_chain(extremal_h(200, 4), 4, 0.1);
  const auto& l41 = find(r.reports, LemmaId::L4_1);
  CHECK(l41.satisfied);
  CHECK(l41.rhs == doctest::Approx(2 * 198 + 3.0 / 199));
  CHECK(std::abs(l41.lhs - oracle::q(extremal_h(200, 4))) <= 1e-7);
  CHECK(r.partition.S_size == 1);
  CHECK(r.partition.L_size == 199);
  CHECK(r.partition.within_bound);
  CHECK(r.entries.size() == 200);
  for (const auto& e : r.entries) {
    CHECK(e.c_v == doctest::Approx(double(extremal_h(200, 4).degree(e.vertex)) / 200));
    CHECK(e.predicted == doctest::Approx(e.c_v / ((2 - e.c_v) * std::sqrt(200.0))));
    CHECK(e.deviation == doctest::Approx(std::abs(e.actual - e.predicted) * std::sqrt(200.0)));
  }
  CHECK(find(r.reports, LemmaId::L4_9).satisfied);
  CHECK(find(r.reports, LemmaId::L4_3).satisfied);
}

TEST_CASE("epsilon range") {
  for (double eps : {0.0, -0.1, 1.0 / 7.0, 0.5}) {
    try {
      check_q_chain(extremal_h(20, 2), 2, eps);
      FAIL("accepted epsilon");
    } catch (const SpexError& e) {
      CHECK(e.kind() == ErrorKind::InvalidEpsilon);
    }
  }
  CHECK_NOTHROW(check_q_chain(extremal_h(20, 2), 2, 0.142));
}

TEST_CASE("grid of H graphs") {
  for (int n : {20, 50, 100, 200})
    for (int d : {1, 2, 3, 5}) {
      const Graph h = extremal_h(n, d);
      const auto a = check_adjacency_chain(h, d);
      CHECK(find(a, LemmaId::L3_1).satisfied);
      CHECK(find(a, LemmaId::L3_3, 0).satisfied);
      CHECK(find(a, LemmaId::L3_4).satisfied);
      CHECK(find(a, LemmaId::L3_9).satisfied);
      const auto q = check_q_chain(h, d, 0.1);
      CHECK(find(q.reports, LemmaId::L4_1).satisfied);
      CHECK(find(q.reports, LemmaId::L4_3).satisfied);
      CHECK(find(q.reports, LemmaId::L4_9).satisfied);
    }
}

TEST_CASE("entry lemmas: satisfaction persists along increasing n") {
  const LemmaId ids[] = {LemmaId::L3_5, LemmaId::L3_6, LemmaId::L3_7, LemmaId::L3_8,
                         LemmaId::L4_4, LemmaId::L4_5, LemmaId::L4_6};
  for (int d : {1, 2, 3, 5}) {
    std::map<LemmaId, bool> reached;
    for (int n : {20, 50, 100, 200, 400}) {
      auto rs = check_adjacency_chain(extremal_h(n, d), d);
      const auto q = check_q_chain(extremal_h(n, d), d, 0.1);
      rs.insert(rs.end(), q.reports.begin(), q.reports.end());
      for (LemmaId id : ids) {
        const bool ok = find(rs, id).satisfied;
        if (reached[id]) CHECK(ok);
        reached[id] = reached[id] || ok;
      }
    }
  }
}

TEST_CASE("entry deviation shrinks as n grows") {
  double previous = 1e9;
  for (int n : {100, 200, 400}) {
    const auto r = check_q_chain(extremal_h(n, 3), 3, 0.1);
    double worst = 0.0;
    for (const auto& e : r.entries)
      if (e.vertex != n - 1) worst = std::max(worst, e.deviation);
    CHECK(worst < previous);
    previous = worst;
  }
}

TEST_CASE("reports are reproducible") {
  const auto a = check_q_chain(extremal_h(80, 3), 3, 0.1);
  const auto b = check_q_chain(extremal_h(80, 3), 3, 0.1);
  REQUIRE(a.reports.size() == b.reports.size());
  for (std::size_t i = 0; i < a.reports.size(); ++i) {
    CHECK(a.reports[i].lhs == b.reports[i].lhs);
    CHECK(a.reports[i].rhs == b.reports[i].rhs);
  }
  CHECK(lemma_csv(a.reports) == lemma_csv(b.reports));
}

TEST_CASE("serialisation") {
  const auto rs = check_adjacency_chain(extremal_h(20, 2), 2);
  const nlohmann::json j = rs;
  CHECK(j.size() == rs.size());
  CHECK(j[0]["lemma_id"] == "L3.1");
  CHECK(j[0]["relation"] == ">=");
  CHECK(j[0]["inputs"]["n"] == 20);
  const std::string csv = lemma_csv(rs);
  CHECK(csv.rfind("lemma_id,n,deltaF,eps,lhs,rhs,satisfied\n", 0) == 0);
  CHECK(std::count(csv.begin(), csv.end(), '\n') == static_cast<long>(rs.size() + 1));
}

TEST_CASE("corollary cases") {
  CorollaryOptions quick;
  quick.exhaustive_max_n = 0;
  const auto cp = verify_corollary(CyclePowerCase{12, 2}, quick);
  REQUIRE(cp.size() == 3);
  CHECK(cp[0].satisfied);
  CHECK(cp[0].inputs.delta_f == 4);
  CHECK(cp[1].lhs == doctest::Approx(oracle::lambda(extremal_h(12, 4))));
  CHECK(cp[2].lemma_id == LemmaId::T1_4_count);
  CHECK(cp[2].satisfied);

  const auto fc = verify_corollary(FactorCase{10, 2, 3}, quick);
  CHECK(fc[0].lemma_id == LemmaId::C5_3_factor);
  CHECK(fc[0].satisfied);
  CHECK(fc[0].lhs == 0.0);

  const auto cf = verify_corollary(CliqueFactorCase{9, 2});
  REQUIRE(cf.size() == 3);
  CHECK(cf[0].satisfied);
  CHECK(cf[1].relation == Relation::AtLeast);
  CHECK(cf[1].satisfied);
  CHECK(cf[1].rhs == doctest::Approx(cf[1].lhs).epsilon(1e-9));

  for (CorollaryCase bad : {CorollaryCase{CyclePowerCase{8, 4}}, CorollaryCase{FactorCase{8, 3, 2}},
                            CorollaryCase{CliqueFactorCase{8, 2}}, CorollaryCase{FactorCase{2, 1, 1}}}) {
    try {
      verify_corollary(bad, quick);
      FAIL("accepted bad case");
    } catch (const SpexError& e) {
      CHECK(e.kind() == ErrorKind::InvalidParameter);
    }
  }
  CHECK(to_string(parse_corollary_case("factor:10,2,3")) == "factor:10,2,3");
  CHECK_THROWS_AS(parse_corollary_case("factor:10,2"), SpexError);
}

TEST_CASE("H avoids F for every family with minimum degree deltaF") {
  std::vector<Graph> patterns;
  for (int n = 8; n <= 14; ++n)
    for (int k = 1; k <= 3; ++k)
      if (2 * k < n) patterns.push_back(build(CyclePower{n, k}));
  for (int r = 1; r <= 3; ++r)
    for (int n = r + 1; n <= 12; n += r + 1)
      if (n >= 3) patterns.push_back(build(CliqueFactor{n, r}));
  std::mt19937_64 rng(31);
  while (patterns.size() < 80) {
    const Graph f = oracle::random_graph(rng, 3 + rng() % 6, 0.5);
    int delta = f.order();
    for (int v = 0; v < f.order(); ++v) delta = std::min(delta, f.degree(v));
    if (delta >= 1) patterns.push_back(f);
  }
  for (const auto& f : patterns) {
    int delta = f.order();
    for (int v = 0; v < f.order(); ++v) delta = std::min(delta, f.degree(v));
    CHECK(contains_spanning(extremal_h(f.order(), delta), f).absent());
  }
}
