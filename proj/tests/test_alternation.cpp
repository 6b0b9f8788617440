#include <gtest/gtest.h>

#include <numeric>

#include "kstate/alternation.hpp"
#include "kstate/error.hpp"
#include "support.hpp"

using namespace kstate;
using namespace kstate::testing;

namespace {

std::vector<int> complement(const std::vector<int>& set, int n) {
  std::vector<int> out;
  for (int c = 0; c < n; ++c)
    if (std::find(set.begin(), set.end(), c) == set.end()) out.push_back(c);
  return out;
}

FixableSet all_crossings(const Diagram& d) {
  FixableSet f;
  f.crossings.resize(d.crossing_count());
  std::iota(f.crossings.begin(), f.crossings.end(), 0);
  return f;
}

}  // namespace

TEST(Assignments, AlternatingDiagram) {
  const Diagram d = parse_pd(figure_eight);
  const auto masks = alternating_assignments(d);
  const std::multiset<int> sizes{masks[0].size(), masks[1].size()};
  EXPECT_EQ(sizes, (std::multiset<int>{0, 4}));
  EXPECT_EQ(min_fixable_set(d).size(), 0);
}

TEST(Assignments, MasksAreComplementary) {
  for (const CensusRecord& r : census()) {
    const Diagram d = parse_pd(r.pd);
    const auto masks = alternating_assignments(d);
    EXPECT_EQ(masks[1].crossings, complement(masks[0].crossings, d.crossing_count())) << r.name;
  }
}

TEST(Assignments, FlippedSetIsRecovered) {
  const Diagram base = parse_pd(figure_eight);
  const std::vector<int> flips{1, 3};
  const Diagram d = change_crossings(base, flips);
  const auto masks = alternating_assignments(d);
  const bool first = masks[0].crossings == flips;
  const FixableSet& hit = first ? masks[0] : masks[1];
  const FixableSet& other = first ? masks[1] : masks[0];
  EXPECT_EQ(hit.crossings, flips);
  EXPECT_EQ(other.crossings, complement(flips, 4));
}

TEST(MinFixable, OneFlipIsUndone) {
  const Diagram base = parse_pd(trefoil);
  for (int c = 0; c < 3; ++c) {
    const Diagram d = change_crossings(base, std::array<int, 1>{c});
    const FixableSet f = min_fixable_set(d);
    EXPECT_EQ(f.crossings, std::vector<int>{c});
    EXPECT_TRUE(is_alternating(change_crossings(d, f.crossings)));
  }
}

TEST(MinFixable, TieTakesMaskWithCrossingZero) {
  const Diagram d = change_crossings(parse_pd(figure_eight), std::vector<int>{2, 3});
  const FixableSet f = min_fixable_set(d);
  ASSERT_EQ(f.size(), 2);
  EXPECT_TRUE(f.contains(0));
}

TEST(MinFixable, MatchesBruteForceOnCensus) {
  for (const CensusRecord& r : census()) {
    const Diagram d = parse_pd(r.pd);
    const FixableSet f = min_fixable_set(d);
    EXPECT_EQ(f.size(), brute_force_dalt(d.pd())) << r.name;
    EXPECT_TRUE(is_alternating(change_crossings(d, f.crossings))) << r.name;
    EXPECT_EQ(f.size() == 0, is_alternating(d)) << r.name;
  }
}

TEST(MinFixable, TorusKnotDiagrams) {
  // Census PD and braid closure of the 8-crossing T(3,4), plus a 9-crossing diagram.
  EXPECT_EQ(dalt(parse_pd(torus_3_4)), 3);
  EXPECT_EQ(dalt(parse_pd(torus_3_4_braid)), 4);
  EXPECT_EQ(dalt(parse_pd(torus_3_4_nine)), 1);
}

TEST(PairCheck, SameStateHasNoCaseOneOrTwo) {
  const Diagram d = parse_pd(torus_3_4);
  const MarkedEdge e = marked_edge(d, 1);
  const FixableSet f = min_fixable_set(d);
  for (const KauffmanState& x : enumerate_states(d, e)) {
    const PairCheck check = pair_decomposition_check(d, e, x, x, f);
    EXPECT_EQ(check.case_counts[0], 0);
    EXPECT_EQ(check.case_counts[1], 0);
    EXPECT_EQ(check.delta_difference, Quarter());
    EXPECT_TRUE(check.ok());
  }
}

TEST(PairCheck, AllCrossingsOfAlternatingDiagramIsCaseThreeOnly) {
  // For an alternating diagram the full crossing set is the other alternating assignment.
  const Diagram d = parse_pd(figure_eight);
  const MarkedEdge e = marked_edge(d, 2);
  const FixableSet f = all_crossings(d);
  const std::vector<KauffmanState> states = enumerate_states(d, e);
  for (std::size_t i = 0; i < states.size(); ++i)
    for (std::size_t j = i + 1; j < states.size(); ++j) {
      const PairCheck check = pair_decomposition_check(d, e, states[i], states[j], f);
      EXPECT_EQ(check.case_counts[2], d.crossing_count());
      EXPECT_EQ(check.delta_difference, Quarter());
      EXPECT_TRUE(check.ok());
    }
}

TEST(PairCheck, SupersetOfFixableKeepsBound) {
  const Diagram d = parse_pd(torus_3_4);
  const MarkedEdge e = marked_edge(d, 3);
  const std::vector<KauffmanState> states = enumerate_states(d, e);
  FixableSet bigger = min_fixable_set(d);
  for (int c = 0; c < d.crossing_count() && bigger.size() < 5; ++c)
    if (!bigger.contains(c)) bigger.crossings.push_back(c);
  std::sort(bigger.crossings.begin(), bigger.crossings.end());
  for (std::size_t i = 0; i < states.size(); ++i)
    for (std::size_t j = i + 1; j < states.size(); ++j) {
      const PairCheck check = pair_decomposition_check(d, e, states[i], states[j], bigger);
      EXPECT_TRUE(check.case_counts_bounded);
      EXPECT_TRUE(check.delta_bounded);
    }
}

TEST(Verify, TrefoilDeep) {
  VerifyOptions options;
  options.deep = true;
  options.edge = 1;
  const AlternationReport report = verify_theorem(parse_pd(trefoil), options, "3_1");
  ASSERT_EQ(report.edges.size(), 1u);
  ASSERT_TRUE(report.edges[0].pairs);
  EXPECT_EQ(report.edges[0].pairs->pairs, 3u);
  EXPECT_EQ(report.edges[0].pairs->violations, 0u);
  EXPECT_EQ(report.edges[0].states, 3u);
  EXPECT_EQ(report.edges[0].spread, 0);
  EXPECT_EQ(report.dalt, 0);
  EXPECT_EQ(report.beta, 0);
  EXPECT_TRUE(report.theorem_ok);
  EXPECT_EQ(report.decomposition_ok, true);
}

TEST(Verify, IneligibleEdgeIsReported) {
  VerifyOptions options;
  options.edge = 99;
  const AlternationReport report = verify_theorem(parse_pd(trefoil), options);
  EXPECT_FALSE(report.theorem_ok);
  EXPECT_FALSE(report.errors.empty());
}

TEST(Verify, CensusDeepUpToEightCrossings) {
  VerifyOptions options;
  options.deep = true;
  for (const CensusRecord& r : census_up_to(8)) {
    const AlternationReport report = verify_theorem(parse_pd(r.pd), options, r.name);
    EXPECT_TRUE(report.theorem_ok) << r.name;
    EXPECT_EQ(report.decomposition_ok, true) << r.name;
    if (report.alternating) {
      EXPECT_EQ(report.max_spread, 0) << r.name;
    }
    for (const EdgeReport& e : report.edges) {
      ASSERT_TRUE(e.pairs) << r.name;
      EXPECT_LE(e.pairs->max_case_1, report.dalt) << r.name;
      EXPECT_LE(e.pairs->max_case_2, report.dalt) << r.name;
    }
  }
}

TEST(Verify, BoundIsAttained) {
  VerifyOptions options;
  options.deep = true;
  options.edge = 1;
  const AlternationReport report = verify_theorem(parse_pd(torus_3_4_nine), options);
  EXPECT_EQ(report.dalt, 1);
  EXPECT_EQ(report.max_spread, 1);
  ASSERT_TRUE(report.edges[0].pairs);
  EXPECT_GT(report.edges[0].pairs->tight_pairs, 0u);
  EXPECT_EQ(report.edges[0].pairs->max_delta_difference, Quarter::whole(1));
}
