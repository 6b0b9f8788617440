#include <gtest/gtest.h>

#include <set>

#include "kstate/alexander.hpp"
#include "kstate/census.hpp"
#include "kstate/error.hpp"
#include "kstate/report.hpp"
#include "support.hpp"

using namespace kstate;
using namespace kstate::testing;

namespace {

GradingTables corrupted_tables() { return parse_tables(read_input(fixture_path("corrupted_tables.json"))); }

}  // namespace

TEST(Fox, SpotValues) {
  EXPECT_EQ(fox_alexander(parse_pd(trefoil)).to_string(), "t^-1 - 1 + t");
  EXPECT_EQ(fox_alexander(parse_pd(trefoil_negative)).to_string(), "t^-1 - 1 + t");
  EXPECT_EQ(fox_alexander(parse_pd(figure_eight)).to_string(), "-t^-1 + 3 - t");
  EXPECT_EQ(fox_alexander(parse_pd(kink_positive)), LaurentPolynomial(1));
  EXPECT_EQ(fox_alexander(parse_pd(kink_negative)), LaurentPolynomial(1));
  const std::string torus = "t^-3 - t^-2 + 1 - t^2 + t^3";
  EXPECT_EQ(fox_alexander(parse_pd(torus_3_4)).to_string(), torus);
  EXPECT_EQ(fox_alexander(parse_pd(torus_3_4_braid)).to_string(), torus);
  EXPECT_EQ(fox_alexander(parse_pd(torus_3_4_nine)).to_string(), torus);
}

TEST(Fox, Determinants) {
  EXPECT_EQ(determinant(parse_pd(trefoil)), 3);
  EXPECT_EQ(determinant(parse_pd(figure_eight)), 5);
  EXPECT_EQ(determinant(parse_pd(kink_positive)), 1);
}

TEST(Fox, ArcsEndAtCrossings) {
  for (const CensusRecord& r : census()) {
    const Diagram d = parse_pd(r.pd);
    const std::vector<int> arcs = wirtinger_arcs(d);
    ASSERT_EQ(static_cast<int>(arcs.size()), d.edge_count());
    EXPECT_EQ(std::set<int>(arcs.begin(), arcs.end()).size(), static_cast<std::size_t>(d.crossing_count()))
        << r.name;
  }
}

TEST(Fox, CensusDeterminantsMatchTableAndColoringOracle) {
  for (const CensusRecord& r : census()) {
    const Diagram d = parse_pd(r.pd);
    const LaurentPolynomial p = fox_alexander(d);
    EXPECT_TRUE(p.is_symmetric()) << r.name;
    EXPECT_EQ(p.evaluate(1), 1) << r.name;
    const BigInt det = determinant(d);
    EXPECT_EQ(det, coloring_determinant(d.pd())) << r.name;
    if (r.determinant) {
      EXPECT_EQ(det, *r.determinant) << r.name;
    }
  }
}

TEST(Fox, MarkedLabelAndMirrorIndependence) {
  for (const CensusRecord& r : census_up_to(9)) {
    const Diagram d = parse_pd(r.pd);
    const LaurentPolynomial p = fox_alexander(d);
    for (int label = 2; label <= d.edge_count(); label += 3)
      EXPECT_EQ(fox_alexander(d, label), p) << r.name << " label " << label;
    EXPECT_EQ(fox_alexander(mirror(d)), p) << r.name;
  }
}

TEST(StateSum, SpotValues) {
  const Diagram t = parse_pd(trefoil);
  EXPECT_EQ(state_sum_euler(t, marked_edge(t, 1)).to_string(), "t^-1 - 1 + t");
  const Diagram e = parse_pd(figure_eight);
  EXPECT_EQ(state_sum_euler(e, marked_edge(e, 1)).to_string(), "-t^-1 + 3 - t");
}

TEST(StateSum, EqualsFoxAndIsEdgeIndependent) {
  for (const CensusRecord& r : census_up_to(9)) {
    const Diagram d = parse_pd(r.pd);
    const LaurentPolynomial fox = fox_alexander(d);
    for (const MarkedEdge& e : eligible_marked_edges(d)) {
      EXPECT_EQ(state_sum_euler(d, e), fox) << r.name << " edge " << e.label;
      EXPECT_EQ(state_sum_raw(d, e), fox) << r.name << " edge " << e.label;
    }
  }
}

TEST(StateSum, DeterminantEqualsStateCountForReducedAlternating) {
  for (const CensusRecord& r : census()) {
    const Diagram d = parse_pd(r.pd);
    if (!is_alternating(d) || !is_reduced(d)) continue;
    EXPECT_EQ(determinant(d), state_count_oracle(d)) << r.name;
  }
}

TEST(StateSum, CorruptedTablesDisagreeWithFox) {
  const GradingTables bad = corrupted_tables();
  EXPECT_TRUE(bad.matches_delta_table());  // the corruption keeps M - A = delta
  int mismatches = 0;
  for (const CensusRecord& r : census_up_to(9)) {
    const Diagram d = parse_pd(r.pd);
    if (state_sum_euler(d, marked_edge(d, 1), bad) != fox_alexander(d)) ++mismatches;
  }
  EXPECT_EQ(mismatches, 13);
}

TEST(StateSum, NonIntegerGradingIsReported) {
  GradingTables tables = standard_tables();
  tables.at(1, QuadrantClass::lateral).alexander = quarter_one;
  tables.at(1, QuadrantClass::lateral).maslov = quarter_one;
  const Diagram d = parse_pd(trefoil);
  try {
    state_sum_raw(d, marked_edge(d, 1), tables);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::invariant);
  }
}
