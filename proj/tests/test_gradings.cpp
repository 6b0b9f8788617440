#include <gtest/gtest.h>

#include <set>

#include "kstate/error.hpp"
#include "kstate/gradings.hpp"
#include "support.hpp"

using namespace kstate;
using namespace kstate::testing;

namespace {

const Quarter half = Quarter::from_fourths(2);

Crossing probe(int sign) {
  Crossing c;
  c.sign = sign;
  return c;
}

}  // namespace

TEST(Quarter, Strings) {
  EXPECT_EQ(Quarter::from_fourths(-3).to_string(), "-3/4");
  EXPECT_EQ(Quarter::from_fourths(2).to_string(), "1/2");
  EXPECT_EQ(Quarter::from_fourths(-4).to_string(), "-1");
  EXPECT_EQ(Quarter().to_string(), "0");
  EXPECT_EQ(Quarter::from_fourths(6).to_string(), "3/2");
  EXPECT_TRUE(Quarter::whole(3).is_integer());
  EXPECT_EQ((Quarter::whole(3) - quarter_one).fourths(), 11);
}

TEST(QuadrantClass, IncomingAndOutgoingPairs) {
  const Diagram d = parse_pd(figure_eight);
  for (const Crossing& c : d.crossings()) {
    int north = 0, south = 0;
    for (int q = 0; q < 4; ++q) {
      const QuadrantClass k = quadrant_class(c, q);
      north += k == QuadrantClass::north;
      south += k == QuadrantClass::south;
    }
    EXPECT_EQ(north, 1);
    EXPECT_EQ(south, 1);
    // N and S face each other across the crossing.
    for (int q = 0; q < 4; ++q)
      if (quadrant_class(c, q) == QuadrantClass::north) {
        EXPECT_EQ(quadrant_class(c, (q + 2) % 4), QuadrantClass::south);
      }
  }
}

TEST(DeltaTable, LocalValues) {
  for (int sign : {1, -1}) EXPECT_EQ(delta_contribution(probe(sign), QuadrantClass::lateral), Quarter());
  EXPECT_EQ(delta_contribution(probe(-1), QuadrantClass::north), half);
  EXPECT_EQ(delta_contribution(probe(-1), QuadrantClass::south), half);
  EXPECT_EQ(delta_contribution(probe(1), QuadrantClass::north), -half);
  EXPECT_EQ(delta_contribution(probe(1), QuadrantClass::south), -half);
}

TEST(DeltaTable, FValues) {
  EXPECT_EQ(f_value(probe(1), QuadrantClass::lateral), quarter_one);
  EXPECT_EQ(f_value(probe(-1), QuadrantClass::lateral), -quarter_one);
  for (int sign : {1, -1})
    for (QuadrantClass q : {QuadrantClass::north, QuadrantClass::south, QuadrantClass::lateral}) {
      const Quarter f = f_value(probe(sign), q);
      EXPECT_TRUE(f == quarter_one || f == -quarter_one);
    }
}

TEST(DeltaTable, CrossingChangeNegatesF) {
  const Diagram d = parse_pd(figure_eight);
  for (const Crossing& c : d.crossings()) {
    const Diagram changed = change_crossings(d, std::array<int, 1>{c.id});
    const Crossing& other = changed.crossing(c.id);
    for (int q = 0; q < 4; ++q) {
      // Same physical quadrant: bounded by the same two edge labels in the same order.
      int match = -1;
      for (int r = 0; r < 4; ++r)
        if (other.slots[r] == c.slots[q] && other.slots[(r + 1) % 4] == c.slots[(q + 1) % 4]) match = r;
      ASSERT_GE(match, 0);
      EXPECT_EQ(f_value(other, quadrant_class(other, match)), -f_value(c, quadrant_class(c, q)));
    }
  }
}

TEST(Gradings, PositiveTrefoil) {
  const Diagram d = parse_pd(trefoil);
  for (const MarkedEdge& e : eligible_marked_edges(d)) {
    std::multiset<Quarter> alexander_values;
    for (const KauffmanState& x : enumerate_states(d, e)) {
      const GradingVector g = gradings(x, d);
      EXPECT_EQ(g.delta, Quarter::whole(-1));
      EXPECT_EQ(g.maslov - g.alexander, g.delta);
      alexander_values.insert(g.alexander);
    }
    EXPECT_EQ(alexander_values, (std::multiset<Quarter>{Quarter::whole(-1), Quarter(), Quarter::whole(1)}));
  }
}

TEST(Gradings, NegativeTrefoilMirrorsDelta) {
  const Diagram d = parse_pd(trefoil_negative);
  const SpreadSummary s = delta_summary(d, marked_edge(d, 1));
  EXPECT_EQ(s.histogram, (std::map<Quarter, std::uint64_t>{{Quarter::whole(1), 3}}));
}

TEST(Gradings, TablesRespectDelta) {
  EXPECT_TRUE(standard_tables().matches_delta_table());
  GradingTables broken = standard_tables();
  broken.at(1, QuadrantClass::north).maslov = Quarter::whole(1);
  EXPECT_FALSE(broken.matches_delta_table());
}

TEST(Gradings, DecompositionAndIntegralityOnCensus) {
  for (const CensusRecord& r : census_up_to(9)) {
    const Diagram d = parse_pd(r.pd);
    const Quarter wr = Quarter::from_fourths(d.writhe());
    for (const MarkedEdge& e : eligible_marked_edges(d)) {
      for_each_state(d, e, [&](const KauffmanState& x) {
        const Quarter dx = delta(x, d);
        EXPECT_TRUE(dx.is_integer()) << r.name;
        Quarter sum;
        for (Quarter f : f_terms(x, d)) sum += f;
        EXPECT_EQ(sum, dx + wr) << r.name;
        EXPECT_EQ(maslov(x, d) - alexander(x, d), dx) << r.name;
      });
    }
  }
}

TEST(Gradings, MirrorNegatesDeltaMultiset) {
  for (const CensusRecord& r : census_up_to(9)) {
    const Diagram d = parse_pd(r.pd);
    const Diagram m = mirror(d);
    for (const MarkedEdge& e : eligible_marked_edges(d)) {
      const SpreadSummary a = delta_summary(d, e);
      const SpreadSummary b = delta_summary(m, marked_edge(m, e.label));
      std::map<Quarter, std::uint64_t> negated;
      for (const auto& [v, n] : a.histogram) negated[-v] = n;
      EXPECT_EQ(b.histogram, negated) << r.name << " edge " << e.label;
    }
  }
}

TEST(Spread, SpotValues) {
  const Diagram kink = parse_pd(kink_positive);
  EXPECT_EQ(delta_spread(kink, marked_edge(kink, 1)), 0);
  const Diagram eight = parse_pd(figure_eight);
  EXPECT_EQ(delta_spread(eight, marked_edge(eight, 3)), 0);
  const Diagram torus = parse_pd(torus_3_4);
  for (const MarkedEdge& e : eligible_marked_edges(torus)) EXPECT_EQ(delta_spread(torus, e), 1);
  const Diagram braid = parse_pd(torus_3_4_braid);
  EXPECT_EQ(delta_spread(braid, marked_edge(braid, 1)), 3);
  const Diagram nine = parse_pd(torus_3_4_nine);
  EXPECT_EQ(delta_spread(nine, marked_edge(nine, 1)), 1);
}

TEST(Spread, ReducedAlternatingIsZero) {
  for (const CensusRecord& r : census()) {
    const Diagram d = parse_pd(r.pd);
    if (!is_alternating(d) || !is_reduced(d)) continue;
    for (const MarkedEdge& e : eligible_marked_edges(d)) EXPECT_EQ(delta_spread(d, e), 0) << r.name;
  }
}

TEST(Spread, GoodFacesHaveUniformF) {
  for (const CensusRecord& r : census()) {
    const Diagram d = parse_pd(r.pd);
    for (const Face& face : d.faces()) {
      bool good = true;
      for (int l : face.boundary_edges) good = good && !d.edge(l).is_bad();
      if (!good) continue;
      std::set<Quarter> values;
      for (const Corner& c : face.corners)
        values.insert(f_value(d.crossing(c.crossing), quadrant_class(d.crossing(c.crossing), c.quadrant)));
      EXPECT_EQ(values.size(), 1u) << r.name << " face " << face.id;
    }
  }
}
