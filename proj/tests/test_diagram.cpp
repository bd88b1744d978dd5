#include <gtest/gtest.h>

#include <random>

#include "fixtures.hpp"
#include "khovanov/diagram.hpp"
#include "khovanov/khcomplex.hpp"
#include "oracle.hpp"

using namespace kh;
using fixtures::braid;
using fixtures::pd;

TEST(Diagram, Signs) {
  const Diagram neg = pd("X[1,4,2,3];X[3,6,4,5];X[5,2,6,1]");
  EXPECT_EQ(neg.signs(), (std::vector<int>{-1, -1, -1}));
  EXPECT_EQ(neg.writhe(), -3);
  // over-strand enters at slot b at every crossing: a left-handed trefoil
  const Diagram left = pd("X[2,5,3,6];X[4,1,5,2];X[6,3,1,4]");
  EXPECT_TRUE(left.is_knot());
  EXPECT_EQ(left.signs(), (std::vector<int>{-1, -1, -1}));
  EXPECT_EQ(mirror(left).signs(), (std::vector<int>{1, 1, 1}));
  EXPECT_EQ(fixtures::knot("3_1").signs(), (std::vector<int>{1, 1, 1}));
  EXPECT_EQ(neg.component_count(), 3);
  const Diagram t = braid("1 1 1");
  EXPECT_EQ(t.crossing_count(), 3);
  EXPECT_EQ(t.writhe(), 3);
  EXPECT_TRUE(t.is_knot());
  EXPECT_EQ(braid("-1 -1 -1").writhe(), -3);
  EXPECT_EQ(braid("1 -2 1 -2").writhe(), 0);
}

TEST(Diagram, Components) {
  EXPECT_EQ(braid("1 1").component_count(), 2);
  EXPECT_EQ(braid("1 1 1 1").component_count(), 2);
  EXPECT_EQ(braid("1 2 1 2 1 2").component_count(), 3);
  EXPECT_EQ(braid("1 2").component_count(), 1);
  EXPECT_EQ(Diagram::unknot().crossing_count(), 0);
}

TEST(Diagram, BraidErrors) {
  EXPECT_THROW(Diagram::from_braid_closure(BraidWord{3, {1}}), InputError);
  EXPECT_THROW(Diagram::from_braid_closure(BraidWord{2, {}}), InputError);
}

TEST(Resolve, TrefoilExtremes) {
  const Diagram t = braid("1 1 1");
  EXPECT_EQ(s_plus(t).count, 2);
  EXPECT_EQ(s_minus(t).count, 3);
  EXPECT_TRUE(is_adequate(t));
  EXPECT_EQ(resolve(t, {0}).count, 2);
  EXPECT_EQ(resolve(t, {7}).count, 3);
  EXPECT_THROW(resolve(t, {8}), InputError);
}

TEST(Resolve, MatchesOracleOnCensus) {
  for (const auto& r : fixtures::census()) {
    const Diagram d = fixtures::diagram_of_record(r);
    if (d.crossing_count() > 8) continue;
    for (std::uint64_t s = 0; s < (std::uint64_t{1} << d.crossing_count()); s += 7) {
      EXPECT_EQ(resolve(d, {s}).count, static_cast<int>(oracle::circles(d, s).size())) << r.name << " state " << s;
    }
  }
}

TEST(Resolve, CircleIndexingBySmallestEdge) {
  const Diagram d = fixtures::knot("6_2");
  for (std::uint64_t s = 0; s < 64; ++s) {
    const CircleSet cs = resolve(d, {s});
    const auto ref = oracle::circles(d, s);
    ASSERT_EQ(cs.count, static_cast<int>(ref.size()));
    for (int c = 0; c < cs.count; ++c) {
      for (int e : ref[c]) EXPECT_EQ(cs.circle_of_edge[e], c);
    }
  }
}

TEST(Resolve, KinkIsInadequate) {
  // one-crossing unknot: a Reidemeister I kink
  const Diagram kink = pd("X[1,1,2,2]");
  EXPECT_EQ(kink.crossing_count(), 1);
  EXPECT_FALSE(is_adequate(kink));
}

TEST(Resolve, CircleSumBound) {
  for (const auto& r : fixtures::census()) {
    const Diagram d = fixtures::diagram_of_record(r);
    const int sum = s_plus(d).count + s_minus(d).count;
    EXPECT_LE(sum, d.crossing_count() + 2) << r.name;
    if (r.alternating.value_or(false) && is_alternating_diagram(d)) {
      EXPECT_EQ(sum, d.crossing_count() + 2) << r.name;
    }
  }
}

TEST(Resolve, AdjacentStatesDifferByOneCircle) {
  std::mt19937 rng(7);
  for (const auto& name : {"7_4", "8_19", "9_42", "10_132"}) {
    const Diagram d = fixtures::knot(name);
    const int n = d.crossing_count();
    std::uniform_int_distribution<std::uint64_t> pick(0, (std::uint64_t{1} << n) - 1);
    for (int trial = 0; trial < 200; ++trial) {
      const std::uint64_t s = pick(rng);
      const int k = static_cast<int>(rng() % n);
      const int a = resolve(d, {s & ~(std::uint64_t{1} << k)}).count;
      const int b = resolve(d, {s | (std::uint64_t{1} << k)}).count;
      EXPECT_EQ(std::abs(a - b), 1) << name;
    }
  }
}

TEST(Seifert, PositiveGenus) {
  const Diagram t = braid("1 1 1");
  EXPECT_EQ(seifert_circle_count(t), 2);
  EXPECT_TRUE(is_positive_diagram(t));
  EXPECT_EQ(positive_diagram_genus(t), 1);
  const Diagram k = braid("1 1 2 2 1 3 2 2 2 3 3");
  EXPECT_EQ(seifert_circle_count(k), 4);
  EXPECT_EQ(positive_diagram_genus(k), 4);
  for (int m = 0; m <= 4; ++m) EXPECT_EQ(positive_diagram_genus(fixtures::torus2(2 * m + 1)), m);
  EXPECT_THROW(positive_diagram_genus(braid("1 -2 1 -2")), InputError);
}

TEST(Alternating, SyntacticWalk) {
  EXPECT_TRUE(is_alternating_diagram(braid("1 1 1")));
  EXPECT_TRUE(is_alternating_diagram(braid("1 -2 1 -2")));
  EXPECT_FALSE(is_alternating_diagram(braid("1 1 2 2 1 3 2 2 2 3 3")));
  int alternating_pd = 0;
  for (const auto& r : fixtures::census()) {
    if (r.alternating.value_or(false) && is_alternating_diagram(fixtures::diagram_of_record(r))) ++alternating_pd;
  }
  EXPECT_GT(alternating_pd, 150);
}

TEST(Mirror, Involution) {
  for (const auto& name : {"3_1", "5_2", "8_19", "10_124"}) {
    const Diagram d = fixtures::knot(name);
    const Diagram m = mirror(d);
    EXPECT_EQ(m.writhe(), -d.writhe()) << name;
    EXPECT_EQ(mirror(m), d) << name;
    EXPECT_EQ(s_plus(m).count, s_minus(d).count) << name;
  }
}

TEST(ConnectedSum, Shape) {
  const Diagram a = braid("1 1 1");
  const Diagram b = fixtures::knot("4_1");
  const Diagram s = connected_sum(a, b);
  EXPECT_EQ(s.crossing_count(), 7);
  EXPECT_TRUE(s.is_knot());
  EXPECT_EQ(s.writhe(), a.writhe() + b.writhe());
  EXPECT_THROW(connected_sum(a, braid("1 1")), InputError);
  EXPECT_THROW(connected_sum(a, b, 0, 99), InputError);
}

TEST(Relabel, PreservesStructure) {
  const Diagram d = fixtures::knot("7_7");
  const Diagram r = d.relabeled();
  EXPECT_EQ(r.signs().size(), d.signs().size());
  EXPECT_EQ(r.writhe(), d.writhe());
  EXPECT_EQ(s_plus(r).count, s_plus(d).count);
  for (int e = 0; e < r.edge_count(); ++e) EXPECT_EQ(r.next_edge(e), (e + 1) % r.edge_count());
  EXPECT_EQ(Diagram::from_pd(d.to_pd()), d);
}
