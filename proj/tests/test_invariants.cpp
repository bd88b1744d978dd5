#include <gtest/gtest.h>

#include "fixtures.hpp"
#include "khovanov/homology.hpp"
#include "khovanov/invariants.hpp"
#include "khovanov/khcomplex.hpp"
#include "khovanov/laurent.hpp"

using namespace kh;
using fixtures::braid;

namespace {

const CoefficientRing Q = CoefficientRing::rationals();

LaurentPoly q(std::map<int, std::int64_t> terms) { return LaurentPoly('q', std::move(terms)); }
LaurentPoly t(std::map<int, std::int64_t> terms) { return LaurentPoly('t', std::move(terms)); }

LaurentPoly homology_jones(const Diagram& d) { return jones_from_homology(homology_ranks(build_cube(d, Q))); }

}  // namespace

TEST(Laurent, ParseAndPrint) {
  const LaurentPoly p = parse_laurent("2*t^-1-3+2*t");
  EXPECT_EQ(p, t({{-1, 2}, {0, -3}, {1, 2}}));
  EXPECT_EQ(p.to_string(), "2*t^-1-3*t^0+2*t^1");
  EXPECT_EQ(parse_laurent("t^(2)+t"), t({{1, 1}, {2, 1}}));
  EXPECT_EQ(parse_laurent("q^2-q^-2", 'q'), q({{2, 1}, {-2, -1}}));
  EXPECT_THROW(parse_laurent("2**t"), ParseError);
}

TEST(Laurent, Arithmetic) {
  const LaurentPoly a = q({{1, 1}, {-1, 1}});
  const LaurentPoly b = q({{2, 1}, {6, 1}, {8, -1}});
  EXPECT_EQ((a * b).divided_exactly_by(a), b);
  EXPECT_THROW(b.divided_exactly_by(q({{1, 2}})), ConsistencyError);
  EXPECT_EQ(b.substitute_power(-1), q({{-2, 1}, {-6, 1}, {-8, -1}}));
  EXPECT_EQ(b.evaluate(1), 1);
  EXPECT_EQ(b.evaluate_at_i(), (GaussianInt{-3, 0}));
}

TEST(Jones, SmallKnots) {
  const LaurentPoly right = q({{2, 1}, {6, 1}, {8, -1}});
  EXPECT_EQ(homology_jones(braid("1 1 1")), right);
  EXPECT_EQ(bracket_jones(braid("1 1 1")), right);
  EXPECT_EQ(homology_jones(braid("-1 -1 -1")), right.substitute_power(-1));
  const LaurentPoly eight = q({{-4, 1}, {-2, -1}, {0, 1}, {2, -1}, {4, 1}});
  EXPECT_EQ(homology_jones(fixtures::knot("4_1")), eight);
  EXPECT_EQ(bracket_jones(Diagram::unknot()), LaurentPoly::constant('q', 1));
  EXPECT_EQ(homology_jones(Diagram::unknot()), LaurentPoly::constant('q', 1));
}

TEST(Jones, RoutesAgree) {
  for (const auto& r : fixtures::census()) {
    const Diagram d = kh::diagram_of(r);
    if (d.crossing_count() > 8) continue;
    const LaurentPoly j = bracket_jones(d);
    EXPECT_EQ(homology_jones(d), j) << r.name;
    EXPECT_EQ(jones_from_reduced(homology_ranks(build_reduced(d, 0, Q))), j) << r.name;
    EXPECT_EQ(bracket_jones(kh::Diagram::from_braid_closure(*r.braid)), j) << r.name;
  }
}

TEST(Jones, SkeinTriples) {
  // q²J(L₁) − q⁻²J(L₂) = (q − q⁻¹)J(L₃), L₁ with the crossing negative, L₂ positive, L₃ smoothed
  const std::vector<std::pair<int, std::string>> cases = {
      {1, "1 1"}, {1, "1 1 1"}, {1, "1 1 1 1"}, {1, "1 -2 1 -2"}, {1, "1 2 1 2"},
      {2, "1 2 1 -2"}, {1, "-1 -1 2 -1 2"}, {-1, "-1 -1 -1"}};
  const LaurentPoly q2 = LaurentPoly::monomial('q', 2), qm2 = LaurentPoly::monomial('q', -2);
  const LaurentPoly qq = q({{1, 1}, {-1, -1}});
  for (const auto& [letter, rest] : cases) {
    const int g = letter < 0 ? -letter : letter;
    const std::string l1 = std::to_string(-g) + " " + rest;
    const std::string l2 = std::to_string(g) + " " + rest;
    for (const auto& jones : {bracket_jones, homology_jones}) {
      EXPECT_EQ(q2 * jones(braid(l1)) - qm2 * jones(braid(l2)), qq * jones(braid(rest))) << rest;
    }
  }
}

TEST(Alexander, Examples) {
  EXPECT_EQ(alexander(braid("1 1 1")), t({{-1, 1}, {0, -1}, {1, 1}}));
  EXPECT_EQ(alexander(fixtures::knot("4_1")), t({{-1, -1}, {0, 3}, {1, -1}}));
  EXPECT_EQ(alexander(fixtures::knot("5_2")), t({{-1, 2}, {0, -3}, {1, 2}}));
  EXPECT_EQ(alexander(Diagram::unknot()), LaurentPoly::constant('t', 1));
  EXPECT_EQ(alexander(fixtures::knot("10_153")), *fixtures::census_knot("10_153").alexander);
}

TEST(Alexander, AgreesWithTableAndIsSymmetric) {
  for (const auto& r : fixtures::census()) {
    const LaurentPoly a = alexander(kh::diagram_of(r));
    EXPECT_EQ(a, *r.alexander) << r.name;
    EXPECT_EQ(a.substitute_power(-1), a) << r.name;
    EXPECT_EQ(a.evaluate(1), 1) << r.name;
    EXPECT_EQ(alexander(kh::Diagram::from_braid_closure(*r.braid)), a) << r.name;
  }
}

TEST(Determinant, Examples) {
  EXPECT_EQ(std::abs(determinant(fixtures::knot("9_42"))), 7);
  EXPECT_EQ(std::abs(determinant(braid("1 1 1"))), 3);
  EXPECT_EQ(std::abs(determinant(fixtures::knot("4_1"))), 5);
  EXPECT_THROW(determinant(t({{0, 5}}), q({{0, 1}})), ConsistencyError);
}

TEST(Signature, Examples) {
  EXPECT_EQ(signature(braid("1 1 1")), -2);
  EXPECT_EQ(signature(parse_braid("1 1 1")), -2);
  EXPECT_EQ(signature(braid("-1 -1 -1")), 2);
  EXPECT_EQ(signature(fixtures::knot("4_1")), 0);
  EXPECT_EQ(signature(parse_braid("1 1 1 1 1")), -4);
  EXPECT_EQ(symmetric_signature({{2, 1}, {1, 2}}), 2);
  EXPECT_EQ(symmetric_signature({{0, 1}, {1, 0}}), 0);
  EXPECT_EQ(symmetric_signature({{-1, 0}, {0, 0}}), -1);
}

TEST(Signature, AgreesWithTable) {
  for (const auto& r : fixtures::census()) {
    EXPECT_EQ(signature(kh::diagram_of(r)), *r.signature) << r.name;
    EXPECT_EQ(signature(*r.braid), *r.signature) << r.name;
  }
}

TEST(Signature, SeifertMatrixShape) {
  const auto v = braid_seifert_matrix(parse_braid("1 1 1"));
  ASSERT_EQ(v.size(), 2u);
  // V − Vᵀ is unimodular for a knot
  const std::int64_t a = v[0][1] - v[1][0];
  EXPECT_EQ(a * a, 1);
  EXPECT_EQ(signature_from_seifert(v), -2);
}

TEST(Mirror, InvariantLaws) {
  for (const auto& name : {"3_1", "5_2", "6_2", "7_3", "8_19", "9_42"}) {
    const Diagram d = fixtures::knot(name);
    const Diagram m = mirror(d);
    EXPECT_EQ(bracket_jones(m), bracket_jones(d).substitute_power(-1)) << name;
    EXPECT_EQ(signature(m), -signature(d)) << name;
    EXPECT_EQ(alexander(m), alexander(d)) << name;
    EXPECT_EQ(determinant(m), determinant(d)) << name;
  }
}

TEST(Patterns, AlternationAndGaps) {
  EXPECT_TRUE(is_alternating_poly(q({{2, 1}, {6, 1}, {8, -1}}), 2));
  EXPECT_TRUE(has_gap(q({{2, 1}, {6, 1}, {8, -1}}), 2));
  EXPECT_TRUE(is_alternating_poly(t({{-1, 1}, {0, -1}, {1, 1}}), 1));
  EXPECT_FALSE(has_gap(t({{-1, 1}, {0, -1}, {1, 1}}), 1));
  EXPECT_FALSE(is_alternating_poly(t({{-1, 1}, {0, 1}, {1, 1}}), 1));
  EXPECT_THROW(is_alternating_poly(LaurentPoly('t'), 1), InputError);
  EXPECT_THROW(has_gap(LaurentPoly('t'), 1), InputError);
}
