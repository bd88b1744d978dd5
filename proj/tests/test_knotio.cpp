#include <gtest/gtest.h>

#include "fixtures.hpp"
#include "khovanov/errors.hpp"
#include "khovanov/knotio.hpp"

using namespace kh;

TEST(ParsePd, AcceptsThreeCrossings) {
  const PdCode pd = parse_pd("X[1,4,2,3];X[3,6,4,5];X[5,2,6,1]");
  ASSERT_EQ(pd.crossing_count(), 3);
  EXPECT_EQ(pd.crossings[1], (std::array<int, 4>{3, 6, 4, 5}));
}

TEST(ParsePd, RoundTrip) {
  const std::string text = "X[2,5,3,6];X[4,1,5,2];X[6,3,1,4]";
  EXPECT_EQ(render_pd(parse_pd(text)), text);
  for (const auto& r : fixtures::census()) {
    if (r.pd) EXPECT_EQ(parse_pd(render_pd(*r.pd)), *r.pd) << r.name;
  }
}

TEST(ParsePd, WhitespaceTolerated) {
  EXPECT_EQ(parse_pd(" X[1, 4,2,3] ; X[3,6,4,5];\nX[5,2,6,1] ").crossing_count(), 3);
  EXPECT_EQ(parse_pd("   ").crossing_count(), 0);
  EXPECT_EQ(parse_pd("").crossing_count(), 0);
}

TEST(ParsePd, LabelCountViolation) {
  try {
    parse_pd("X[1,4,2,3];X[3,6,4,5]");
    FAIL() << "accepted a PD with dangling labels";
  } catch (const ParseError& e) {
    EXPECT_NE(std::string(e.what()).find("appear once"), std::string::npos) << e.what();
  }
  EXPECT_THROW(parse_pd("X[1,1,1,2]"), ParseError);
  EXPECT_THROW(parse_pd("X[1,2,3,4];X[1,2,3,9]"), ParseError);
}

TEST(ParsePd, SyntaxErrorsCarryPosition) {
  try {
    parse_pd("X[1,2,1 2]");
    FAIL();
  } catch (const ParseError& e) {
    EXPECT_EQ(e.position(), 8u);
  }
  EXPECT_THROW(parse_pd("Y[1,2,1,2]"), ParseError);
  EXPECT_THROW(parse_pd("X[1,2,1,2"), ParseError);
  EXPECT_THROW(parse_pd("X[0,1,0,1]"), ParseError);
  EXPECT_THROW(parse_pd("X[1,2,1,2]X[3,4,3,4]"), ParseError);
}

TEST(ParseBraid, Basic) {
  const BraidWord b = parse_braid("1 1 1");
  EXPECT_EQ(b.strands, 2);
  EXPECT_EQ(b.letters, (std::vector<int>{1, 1, 1}));
  const BraidWord h = parse_braid("s=5: 1 -2");
  EXPECT_EQ(h.strands, 5);
  EXPECT_EQ(h.letters, (std::vector<int>{1, -2}));
}

TEST(ParseBraid, PositiveEleven) {
  const BraidWord b = parse_braid("1 1 2 2 1 3 2 2 2 3 3");
  EXPECT_EQ(b.strands, 4);
  EXPECT_EQ(b.letters.size(), 11u);
  for (int l : b.letters) EXPECT_GT(l, 0);
}

TEST(ParseBraid, Errors) {
  EXPECT_THROW(parse_braid("1 0 2"), ParseError);
  EXPECT_THROW(parse_braid("s=2: 1 3"), ParseError);
  EXPECT_THROW(parse_braid("s=0:"), ParseError);
  EXPECT_THROW(parse_braid("1 x"), ParseError);
}

TEST(ParseBraid, RoundTrip) {
  for (const std::string w : {"1 1 1", "1 -2 1 -2", "s=4: 1 -3"}) {
    const BraidWord b = parse_braid(w);
    EXPECT_EQ(parse_braid(render_braid(b)), b) << w;
  }
}

TEST(KnotTable, Records) {
  const auto table = parse_knot_table(
      R"({"name":"3_1","braid":"1 1 1","signature":-2}

{"name":"4_1","pd":"X[4,2,5,1];X[8,6,1,5];X[6,3,7,4];X[2,7,3,8]","volume":2.0298832128,"alexander":"-1*t^-1+3*t^0-1*t^1"}
{"name":"5_1","braid":"1 1 1 1 1","alternating":true})");
  ASSERT_EQ(table.size(), 3u);
  EXPECT_FALSE(table[0].pd.has_value());
  EXPECT_EQ(*table[0].signature, -2);
  EXPECT_NEAR(*table[1].volume, 2.0298832128, 1e-12);
  EXPECT_EQ(table[1].alexander->coeff(0), 3);
  EXPECT_TRUE(*table[2].alternating);
}

TEST(KnotTable, Errors) {
  EXPECT_THROW(parse_knot_table(R"({"name":"a"})"), ParseError);
  EXPECT_THROW(parse_knot_table("{\"name\":\"a\",\"braid\":\"1 1 1\"}\n{\"name\":\"a\",\"braid\":\"1\"}"), ParseError);
  EXPECT_THROW(parse_knot_table(R"({"name":"a","braid":"1 1 1")"), ParseError);
  EXPECT_THROW(parse_knot_table(R"({"name":"a","pd":"X[1,2]"})"), ParseError);
  EXPECT_THROW(parse_knot_table(R"({"name":"a","braid":"1","volume":-1})"), ParseError);
  EXPECT_THROW(load_knot_table("/nonexistent/table.jsonl"), std::runtime_error);
}

TEST(KnotTable, Census) {
  const auto& table = fixtures::census();
  ASSERT_EQ(table.size(), 249u);
  int with_pd = 0, with_braid = 0;
  for (const auto& r : table) {
    with_pd += r.pd.has_value();
    with_braid += r.braid.has_value();
  }
  EXPECT_EQ(with_pd, 249);
  EXPECT_EQ(with_braid, 249);
  EXPECT_EQ(table.front().name, "3_1");
  EXPECT_EQ(table.back().name, "10_165");
}
