#include <gtest/gtest.h>

#include "zerosum/sequence.hpp"

using namespace zerosum;

TEST(Sequence, ParseNormalizesOrder) {
  const auto g = Group::build("D:4");
  const auto a = GSequence::parse(g, "[x*y^2, y, y]");
  const auto b = GSequence::parse(g, "[y,y,x*y^2]");
  EXPECT_EQ(a, b);
  EXPECT_EQ(a.to_string(), "[y, y, x*y^2]");
  EXPECT_EQ(a.length(), 3U);
  EXPECT_EQ(a.multiplicity(g->y_power(1)), 2U);
  EXPECT_TRUE(GSequence::parse(g, "[]").empty());
}

TEST(Sequence, RoundTrip) {
  for (const char* spec : {"D:5", "Q:3", "M:7,3,2", "CxC:2,4", "C:9"}) {
    const auto g = Group::build(spec);
    std::vector<Element> elems;
    for (Element e : g->elements()) elems.insert(elems.end(), e.index % 3 + 1, e);
    const GSequence s(g, elems);
    EXPECT_EQ(GSequence::parse(g, s.to_string()), s) << spec;
  }
}

TEST(Sequence, ParseErrors) {
  const auto g = Group::build("D:4");
  EXPECT_THROW(GSequence::parse(g, "y, y"), ParseError);
  EXPECT_THROW(GSequence::parse(g, "[y,,y]"), ParseError);
  EXPECT_THROW(GSequence::parse(g, "[q]"), ParseError);
  EXPECT_THROW(GSequence(g, {Element{99}}), SequenceError);
}

TEST(Sequence, Algebra) {
  const auto g = Group::build("D:4");
  const auto s = GSequence::parse(g, "[y, x]");
  const auto t = GSequence::parse(g, "[y, y^3]");
  EXPECT_EQ(concat(s, t), GSequence::parse(g, "[y, y, y^3, x]"));
  EXPECT_EQ(remove(concat(s, t), t), s);
  EXPECT_THROW(remove(s, t), SequenceError);
  EXPECT_EQ(power(s, 3).length(), 6U);
  EXPECT_EQ(power(s, 0).length(), 0U);
  EXPECT_THROW(power(s, -1), SequenceError);
  EXPECT_EQ(h_part(s), GSequence::parse(g, "[y]"));
  EXPECT_EQ(n_part(s), GSequence::parse(g, "[x]"));
  EXPECT_EQ(inverted(s), GSequence::parse(g, "[y^3, x]"));
  const auto other = GSequence::parse(Group::build("D:5"), "[y]");
  EXPECT_THROW(concat(s, other), SequenceError);
}

TEST(Sequence, SubMultisetsCount) {
  const auto g = Group::build("C:5");
  const auto s = GSequence::parse(g, "[y, y, y^2, y^3, y^3, y^3]");
  const auto subs = sub_multisets(s);
  EXPECT_EQ(subs.size(), 3U * 2U * 4U - 1U);
  std::size_t n = 0;
  std::set<std::vector<Element>> seen;
  for (const auto& sub : subs) {
    ++n;
    EXPECT_FALSE(sub.empty());
    seen.insert(sub.elements());
  }
  EXPECT_EQ(n, subs.size());
  EXPECT_EQ(seen.size(), subs.size());
}
