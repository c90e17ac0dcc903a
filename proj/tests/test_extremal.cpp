#include <gtest/gtest.h>

#include "zerosum/extremal.hpp"

using namespace zerosum;

TEST(Extremal, DihedralExactMatch) {
  for (std::uint32_t n : {2U, 4U, 5U, 6U, 7U, 8U}) {
    const auto r = verify_theorem(Group::build(GroupSpec::dihedral(n)));
    EXPECT_EQ(r.verdict(), Verdict::ExactMatch) << n;
    EXPECT_TRUE(r.missing.empty());
    EXPECT_TRUE(r.extra.empty());
  }
}

TEST(Extremal, DihedralOrderSixResolvedByEnumeration) {
  const auto r = verify_theorem(Group::build("D:3"));
  EXPECT_EQ(r.verdict(), Verdict::ExactMatch);
  EXPECT_EQ(r.enumerated_count, 7U);
  EXPECT_EQ(r.predicted_count, 7U);
  EXPECT_FALSE(r.notes.empty());
}

TEST(Extremal, QuaternionGroup) {
  const auto r = verify_theorem(Group::build("Q:2"));
  EXPECT_EQ(r.verdict(), Verdict::ExactMatch);
  EXPECT_EQ(r.enumerated_count, 24U);
}

TEST(Extremal, DicyclicExtrasAreInverseImages) {
  for (std::uint32_t n = 3; n <= 5; ++n) {
    const auto g = Group::build(GroupSpec::dicyclic(n));
    const auto r = verify_theorem(g);
    EXPECT_TRUE(r.missing.empty()) << n;
    EXPECT_EQ(r.verdict(), Verdict::DocumentedDiscrepancy) << n;
    EXPECT_TRUE(extras_are_inverse_images(*g, r)) << n;
    EXPECT_EQ(r.extra.size(), r.predicted_count);
  }
}

TEST(Extremal, MetacyclicAndCyclic) {
  for (const char* spec : {"M:3,2,2", "M:5,2,4", "M:5,4,2", "M:7,3,2", "C:2", "C:7", "C:8"}) {
    const auto r = verify_theorem(Group::build(spec));
    EXPECT_EQ(r.verdict(), Verdict::ExactMatch) << spec;
  }
}

TEST(Extremal, FamilyMembersAreFreeAndExtremal) {
  for (const char* spec : {"D:6", "Q:4", "M:7,3,2"}) {
    const auto g = Group::build(spec);
    const auto family = family_for(*g);
    const int d = *known_davenport(g->spec());
    for (const auto& s : family.members) {
      EXPECT_EQ(s.length(), static_cast<std::size_t>(d - 1)) << spec;
      EXPECT_TRUE(is_product1_free(s)) << spec << " " << s.to_string();
    }
  }
}

TEST(Extremal, MissingMakesFailure) {
  VerificationReport r;
  EXPECT_EQ(r.verdict(), Verdict::ExactMatch);
  r.extra.push_back(GSequence(Group::build("C:2")));
  EXPECT_EQ(r.verdict(), Verdict::DocumentedDiscrepancy);
  r.missing.push_back(GSequence(Group::build("C:2")));
  EXPECT_EQ(r.verdict(), Verdict::Failure);
  EXPECT_STREQ(to_string(Verdict::Failure), "failure");
}

TEST(SignedSubsetSum, AllSmallModuli) {
  for (std::uint32_t n = 2; n <= 16; ++n) {
    const auto r = check_weighted_lemma(n);
    EXPECT_EQ(r.verdict(), Verdict::ExactMatch) << n;
  }
}

TEST(SignedSubsetSum, BoundaryNonExample) {
  const auto g = Group::build("C:8");
  const auto r = check_weighted_lemma(8);
  EXPECT_EQ(r.enumerated_count, 4096U);
  const auto target = GSequence::parse(g, "[y, y^2, y^4]");
  EXPECT_NE(std::find(r.witnesses.begin(), r.witnesses.end(), target), r.witnesses.end());
}

TEST(CyclicStructure, Clauses) {
  for (std::uint32_t n = 3; n <= 12; ++n) {
    const auto r = check_cyclic_structure(n);
    EXPECT_EQ(r.verdict(), Verdict::ExactMatch) << n;
  }
}

TEST(CyclicStructure, TenFromTheStatement) {
  const auto g = Group::build("C:10");
  const auto nine = enumerate_free(g, 9).sequences;
  ASSERT_EQ(nine.size(), 4U);
  for (const auto& s : nine) EXPECT_EQ(s.counts().size(), 1U);
  const auto eight = enumerate_free(g, 8).sequences;
  EXPECT_EQ(eight.size(), 8U);
}

TEST(CyclicStructure, BelowHypothesisRecordedNotFailed) {
  const auto r = check_cyclic_structure(6);
  EXPECT_EQ(r.verdict(), Verdict::ExactMatch);
  EXPECT_FALSE(r.witnesses.empty());
}

TEST(MinimalZeroSum, OrderProperty) {
  for (const char* spec : {"C:1", "C:5", "C:12", "CxC:2,2", "CxC:3,3", "CxC:2,4"}) {
    const auto r = check_minimal_zero_sum_order(Group::build(spec));
    EXPECT_EQ(r.verdict(), Verdict::ExactMatch) << spec;
  }
  EXPECT_THROW(check_minimal_zero_sum_order(Group::build("D:3")), GroupError);
}
