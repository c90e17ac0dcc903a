#include <numeric>

#include <gtest/gtest.h>

#include "zerosum/davenport.hpp"

using namespace zerosum;

TEST(Davenport, SmallGroups) {
  const std::pair<const char*, int> cases[] = {{"C:1", 1},       {"C:2", 2},     {"C:9", 9},     {"CxC:2,2", 3},
                                               {"CxC:2,4", 5},   {"CxC:3,3", 5}, {"D:3", 4},     {"D:4", 5},
                                               {"D:7", 8},       {"Q:2", 5},     {"Q:3", 7},     {"M:3,2,2", 4},
                                               {"M:5,4,2", 8},   {"M:7,3,2", 9}, {"CxC:2,2,2", 4}};
  for (const auto& [spec, expected] : cases) {
    EXPECT_EQ(davenport(Group::build(spec)), expected) << spec;
  }
}

TEST(Davenport, WitnessIsFreeAndMaximal) {
  for (const char* spec : {"D:5", "Q:3", "CxC:2,4", "M:7,3,2"}) {
    const auto g = Group::build(spec);
    const SearchResult r = max_free_length(g);
    ASSERT_TRUE(r.exact());
    EXPECT_EQ(r.witness.length(), static_cast<std::size_t>(r.max_free_length));
    EXPECT_TRUE(is_product1_free(r.witness));
    for (Element e : g->elements()) EXPECT_FALSE(is_product1_free(concat(r.witness, GSequence(g, {e}))));
  }
}

TEST(Davenport, ParallelismDoesNotChangeResult) {
  for (const char* spec : {"D:6", "Q:4", "CxC:3,6"}) {
    const auto g = Group::build(spec);
    const auto serial = max_free_length(g, {kDefaultBudget, 1});
    const auto parallel = max_free_length(g, {kDefaultBudget, 4});
    EXPECT_EQ(serial.davenport, parallel.davenport) << spec;
    EXPECT_EQ(serial.witness, parallel.witness) << spec;
  }
}

TEST(Davenport, BudgetExhaustion) {
  const auto g = Group::build("CxC:6,6");
  const SearchResult r = max_free_length(g, {100, 1});
  EXPECT_FALSE(r.exact());
  EXPECT_EQ(r.davenport, 0);
  EXPECT_GT(r.max_free_length, 0);
  EXPECT_NE(r.describe().find("unknown above length"), std::string::npos);
  try {
    davenport(g, {100, 1});
    FAIL();
  } catch (const BudgetExhausted& e) {
    EXPECT_EQ(e.known_lower_bound(), r.max_free_length);
  }
}

TEST(Davenport, KnownClosedForms) {
  EXPECT_EQ(known_davenport(GroupSpec::cyclic(17)), 17);
  EXPECT_EQ(known_davenport(GroupSpec::product({3, 6})), 8);
  EXPECT_EQ(known_davenport(GroupSpec::product({2, 2, 4})), 6);
  EXPECT_EQ(known_davenport(GroupSpec::dihedral(9)), 10);
  EXPECT_EQ(known_davenport(GroupSpec::dicyclic(5)), 11);
  EXPECT_EQ(known_davenport(GroupSpec::metacyclic(7, 3, 2)), 9);
  EXPECT_FALSE(known_davenport(GroupSpec::product({2, 3, 5})).has_value());
}

TEST(Davenport, RosterEntriesHaveClosedForms) {
  for (const auto& [family, spec] : known_constants_roster()) {
    EXPECT_TRUE(known_davenport(spec).has_value()) << spec.to_string();
  }
}

TEST(Enumeration, CyclicExtremalSequences) {
  // Length n-1 zero-sum-free sequences in C_n are (g)^(n-1) with g a generator.
  for (std::uint32_t n = 2; n <= 12; ++n) {
    const auto g = Group::build(GroupSpec::cyclic(n));
    const auto e = enumerate_free(g, n - 1);
    ASSERT_TRUE(e.complete);
    std::size_t phi = 0;
    for (std::uint32_t k = 1; k <= n; ++k) phi += std::gcd(k, n) == 1;
    EXPECT_EQ(e.sequences.size(), phi) << n;
    EXPECT_TRUE(enumerate_free(g, n).sequences.empty());
  }
}

TEST(Enumeration, ParallelismDoesNotChangeSet) {
  const auto g = Group::build("M:7,3,2");
  const auto a = enumerate_free(g, 8, {kDefaultBudget, 1});
  const auto b = enumerate_free(g, 8, {kDefaultBudget, 3});
  EXPECT_EQ(a.sequences, b.sequences);
  EXPECT_EQ(a.sequences.size(), 336U);
}
