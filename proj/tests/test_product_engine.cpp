#include <functional>
#include <random>

#include <gtest/gtest.h>

#include "zerosum/product_engine.hpp"

using namespace zerosum;

namespace {

constexpr std::uint64_t kSeed = 20240601;

/// Every non-decreasing multiset of length 1..max_len over g.
void for_each_multiset(const GroupPtr& g, std::size_t max_len, const std::function<void(const GSequence&)>& f) {
  std::vector<Element> cur;
  std::function<void(std::uint32_t)> rec = [&](std::uint32_t from) {
    if (!cur.empty()) f(GSequence(g, cur));
    if (cur.size() == max_len) return;
    for (std::uint32_t i = from; i < g->order(); ++i) {
      cur.push_back(Element{i});
      rec(i);
      cur.pop_back();
    }
  };
  rec(0);
}

std::vector<GroupPtr> small_groups() {
  std::vector<GroupPtr> out;
  for (const char* spec : {"C:2", "C:5", "C:8", "C:16", "D:2", "D:3", "D:4", "D:5", "D:6", "D:7", "D:8", "Q:2",
                           "Q:3", "Q:4", "M:3,2,2", "M:5,2,4", "CxC:2,2", "CxC:2,4", "CxC:4,4", "CxC:2,2,2,2"}) {
    out.push_back(Group::build(spec));
  }
  return out;
}

GSequence random_sequence(const GroupPtr& g, std::mt19937_64& rng, std::size_t max_len) {
  std::uniform_int_distribution<std::uint32_t> pick(0, g->order() - 1);
  std::uniform_int_distribution<std::size_t> len(1, max_len);
  std::vector<Element> elems(len(rng));
  for (auto& e : elems) e = Element{pick(rng)};
  return GSequence(g, std::move(elems));
}

}  // namespace

TEST(ProductEngine, OracleExhaustiveSmallSequences) {
  for (const char* spec : {"D:3", "D:4", "Q:2"}) {
    const auto g = Group::build(spec);
    std::size_t cases = 0;
    for_each_multiset(g, 4, [&](const GSequence& s) {
      ++cases;
      ASSERT_EQ(reachable_products(s), oracle_reachable(s)) << spec << " " << s.to_string();
    });
    EXPECT_GT(cases, 0U);
  }
}

TEST(ProductEngine, OracleRandomSuite) {
  const auto groups = small_groups();
  std::mt19937_64 rng(kSeed);
  std::uniform_int_distribution<std::size_t> which(0, groups.size() - 1);
  for (int i = 0; i < 1000; ++i) {
    const auto& g = groups[which(rng)];
    ASSERT_LE(g->order(), 16U);
    const GSequence s = random_sequence(g, rng, 7);
    ASSERT_EQ(reachable_products(s), oracle_reachable(s)) << g->spec().to_string() << " " << s.to_string();
  }
}

TEST(ProductEngine, KnownValues) {
  const auto g = Group::build("D:4");
  const auto s = GSequence::parse(g, "[y, y, x]");
  EXPECT_EQ(reachable_products(s).to_string(), "{y, y^2, x, x*y, x*y^2, x*y^3}");
  EXPECT_TRUE(is_product1_free(s));
  EXPECT_FALSE(is_product1_free(GSequence::parse(g, "[y, y, y, y]")));
  EXPECT_FALSE(is_product1_free(GSequence::parse(g, "[x, x]")));
  EXPECT_TRUE(is_product1_free(GSequence(g)));
  EXPECT_THROW(reachable_products(GSequence(g)), SequenceError);
}

TEST(ProductEngine, NonAbelianOrderMatters) {
  // x*y*x*y^3 = y^-2 but x*x*y*y^3 = 1: the order of factors must be searched.
  const auto g = Group::build("D:4");
  EXPECT_FALSE(is_product1_free(GSequence::parse(g, "[y, y^3, x, x]")));
  const auto q = Group::build("Q:2");
  EXPECT_TRUE(reachable_products(GSequence::parse(q, "[x, y]")).contains(q->word(1, 1)));
  EXPECT_TRUE(reachable_products(GSequence::parse(q, "[x, y]")).contains(q->word(1, 3)));
}

TEST(ProductEngine, HasProductIn) {
  const auto g = Group::build("C:6");
  const auto s = GSequence::parse(g, "[y^2, y^3]");
  EXPECT_TRUE(has_product_in(s, {g->y_power(5)}));
  EXPECT_FALSE(has_product_in(s, {g->y_power(1), g->identity()}));
  EXPECT_THROW(has_product_in(s, {}), Error);
}

TEST(ProductEngine, Monotonicity) {
  const auto groups = small_groups();
  std::mt19937_64 rng(kSeed + 1);
  std::uniform_int_distribution<std::size_t> which(0, groups.size() - 1);
  for (int i = 0; i < 500; ++i) {
    const auto& g = groups[which(rng)];
    const GSequence s = random_sequence(g, rng, 6);
    std::uniform_int_distribution<std::uint32_t> pick(0, g->order() - 1);
    const GSequence t = concat(s, GSequence(g, {Element{pick(rng)}}));
    ASSERT_TRUE(reachable_products(s).is_subset_of(reachable_products(t)));
    if (!is_product1_free(s)) {
      ASSERT_FALSE(is_product1_free(t));
    }
  }
}

TEST(ProductEngine, InverseClosure) {
  const auto groups = small_groups();
  std::mt19937_64 rng(kSeed + 2);
  std::uniform_int_distribution<std::size_t> which(0, groups.size() - 1);
  for (int i = 0; i < 500; ++i) {
    const auto& g = groups[which(rng)];
    const GSequence s = random_sequence(g, rng, 8);
    ASSERT_EQ(is_product1_free(s), is_product1_free(inverted(s))) << s.to_string();
    // reach(S^-1) = reach(S)^-1
    const auto r = reachable_products(s);
    const auto ri = reachable_products(inverted(s));
    for (Element e : g->elements()) ASSERT_EQ(r.contains(e), ri.contains(g->inverse(e)));
  }
}

TEST(ProductEngine, AbelianCollapse) {
  // In an abelian group the products are exactly the sums of nonempty sub-multisets.
  for (const char* spec : {"C:7", "C:12", "CxC:2,4", "CxC:3,3", "D:2"}) {
    const auto g = Group::build(spec);
    std::mt19937_64 rng(kSeed + 3);
    for (int i = 0; i < 200; ++i) {
      const GSequence s = random_sequence(g, rng, 10);
      ReachableSet expected(g);
      for (const auto& sub : sub_multisets(s)) {
        Element p = g->identity();
        for (Element e : sub.elements()) p = g->mul(p, e);
        expected.insert(p);
      }
      ASSERT_EQ(reachable_products(s), expected) << spec << " " << s.to_string();
    }
  }
}

TEST(ProductEngine, WidthDispatchAcrossOrders) {
  // Orders that land in different bitset widths.
  for (const char* spec : {"C:64", "C:65", "D:100", "Q:64", "C:1000", "D:1500"}) {
    const auto g = Group::build(spec);
    const auto s = GSequence::parse(g, "[y, y, y]");
    const auto r = reachable_products(s);
    EXPECT_EQ(r.size(), 3U) << spec;
    EXPECT_TRUE(r.contains(g->y_power(3)));
  }
  EXPECT_THROW(reachable_products(GSequence::parse(Group::build("C:5000"), "[y]")), CostGuardError);
}
