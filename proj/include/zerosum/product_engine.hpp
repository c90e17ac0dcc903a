#pragma once

// Exact subsequence-product reachability.
//
// For a multiset U let P(U) be the set of products of U's elements taken in
// every possible order. Every ordering of U ends in some element h, and the
// prefix is an ordering of U - h, so
//
//     P(U) = union over distinct h in U of  P(U - h) * h,   P({}) = {1}.
//
// The DP evaluates this over all sub-multisets of S, indexed by their count
// vectors in mixed radix. The most recently added distinct element is the
// most significant digit, which makes appending one more element an
// append-only operation on the state vector: the new states are exactly
// those whose top digit reaches its new maximum. Search code relies on this
// to extend and roll back in O(new states).

#include <algorithm>
#include <cstdint>
#include <memory>
#include <numeric>
#include <string>
#include <vector>

#include "zerosum/element_set.hpp"
#include "zerosum/error.hpp"
#include "zerosum/group.hpp"
#include "zerosum/sequence.hpp"

namespace zerosum {

/// Right multiplication a -> a*h on bitsets, for every h in the group.
template <std::size_t Words>
class RightAction {
 public:
  using Bits = ElementBits<Words>;
  static constexpr bool kUsesLookup = Words <= 2;
  static constexpr std::size_t kBytes = Words * 8;

  explicit RightAction(GroupPtr group) : group_(std::move(group)) {
    if (group_->order() > Words * 64) throw CostGuardError("bitset too narrow for " + group_->spec().to_string());
    if (!group_->has_table()) throw CostGuardError("engine needs a tabulated group, got " + group_->spec().to_string());
    if constexpr (kUsesLookup) {
      const std::uint32_t order = group_->order();
      lookup_.resize(std::size_t(order) * kBytes * 256);
      for (std::uint32_t h = 0; h < order; ++h) {
        for (std::size_t p = 0; p < kBytes; ++p) {
          Bits* row = &lookup_[(std::size_t(h) * kBytes + p) * 256];
          for (std::uint32_t v = 1; v < 256; ++v) {
            const std::uint32_t low = static_cast<std::uint32_t>(std::countr_zero(v));
            row[v] = row[v & (v - 1)];
            const std::uint32_t a = static_cast<std::uint32_t>(p * 8 + low);
            if (a < order) row[v].set(group_->mul(Element{a}, Element{h}).index);
          }
        }
      }
    }
  }

  /// {a * h : a in src}
  Bits times(const Bits& src, Element h) const {
    Bits out;
    if constexpr (kUsesLookup) {
      const Bits* base = &lookup_[std::size_t(h.index) * kBytes * 256];
      for (std::size_t w = 0; w < Words; ++w) {
        std::uint64_t word = src.words[w];
        for (std::size_t b = 0; word != 0; ++b, word >>= 8) {
          const auto byte = static_cast<std::uint32_t>(word & 0xFFU);
          if (byte) out |= base[(w * 8 + b) * 256 + byte];
        }
      }
    } else {
      const auto table = group_->table();
      const std::uint32_t order = group_->order();
      src.for_each([&](std::uint32_t a) { out.set(table[std::size_t(a) * order + h.index]); });
    }
    return out;
  }

  const Group& group() const { return *group_; }
  const GroupPtr& group_ptr() const { return group_; }

 private:
  GroupPtr group_;
  std::vector<Bits> lookup_;
};

/// Incremental sub-multiset DP. Elements are appended one copy at a time;
/// each append must repeat the last distinct element or introduce a new one.
template <std::size_t Words>
class SubsetProductDp {
 public:
  using Bits = ElementBits<Words>;

  struct Checkpoint {
    std::size_t states = 0;
    std::size_t digits = 0;
    std::uint32_t last_count = 0;
    Bits reach;
    bool identity_reached = false;
  };

  explicit SubsetProductDp(std::shared_ptr<const RightAction<Words>> action) : action_(std::move(action)) {
    Bits one;
    one.set(0);
    states_.push_back(one);
  }

  Checkpoint checkpoint() const {
    return {states_.size(), digits_.size(), digits_.empty() ? 0U : digits_.back().count, reach_, identity_reached_};
  }

  void rollback(const Checkpoint& cp) {
    states_.resize(cp.states);
    digits_.resize(cp.digits);
    if (!digits_.empty()) digits_.back().count = cp.last_count;
    reach_ = cp.reach;
    identity_reached_ = cp.identity_reached;
  }

  /// Adds one copy of e. Returns false once some nonempty sub-multiset can
  /// multiply to 1. With stop_at_identity the new block may be left
  /// incomplete, so the caller must roll back before reusing the DP.
  bool append(Element e, bool stop_at_identity) {
    if (digits_.empty() || digits_.back().element != e) {
      for (const auto& d : digits_) {
        if (d.element == e) {
          throw SequenceError("SubsetProductDp::append: element appended out of order");
        }
      }
      digits_.push_back({e, 0, states_.size()});
    }
    Digit& top = digits_.back();
    ++top.count;
    const std::size_t block = top.stride;
    const std::size_t base = states_.size();
    states_.resize(base + block);
    const std::size_t lower = digits_.size() - 1;
    counter_.assign(lower, 0);
    const auto& act = *action_;
    for (std::size_t j = 0; j < block; ++j) {
      const std::size_t idx = base + j;
      Bits acc = act.times(states_[idx - block], e);
      for (std::size_t i = 0; i < lower; ++i) {
        if (counter_[i] > 0) acc |= act.times(states_[idx - digits_[i].stride], digits_[i].element);
      }
      states_[idx] = acc;
      reach_ |= acc;
      if (acc.test(0)) {
        identity_reached_ = true;
        if (stop_at_identity) return false;
      }
      for (std::size_t i = 0; i < lower; ++i) {
        if (++counter_[i] <= digits_[i].count) break;
        counter_[i] = 0;
      }
    }
    return !identity_reached_;
  }

  /// Union of P(U) over nonempty sub-multisets U appended so far.
  const Bits& reachable() const noexcept { return reach_; }
  bool identity_reached() const noexcept { return identity_reached_; }
  std::size_t state_count() const noexcept { return states_.size(); }
  std::size_t distinct() const noexcept { return digits_.size(); }

  /// Products of the whole appended multiset, in every order.
  const Bits& full_products() const { return states_.back(); }

 private:
  struct Digit {
    Element element;
    std::uint32_t count;
    std::size_t stride;
  };

  std::shared_ptr<const RightAction<Words>> action_;
  std::vector<Bits> states_;
  std::vector<Digit> digits_;
  std::vector<std::uint32_t> counter_;
  Bits reach_;
  bool identity_reached_ = false;
};

/// Cost bounds for one-shot reachability queries.
inline constexpr std::size_t kMaxDistinctElements = 24;
inline constexpr std::uint64_t kMaxDpStates = 100'000'000;
/// Longest sequence the permutation oracle accepts.
inline constexpr std::size_t kMaxOracleLength = 8;

namespace detail {

inline void guard_state_space(const GSequence& s) {
  const auto counts = s.counts();
  if (counts.size() > kMaxDistinctElements) {
    throw CostGuardError("sequence has " + std::to_string(counts.size()) + " distinct elements; the limit is " +
                         std::to_string(kMaxDistinctElements));
  }
  std::uint64_t states = 1;
  for (const auto& [e, c] : counts) {
    states *= c + 1;
    if (states > kMaxDpStates) {
      throw CostGuardError("sub-multiset state space exceeds the limit of " + std::to_string(kMaxDpStates) +
                           " states");
    }
  }
}

template <std::size_t Words, class Stop>
SubsetProductDp<Words> run_dp(const GSequence& s, Stop&& stop) {
  auto action = std::make_shared<const RightAction<Words>>(s.group_ptr());
  SubsetProductDp<Words> dp(action);
  for (Element e : s.elements()) {
    dp.append(e, false);
    if (stop(dp)) break;
  }
  return dp;
}

}  // namespace detail

/// Every element that is the product, in some order, of a nonempty sub-multiset of s.
inline ReachableSet reachable_products(const GSequence& s) {
  if (s.empty()) throw SequenceError("reachable_products: empty sequence");
  detail::guard_state_space(s);
  return dispatch_width(s.group().order(), [&](auto width) {
    constexpr std::size_t W = decltype(width)::value;
    auto dp = detail::run_dp<W>(s, [](const auto&) { return false; });
    return ReachableSet(s.group_ptr(), dp.reachable());
  });
}

/// True iff no nonempty sub-multiset multiplies to 1 in any order.
inline bool is_product1_free(const GSequence& s) {
  if (s.empty()) return true;
  detail::guard_state_space(s);
  return dispatch_width(s.group().order(), [&](auto width) {
    constexpr std::size_t W = decltype(width)::value;
    auto dp = detail::run_dp<W>(s, [](const auto& d) { return d.identity_reached(); });
    return !dp.identity_reached();
  });
}

/// True iff some nonempty sub-multiset multiplies, in some order, into targets.
inline bool has_product_in(const GSequence& s, const std::vector<Element>& targets) {
  if (targets.empty()) throw SequenceError("has_product_in: empty target set");
  if (s.empty()) return false;
  const ReachableSet reach = reachable_products(s);
  return std::any_of(targets.begin(), targets.end(), [&](Element t) { return reach.contains(t); });
}

/// Brute force over every ordering of every nonempty subset of positions.
inline ReachableSet oracle_reachable(const GSequence& s) {
  if (s.length() > kMaxOracleLength) {
    throw CostGuardError("oracle_reachable: length " + std::to_string(s.length()) + " exceeds " +
                         std::to_string(kMaxOracleLength));
  }
  const Group& g = s.group();
  ReachableSet out(s.group_ptr());
  const auto& elems = s.elements();
  const std::size_t len = elems.size();
  for (std::uint32_t mask = 1; mask < (1U << len); ++mask) {
    std::vector<std::size_t> positions;
    for (std::size_t i = 0; i < len; ++i) {
      if (mask >> i & 1U) positions.push_back(i);
    }
    do {
      Element acc = g.identity();
      for (std::size_t p : positions) acc = g.mul(acc, elems[p]);
      out.insert(acc);
    } while (std::next_permutation(positions.begin(), positions.end()));
  }
  return out;
}

}  // namespace zerosum
