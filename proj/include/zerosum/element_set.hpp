#pragma once

#include <array>
#include <bit>
#include <cstdint>
#include <string>
#include <type_traits>
#include <utility>
#include <vector>

#include "zerosum/error.hpp"
#include "zerosum/group.hpp"

namespace zerosum {

/// Fixed-width bitset over element indices; Words * 64 >= |G|.
template <std::size_t Words>
struct ElementBits {
  std::array<std::uint64_t, Words> words{};

  void set(std::uint32_t i) noexcept { words[i >> 6] |= std::uint64_t{1} << (i & 63U); }
  bool test(std::uint32_t i) const noexcept { return (words[i >> 6] >> (i & 63U)) & 1U; }

  bool any() const noexcept {
    for (auto w : words) {
      if (w) return true;
    }
    return false;
  }

  std::uint32_t count() const noexcept {
    std::uint32_t c = 0;
    for (auto w : words) c += static_cast<std::uint32_t>(std::popcount(w));
    return c;
  }

  ElementBits& operator|=(const ElementBits& o) noexcept {
    for (std::size_t i = 0; i < Words; ++i) words[i] |= o.words[i];
    return *this;
  }

  bool intersects(const ElementBits& o) const noexcept {
    for (std::size_t i = 0; i < Words; ++i) {
      if (words[i] & o.words[i]) return true;
    }
    return false;
  }

  template <class F>
  void for_each(F&& f) const {
    for (std::size_t i = 0; i < Words; ++i) {
      std::uint64_t w = words[i];
      while (w) {
        f(static_cast<std::uint32_t>(i * 64 + std::countr_zero(w)));
        w &= w - 1;
      }
    }
  }

  friend bool operator==(const ElementBits&, const ElementBits&) = default;
};

/// Largest group order the bitset-based engines accept.
inline constexpr std::uint32_t kMaxEngineOrder = 4096;

/// Calls f(std::integral_constant<std::size_t, W>{}) with the smallest
/// supported word count W such that 64 W >= order.
template <class F>
decltype(auto) dispatch_width(std::uint32_t order, F&& f) {
  if (order <= 64) return f(std::integral_constant<std::size_t, 1>{});
  if (order <= 128) return f(std::integral_constant<std::size_t, 2>{});
  if (order <= 256) return f(std::integral_constant<std::size_t, 4>{});
  if (order <= 512) return f(std::integral_constant<std::size_t, 8>{});
  if (order <= 1024) return f(std::integral_constant<std::size_t, 16>{});
  if (order <= 2048) return f(std::integral_constant<std::size_t, 32>{});
  if (order <= kMaxEngineOrder) return f(std::integral_constant<std::size_t, 64>{});
  throw CostGuardError("group order " + std::to_string(order) + " exceeds the engine limit " +
                       std::to_string(kMaxEngineOrder));
}

/// Set of elements of one group, e.g. the products reachable from a sequence.
class ReachableSet {
 public:
  ReachableSet() = default;
  explicit ReachableSet(GroupPtr group) : group_(std::move(group)), words_((group_->order() + 63) / 64, 0) {}

  template <std::size_t Words>
  ReachableSet(GroupPtr group, const ElementBits<Words>& bits) : ReachableSet(std::move(group)) {
    for (std::size_t i = 0; i < words_.size(); ++i) words_[i] = bits.words[i];
  }

  void insert(Element e) { words_[e.index >> 6] |= std::uint64_t{1} << (e.index & 63U); }
  bool contains(Element e) const { return (words_[e.index >> 6] >> (e.index & 63U)) & 1U; }

  std::size_t size() const {
    std::size_t c = 0;
    for (auto w : words_) c += static_cast<std::size_t>(std::popcount(w));
    return c;
  }
  bool empty() const { return size() == 0; }

  std::vector<Element> members() const {
    std::vector<Element> out;
    for (std::size_t i = 0; i < words_.size(); ++i) {
      std::uint64_t w = words_[i];
      while (w) {
        out.emplace_back(static_cast<std::uint32_t>(i * 64 + std::countr_zero(w)));
        w &= w - 1;
      }
    }
    return out;
  }

  bool is_subset_of(const ReachableSet& o) const {
    for (std::size_t i = 0; i < words_.size(); ++i) {
      if (words_[i] & ~o.words_[i]) return false;
    }
    return true;
  }

  const Group& group() const { return *group_; }

  std::string to_string() const {
    std::string out = "{";
    bool first = true;
    for (Element e : members()) {
      if (!first) out += ", ";
      first = false;
      out += group_->name(e);
    }
    return out + "}";
  }

  friend bool operator==(const ReachableSet& a, const ReachableSet& b) { return a.words_ == b.words_; }

 private:
  GroupPtr group_;
  std::vector<std::uint64_t> words_;
};

}  // namespace zerosum
