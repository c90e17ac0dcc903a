#pragma once

// Sequences over a finite group in the zero-sum sense: finite multisets.
// Order carries no information because product-1 subsequences are taken
// over every ordering, so the normal form is the sorted index list.
//
// Text format:  sequence := '[' [ word { ',' word } ] ']'
//               word     := factor { '*' factor }
//               factor   := name [ '^' integer ]
//               name     := '1' | 'e' | 'x' | 'y' | 'g' digits
// Whitespace is ignored anywhere. Words are evaluated in the group, so
// `y*x` and `x*y^-1` denote the same dihedral element.

#include <algorithm>
#include <cstdint>
#include <iterator>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "zerosum/error.hpp"
#include "zerosum/group.hpp"

namespace zerosum {

class GSequence {
 public:
  GSequence() = default;

  explicit GSequence(GroupPtr group, std::vector<Element> elements = {})
      : group_(std::move(group)), elements_(std::move(elements)) {
    for (Element e : elements_) {
      if (e.index >= group_->order()) {
        throw SequenceError("element index " + std::to_string(e.index) + " outside " + group_->spec().to_string());
      }
    }
    std::sort(elements_.begin(), elements_.end());
  }

  /// Parses the bracketed text form, e.g. `[y, y, x*y^2]`.
  static GSequence parse(GroupPtr group, std::string_view text) {
    const std::string clean = detail::strip_spaces(text);
    if (clean.size() < 2 || clean.front() != '[' || clean.back() != ']') {
      throw ParseError("sequence '" + clean + "': expected '[' word, ... ']'");
    }
    const std::string body = clean.substr(1, clean.size() - 2);
    std::vector<Element> elements;
    if (!body.empty()) {
      for (const auto& word : detail::split(body, ',')) {
        if (word.empty()) throw ParseError("sequence '" + clean + "': empty element between commas");
        elements.push_back(group->parse_element(word));
      }
    }
    return GSequence(std::move(group), std::move(elements));
  }

  /// `x` repeated `count` times.
  static GSequence repeat(GroupPtr group, Element x, std::size_t count) {
    return GSequence(std::move(group), std::vector<Element>(count, x));
  }

  const Group& group() const { return *group_; }
  const GroupPtr& group_ptr() const noexcept { return group_; }
  std::size_t length() const noexcept { return elements_.size(); }
  bool empty() const noexcept { return elements_.empty(); }

  /// Non-decreasing element indices.
  const std::vector<Element>& elements() const noexcept { return elements_; }

  std::size_t multiplicity(Element e) const {
    auto [lo, hi] = std::equal_range(elements_.begin(), elements_.end(), e);
    return static_cast<std::size_t>(hi - lo);
  }

  /// Distinct elements with their multiplicities, in index order.
  std::vector<std::pair<Element, std::size_t>> counts() const {
    std::vector<std::pair<Element, std::size_t>> out;
    for (Element e : elements_) {
      if (!out.empty() && out.back().first == e) {
        ++out.back().second;
      } else {
        out.emplace_back(e, 1);
      }
    }
    return out;
  }

  std::string to_string() const {
    std::string out = "[";
    for (std::size_t i = 0; i < elements_.size(); ++i) {
      if (i > 0) out += ", ";
      out += group_->name(elements_[i]);
    }
    return out + "]";
  }

  friend bool operator==(const GSequence& a, const GSequence& b) {
    return same_group(a, b) && a.elements_ == b.elements_;
  }
  /// Lexicographic on the normal form; only meaningful within one group.
  friend bool operator<(const GSequence& a, const GSequence& b) { return a.elements_ < b.elements_; }

  friend bool same_group(const GSequence& a, const GSequence& b) {
    if (a.group_ == b.group_) return true;
    if (!a.group_ || !b.group_) return false;
    return a.group_->spec() == b.group_->spec();
  }

 private:
  GroupPtr group_;
  std::vector<Element> elements_;
};

namespace detail {
inline void require_same_group(const GSequence& a, const GSequence& b, const char* op) {
  if (!same_group(a, b)) {
    throw SequenceError(std::string(op) + ": sequences over different groups (" +
                        (a.group_ptr() ? a.group().spec().to_string() : "none") + " vs " +
                        (b.group_ptr() ? b.group().spec().to_string() : "none") + ")");
  }
}
}  // namespace detail

inline GSequence concat(const GSequence& a, const GSequence& b) {
  detail::require_same_group(a, b, "concat");
  std::vector<Element> merged;
  merged.reserve(a.length() + b.length());
  std::merge(a.elements().begin(), a.elements().end(), b.elements().begin(), b.elements().end(),
             std::back_inserter(merged));
  return GSequence(a.group_ptr(), std::move(merged));
}

/// Multiset difference S T^-1; T must be contained in S.
inline GSequence remove(const GSequence& s, const GSequence& t) {
  detail::require_same_group(s, t, "remove");
  if (!std::includes(s.elements().begin(), s.elements().end(), t.elements().begin(), t.elements().end())) {
    throw SequenceError("remove: " + t.to_string() + " is not a sub-multiset of " + s.to_string());
  }
  std::vector<Element> rest;
  std::set_difference(s.elements().begin(), s.elements().end(), t.elements().begin(), t.elements().end(),
                      std::back_inserter(rest));
  return GSequence(s.group_ptr(), std::move(rest));
}

inline GSequence power(const GSequence& s, long long k) {
  if (k < 0) throw SequenceError("power: negative exponent " + std::to_string(k));
  std::vector<Element> out;
  out.reserve(s.length() * static_cast<std::size_t>(k));
  for (Element e : s.elements()) out.insert(out.end(), static_cast<std::size_t>(k), e);
  return GSequence(s.group_ptr(), std::move(out));
}

/// Elements lying in <y> (dihedral and dicyclic groups).
inline GSequence h_part(const GSequence& s) {
  std::vector<Element> out;
  for (Element e : s.elements()) {
    if (s.group().coset(e) == Coset::H) out.push_back(e);
  }
  return GSequence(s.group_ptr(), std::move(out));
}

/// Elements lying in x<y> (dihedral and dicyclic groups).
inline GSequence n_part(const GSequence& s) {
  std::vector<Element> out;
  for (Element e : s.elements()) {
    if (s.group().coset(e) == Coset::N) out.push_back(e);
  }
  return GSequence(s.group_ptr(), std::move(out));
}

/// Pointwise inverse S^-1 = (g_1^-1, ..., g_l^-1).
inline GSequence inverted(const GSequence& s) {
  std::vector<Element> out;
  out.reserve(s.length());
  for (Element e : s.elements()) out.push_back(s.group().inverse(e));
  return GSequence(s.group_ptr(), std::move(out));
}

/// Forward range over the distinct nonempty sub-multisets of a sequence,
/// visited as a mixed-radix counter over the multiplicities.
class SubMultisets {
 public:
  explicit SubMultisets(const GSequence& s) : source_(s), counts_(s.counts()) {}

  class iterator {
   public:
    using iterator_category = std::input_iterator_tag;
    using value_type = GSequence;
    using difference_type = std::ptrdiff_t;

    iterator() = default;

    GSequence operator*() const {
      std::vector<Element> out;
      for (std::size_t i = 0; i < digits_.size(); ++i) {
        out.insert(out.end(), digits_[i], (*counts_)[i].first);
      }
      return GSequence(owner_->source_.group_ptr(), std::move(out));
    }

    iterator& operator++() {
      advance();
      return *this;
    }
    void operator++(int) { advance(); }

    friend bool operator==(const iterator& a, const iterator& b) { return a.done_ == b.done_; }

   private:
    friend class SubMultisets;
    explicit iterator(const SubMultisets* owner)
        : owner_(owner), counts_(&owner->counts_), digits_(owner->counts_.size(), 0), done_(false) {
      advance();
    }

    void advance() {
      for (std::size_t i = 0; i < digits_.size(); ++i) {
        if (digits_[i] < (*counts_)[i].second) {
          ++digits_[i];
          return;
        }
        digits_[i] = 0;
      }
      done_ = true;
    }

    const SubMultisets* owner_ = nullptr;
    const std::vector<std::pair<Element, std::size_t>>* counts_ = nullptr;
    std::vector<std::size_t> digits_;
    bool done_ = true;
  };

  iterator begin() const { return iterator(this); }
  iterator end() const { return iterator(); }

  /// prod (mult_i + 1) - 1
  std::uint64_t size() const {
    std::uint64_t total = 1;
    for (const auto& [e, c] : counts_) total *= c + 1;
    return total - 1;
  }

 private:
  GSequence source_;
  std::vector<std::pair<Element, std::size_t>> counts_;
};

inline SubMultisets sub_multisets(const GSequence& s) { return SubMultisets(s); }

}  // namespace zerosum
