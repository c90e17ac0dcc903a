#pragma once

#include <chrono>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "zerosum/error.hpp"
#include "zerosum/group.hpp"
#include "zerosum/search.hpp"
#include "zerosum/sequence.hpp"

namespace zerosum {

enum class SearchStatus { Exact, BudgetExhausted };

struct SearchResult {
  SearchStatus status = SearchStatus::Exact;
  /// max_free_length + 1; 0 when the search was cut short.
  int davenport = 0;
  /// Exact maximum, or the longest length found before the budget ran out.
  int max_free_length = 0;
  GSequence witness;
  std::uint64_t nodes_expanded = 0;
  std::chrono::milliseconds elapsed{0};

  bool exact() const noexcept { return status == SearchStatus::Exact; }

  std::string describe() const {
    if (exact()) return "D = " + std::to_string(davenport) + " (max free length " + std::to_string(max_free_length) + ")";
    return "unknown above length " + std::to_string(max_free_length) + " (node budget exhausted after " +
           std::to_string(nodes_expanded) + " nodes)";
  }
};

/// Longest product-1-free sequence over g.
///
/// The branch starting with element 1 runs first; its result seeds the
/// lower bound for all remaining first-element branches, which then run
/// independently (in parallel when requested). Results therefore do not
/// depend on the degree of parallelism. Ties keep the lexicographically
/// least witness.
inline SearchResult max_free_length(const GroupPtr& group, const SearchOptions& options = {}) {
  const auto start = std::chrono::steady_clock::now();
  SearchResult result;
  result.witness = GSequence(group);
  if (group->order() > 1) {
    detail::NodeBudget budget(options.budget);
    dispatch_width(group->order(), [&](auto width) {
      constexpr std::size_t W = decltype(width)::value;
      auto action = std::make_shared<const RightAction<W>>(group);
      std::vector<Element> seed_witness;
      std::size_t seed = 0;
      {
        detail::FreeSearch<W> search(action, budget);
        seed = search.maximize_from(Element{1}, 0, seed_witness);
      }
      const std::uint32_t rest = group->order() - 2;
      std::vector<std::size_t> lengths(rest, seed);
      std::vector<std::vector<Element>> witnesses(rest);
      detail::parallel_for(rest, options.parallelism, [&](std::size_t i) {
        detail::FreeSearch<W> search(action, budget);
        lengths[i] = search.maximize_from(Element{static_cast<std::uint32_t>(i + 2)}, seed, witnesses[i]);
      });
      std::size_t best = seed;
      std::vector<Element> best_witness = seed_witness;
      for (std::size_t i = 0; i < rest; ++i) {
        if (lengths[i] > best) {
          best = lengths[i];
          best_witness = witnesses[i];
        }
      }
      result.max_free_length = static_cast<int>(best);
      result.witness = GSequence(group, best_witness);
      result.nodes_expanded = budget.used();
      if (budget.exhausted()) result.status = SearchStatus::BudgetExhausted;
    });
  }
  result.davenport = result.exact() ? result.max_free_length + 1 : 0;
  result.elapsed = std::chrono::duration_cast<std::chrono::milliseconds>(std::chrono::steady_clock::now() - start);
  return result;
}

/// D(G); throws BudgetExhausted if the search cannot finish.
inline int davenport(const GroupPtr& group, const SearchOptions& options = {}) {
  const SearchResult r = max_free_length(group, options);
  if (!r.exact()) {
    throw BudgetExhausted(group->spec().to_string() + ": " + r.describe(), r.max_free_length);
  }
  return r.davenport;
}

/// Closed-form Davenport constant for the families where it is known, if any.
inline std::optional<int> known_davenport(const GroupSpec& spec) {
  const auto& p = spec.params;
  switch (spec.kind) {
    case GroupKind::Cyclic:
      return static_cast<int>(p[0]);
    case GroupKind::Dihedral:
      return static_cast<int>(p[0]) + 1;
    case GroupKind::Dicyclic:
      return 2 * static_cast<int>(p[0]) + 1;
    case GroupKind::Metacyclic:
      return static_cast<int>(p[1] + p[0]) - 1;
    case GroupKind::ProductOfCyclics: {
      std::vector<std::uint32_t> factors;
      for (auto f : p) {
        if (f > 1) factors.push_back(f);
      }
      std::sort(factors.begin(), factors.end());
      if (factors.empty()) return 1;
      if (factors.size() == 1) return static_cast<int>(factors[0]);
      if (factors.size() == 2 && factors[1] % factors[0] == 0) return static_cast<int>(factors[0] + factors[1]) - 1;
      // p-group: every factor a power of the same prime.
      std::uint32_t prime = 0;
      for (std::uint32_t d = 2; d <= factors[0]; ++d) {
        if (factors[0] % d == 0) {
          prime = d;
          break;
        }
      }
      int total = 1;
      for (auto f : factors) {
        std::uint32_t rest = f;
        while (rest % prime == 0) rest /= prime;
        if (rest != 1) return std::nullopt;
        total += static_cast<int>(f) - 1;
      }
      return total;
    }
  }
  return std::nullopt;
}

/// One row of the known-constants regression.
struct KnownConstantRow {
  std::string group;
  std::string family;
  int expected = 0;
  SearchResult computed;
  bool match = false;
};

struct KnownConstantsReport {
  std::vector<KnownConstantRow> rows;
  bool all_match() const {
    return std::all_of(rows.begin(), rows.end(), [](const KnownConstantRow& r) { return r.match; });
  }
  std::size_t mismatches() const {
    return static_cast<std::size_t>(std::count_if(rows.begin(), rows.end(), [](const auto& r) { return !r.match; }));
  }
};

/// The regression roster: (family label, group spec).
inline std::vector<std::pair<std::string, GroupSpec>> known_constants_roster() {
  std::vector<std::pair<std::string, GroupSpec>> roster;
  for (std::uint32_t n = 1; n <= 30; ++n) roster.emplace_back("cyclic", GroupSpec::cyclic(n));
  for (std::uint32_t m = 2; m * m <= 36; ++m) {
    for (std::uint32_t n = m; m * n <= 36; n += m) roster.emplace_back("rank two, m | n", GroupSpec::product({m, n}));
  }
  const std::vector<std::vector<std::uint32_t>> p_groups = {
      {2, 2, 2}, {2, 2, 4}, {2, 2, 2, 2}, {2, 2, 8}, {2, 4, 4}, {2, 2, 2, 4}, {2, 2, 2, 2, 2}, {3, 3, 3}};
  for (const auto& f : p_groups) roster.emplace_back("p-group", GroupSpec::product(f));
  for (std::uint32_t n = 2; n <= 10; ++n) roster.emplace_back("dihedral", GroupSpec::dihedral(n));
  for (std::uint32_t n = 2; n <= 6; ++n) roster.emplace_back("dicyclic", GroupSpec::dicyclic(n));
  const std::uint32_t metacyclic[][3] = {{3, 2, 2}, {5, 2, 4}, {5, 4, 2}, {7, 2, 6}, {7, 3, 2}};
  for (const auto& m : metacyclic) roster.emplace_back("metacyclic", GroupSpec::metacyclic(m[0], m[1], m[2]));
  return roster;
}

inline KnownConstantRow check_known_constant(const std::string& family, const GroupSpec& spec,
                                             const SearchOptions& options = {}) {
  KnownConstantRow row;
  row.group = spec.to_string();
  row.family = family;
  row.expected = known_davenport(spec).value_or(0);
  row.computed = max_free_length(Group::build(spec), options);
  row.match = row.computed.exact() && row.computed.davenport == row.expected;
  return row;
}

/// Computes D(G) for every roster group and compares with the closed forms.
inline KnownConstantsReport verify_known_constants(const SearchOptions& options = {}) {
  KnownConstantsReport report;
  for (const auto& [family, spec] : known_constants_roster()) {
    report.rows.push_back(check_known_constant(family, spec, options));
  }
  return report;
}

}  // namespace zerosum
