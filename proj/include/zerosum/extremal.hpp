#pragma once

// Extremal product-1-free sequences, the closed-form families that are
// supposed to describe them, and diffs between the two.

#include <algorithm>
#include <chrono>
#include <cstdint>
#include <numeric>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "zerosum/davenport.hpp"
#include "zerosum/error.hpp"
#include "zerosum/group.hpp"
#include "zerosum/product_engine.hpp"
#include "zerosum/search.hpp"
#include "zerosum/sequence.hpp"

namespace zerosum {

/// Predicted extremal sequences of one group, deduplicated and sorted.
struct CharacterizationFamily {
  std::string name;
  std::string parameter_ranges;
  std::vector<GSequence> members;
  /// How ambiguous parameter ranges were resolved, if any.
  std::vector<std::string> notes;
};

enum class Verdict { ExactMatch, DocumentedDiscrepancy, Failure };

inline const char* to_string(Verdict v) {
  switch (v) {
    case Verdict::ExactMatch: return "exact match";
    case Verdict::DocumentedDiscrepancy: return "documented-discrepancy";
    case Verdict::Failure: return "failure";
  }
  return "failure";
}

/// Diff between what exhaustive enumeration finds and what a family predicts.
struct VerificationReport {
  std::string target;  ///< dihedral, dicyclic, metacyclic, cyclic, weighted, cyclic-structure, minzero
  std::string group;
  std::string family;
  int davenport = 0;
  std::uint64_t enumerated_count = 0;
  std::uint64_t predicted_count = 0;
  std::vector<GSequence> missing;  ///< predicted but not free, not extremal, or not found
  std::vector<GSequence> extra;    ///< found but not predicted
  std::vector<std::string> notes;
  /// Informational sequences that do not affect the verdict (e.g. boundary non-examples).
  std::vector<GSequence> witnesses;
  std::uint64_t nodes = 0;
  std::chrono::milliseconds elapsed{0};

  Verdict verdict() const {
    if (!missing.empty()) return Verdict::Failure;
    if (!extra.empty()) return Verdict::DocumentedDiscrepancy;
    return Verdict::ExactMatch;
  }
};

namespace detail {

inline std::vector<GSequence> dedupe(std::vector<GSequence> seqs) {
  std::sort(seqs.begin(), seqs.end());
  seqs.erase(std::unique(seqs.begin(), seqs.end()), seqs.end());
  return seqs;
}

inline std::string join_ints(const std::vector<std::uint32_t>& values) {
  std::string out = "{";
  for (std::size_t i = 0; i < values.size(); ++i) {
    if (i > 0) out += ",";
    out += std::to_string(values[i]);
  }
  return out + "}";
}

/// (y^t, y^t, x y^v) for t in candidate range, plus (x, x y, x y^2), over a
/// group of order 6 with |<y>| = 3. The range of t is taken from the free
/// candidates rather than assumed.
inline CharacterizationFamily order_six_family(const GroupPtr& g, std::string name) {
  CharacterizationFamily fam;
  fam.name = std::move(name);
  std::vector<std::uint32_t> resolved;
  for (std::uint32_t t = 1; t <= 3; ++t) {
    const GSequence probe(g, {g->y_power(t), g->y_power(t), g->word(1, 0)});
    if (is_product1_free(probe)) resolved.push_back(t);
  }
  for (std::uint32_t t : resolved) {
    for (std::uint32_t v = 0; v < 3; ++v) fam.members.push_back(GSequence(g, {g->y_power(t), g->y_power(t), g->word(1, v)}));
  }
  fam.members.push_back(GSequence(g, {g->word(1, 0), g->word(1, 1), g->word(1, 2)}));
  fam.members = dedupe(std::move(fam.members));
  fam.parameter_ranges = "t in " + join_ints(resolved) + " (resolved by freeness over t in {1,2,3}), v in Z_3";
  fam.notes.push_back("t-range stated as {2,3}; y^3 = 1, so the free range is " + join_ints(resolved));
  return fam;
}

}  // namespace detail

/// {(g)^(n-1) : g a generator of C_n}
inline CharacterizationFamily family_cyclic(std::uint32_t n) {
  if (n < 2) throw GroupError("cyclic family needs n >= 2");
  const GroupPtr g = Group::build(GroupSpec::cyclic(n));
  CharacterizationFamily fam;
  fam.name = "cyclic: (g)^(n-1), g a generator";
  fam.parameter_ranges = "g in Z_n^*";
  for (std::uint32_t k = 1; k < n; ++k) {
    if (std::gcd(k, n) == 1) fam.members.push_back(GSequence::repeat(g, g->y_power(k), n - 1));
  }
  fam.members = detail::dedupe(std::move(fam.members));
  return fam;
}

inline CharacterizationFamily family_dihedral(std::uint32_t n) {
  if (n < 2) throw GroupError("dihedral family needs n >= 2");
  const GroupPtr g = Group::build(GroupSpec::dihedral(n));
  if (n == 2) {
    CharacterizationFamily fam;
    fam.name = "dihedral n=2: (x,y), (xy,y), (x,xy)";
    fam.parameter_ranges = "none";
    const Element x = g->word(1, 0);
    const Element y = g->y_power(1);
    const Element xy = g->word(1, 1);
    fam.members = detail::dedupe({GSequence(g, {x, y}), GSequence(g, {xy, y}), GSequence(g, {x, xy})});
    return fam;
  }
  if (n == 3) return detail::order_six_family(g, "dihedral n=3: (y^t,y^t,xy^v) or (x,xy,xy^2)");
  CharacterizationFamily fam;
  fam.name = "dihedral n>=4: (y^t)^(n-1) (xy^s)";
  fam.parameter_ranges = "1 <= t <= n-1, gcd(t,n) = 1, 0 <= s <= n-1";
  for (std::uint32_t t = 1; t < n; ++t) {
    if (std::gcd(t, n) != 1) continue;
    for (std::uint32_t s = 0; s < n; ++s) {
      auto elems = std::vector<Element>(n - 1, g->y_power(t));
      elems.push_back(g->word(1, s));
      fam.members.emplace_back(g, std::move(elems));
    }
  }
  fam.members = detail::dedupe(std::move(fam.members));
  return fam;
}

inline CharacterizationFamily family_dicyclic(std::uint32_t n) {
  if (n < 2) throw GroupError("dicyclic family needs n >= 2");
  const GroupPtr g = Group::build(GroupSpec::dicyclic(n));
  CharacterizationFamily fam;
  if (n == 2) {
    fam.name = "dicyclic n=2: (y^r,y^r,y^r,xy^s), (y^r,xy^s,xy^s,xy^s), (xy^s,xy^s,xy^s,xy^(r+s))";
    fam.parameter_ranges = "r in Z_4^* = {1,3}, s in Z_4";
    for (std::uint32_t r : {1U, 3U}) {
      for (std::uint32_t s = 0; s < 4; ++s) {
        const Element yr = g->y_power(r);
        const Element xs = g->word(1, s);
        fam.members.push_back(GSequence(g, {yr, yr, yr, xs}));
        fam.members.push_back(GSequence(g, {yr, xs, xs, xs}));
        fam.members.push_back(GSequence(g, {xs, xs, xs, g->word(1, r + s)}));
      }
    }
    fam.members = detail::dedupe(std::move(fam.members));
    return fam;
  }
  fam.name = "dicyclic n>=3: (y^t)^(2n-1) (xy^s)";
  fam.parameter_ranges = "1 <= t <= n-1, gcd(t,2n) = 1, 0 <= s <= 2n-1";
  for (std::uint32_t t = 1; t < n; ++t) {
    if (std::gcd(t, 2 * n) != 1) continue;
    for (std::uint32_t s = 0; s < 2 * n; ++s) {
      auto elems = std::vector<Element>(2 * n - 1, g->y_power(t));
      elems.push_back(g->word(1, s));
      fam.members.emplace_back(g, std::move(elems));
    }
  }
  fam.members = detail::dedupe(std::move(fam.members));
  return fam;
}

inline CharacterizationFamily family_metacyclic(std::uint32_t q, std::uint32_t m, std::uint32_t s) {
  const GroupPtr g = Group::build(GroupSpec::metacyclic(q, m, s));
  if (m == 2 && q == 3) return detail::order_six_family(g, "metacyclic (m,q)=(2,3): (y^t,y^t,xy^v) or (x,xy,xy^2)");
  CharacterizationFamily fam;
  fam.name = "metacyclic: (y^t)^(q-1) x^i y^v1 ... x^i y^v(m-1)";
  fam.parameter_ranges = "1 <= t <= q-1, 1 <= i <= m-1 with gcd(i,m) = 1, 0 <= v_k <= q-1";
  // Non-decreasing (v_1, ..., v_{m-1}) covers each multiset of x^i-coset elements once.
  std::vector<std::uint32_t> nu(m - 1, 0);
  std::vector<std::vector<std::uint32_t>> nu_choices;
  for (;;) {
    nu_choices.push_back(nu);
    std::size_t k = nu.size();
    while (k > 0 && nu[k - 1] == q - 1) --k;
    if (k == 0) break;
    const std::uint32_t next = nu[k - 1] + 1;
    for (std::size_t j = k - 1; j < nu.size(); ++j) nu[j] = next;
  }
  for (std::uint32_t t = 1; t < q; ++t) {
    for (std::uint32_t i = 1; i < m; ++i) {
      if (std::gcd(i, m) != 1) continue;
      for (const auto& choice : nu_choices) {
        auto elems = std::vector<Element>(q - 1, g->y_power(t));
        for (std::uint32_t v : choice) elems.push_back(g->word(i, v));
        fam.members.emplace_back(g, std::move(elems));
      }
    }
  }
  fam.members = detail::dedupe(std::move(fam.members));
  return fam;
}

/// The family that applies to g.
inline CharacterizationFamily family_for(const Group& g) {
  const auto& p = g.spec().params;
  switch (g.kind()) {
    case GroupKind::Cyclic: return family_cyclic(p[0]);
    case GroupKind::Dihedral: return family_dihedral(p[0]);
    case GroupKind::Dicyclic: return family_dicyclic(p[0]);
    case GroupKind::Metacyclic: return family_metacyclic(p[0], p[1], p[2]);
    case GroupKind::ProductOfCyclics: break;
  }
  throw GroupError("no characterization family for " + g.spec().to_string());
}

struct ExtremalSet {
  int davenport = 0;
  EnumerationResult enumeration;
};

/// Every product-1-free multiset of length D(G) - 1.
inline ExtremalSet enumerate_extremal(const GroupPtr& group, const SearchOptions& options = {}) {
  ExtremalSet out;
  out.davenport = davenport(group, options);
  out.enumeration = enumerate_free(group, static_cast<std::size_t>(out.davenport - 1), options);
  if (!out.enumeration.complete) {
    throw BudgetExhausted(group->spec().to_string() + ": extremal enumeration ran out of budget",
                          out.davenport - 1);
  }
  return out;
}

namespace detail {

inline std::string target_for(GroupKind kind) {
  switch (kind) {
    case GroupKind::Cyclic: return "cyclic";
    case GroupKind::Dihedral: return "dihedral";
    case GroupKind::Dicyclic: return "dicyclic";
    case GroupKind::Metacyclic: return "metacyclic";
    case GroupKind::ProductOfCyclics: return "product";
  }
  return "unknown";
}

/// For Q:n, n >= 3: extras of the form (y^t)^(2n-1)(xy^s) with 2n - t in the
/// predicted t-range, i.e. images of predicted sequences under t -> -t.
inline void annotate_dicyclic_extras(const Group& g, VerificationReport& report) {
  const std::uint32_t n = g.n();
  std::size_t images = 0;
  for (const auto& s : report.extra) {
    const auto counts = s.counts();
    bool is_image = false;
    if (counts.size() == 2 && counts[0].second == 2 * n - 1 && counts[1].second == 1 &&
        g.coset(counts[0].first) == Coset::H && g.coset(counts[1].first) == Coset::N) {
      const std::uint32_t t = counts[0].first.index;
      const std::uint32_t mirrored = 2 * n - t;
      is_image = t > n && mirrored >= 1 && mirrored <= n - 1 && std::gcd(mirrored, 2 * n) == 1;
    }
    if (is_image) ++images;
  }
  report.notes.push_back(std::to_string(images) + " of " + std::to_string(report.extra.size()) +
                         " extra sequences are (y^t)^(2n-1)(xy^s) with n < t < 2n, the t -> 2n-t images of "
                         "predicted sequences");
}

}  // namespace detail

/// True when every extra sequence in a Q:n report is a t -> 2n-t image.
inline bool extras_are_inverse_images(const Group& g, const VerificationReport& report) {
  if (g.kind() != GroupKind::Dicyclic) return report.extra.empty();
  const std::uint32_t n = g.n();
  return std::all_of(report.extra.begin(), report.extra.end(), [&](const GSequence& s) {
    const auto counts = s.counts();
    if (counts.size() != 2 || counts[0].second != 2 * n - 1 || counts[1].second != 1) return false;
    if (g.coset(counts[0].first) != Coset::H || g.coset(counts[1].first) != Coset::N) return false;
    const std::uint32_t t = counts[0].first.index;
    const std::uint32_t mirrored = 2 * n - t;
    return t > n && mirrored >= 1 && mirrored <= n - 1 && std::gcd(mirrored, 2 * n) == 1;
  });
}

/// Enumerates the extremal set of g and diffs it against g's family.
inline VerificationReport verify_theorem(const GroupPtr& group, const SearchOptions& options = {}) {
  const auto start = std::chrono::steady_clock::now();
  VerificationReport report;
  report.target = detail::target_for(group->kind());
  report.group = group->spec().to_string();
  const CharacterizationFamily family = family_for(*group);
  report.family = family.name + "; " + family.parameter_ranges;
  report.notes = family.notes;

  const ExtremalSet extremal = enumerate_extremal(group, options);
  report.davenport = extremal.davenport;
  report.nodes = extremal.enumeration.nodes_expanded;
  const auto& found = extremal.enumeration.sequences;
  report.enumerated_count = found.size();
  report.predicted_count = family.members.size();

  const std::size_t extremal_length = static_cast<std::size_t>(extremal.davenport - 1);
  for (const auto& s : family.members) {
    // Each predicted sequence is re-checked on its own, independently of the search.
    const bool ok = s.length() == extremal_length && is_product1_free(s) &&
                    std::binary_search(found.begin(), found.end(), s);
    if (!ok) report.missing.push_back(s);
  }
  std::set_difference(found.begin(), found.end(), family.members.begin(), family.members.end(),
                      std::back_inserter(report.extra));
  if (group->kind() == GroupKind::Dicyclic && group->n() >= 3 && !report.extra.empty()) {
    detail::annotate_dicyclic_extras(*group, report);
  }
  report.elapsed =
      std::chrono::duration_cast<std::chrono::milliseconds>(std::chrono::steady_clock::now() - start);
  return report;
}

/// Signed subset sums: for s = floor(log2 n) + 1, every (y_1..y_s) in Z_n^s has a
/// nonempty J and signs with sum eps_j y_j = 0 mod n. Also lists the tuples in
/// Z_n^(s-1) without one (recorded as witnesses, not failures).
inline VerificationReport check_weighted_lemma(std::uint32_t n) {
  if (n < 2) throw GroupError("weighted lemma check needs n >= 2");
  const auto start = std::chrono::steady_clock::now();
  const GroupPtr g = Group::build(GroupSpec::cyclic(n));
  std::uint32_t s = 0;
  while ((1U << s) <= n) ++s;  // floor(log2 n) + 1

  // Bitmask over Z_n of the signed subset sums of a tuple.
  const std::uint64_t full = n == 64 ? ~0ULL : ((1ULL << n) - 1);
  auto rotate = [&](std::uint64_t mask, std::uint32_t k) {
    k %= n;
    if (k == 0) return mask;
    return ((mask << k) | (mask >> (n - k))) & full;
  };
  auto has_signed_zero = [&](const std::vector<std::uint32_t>& tuple) {
    std::uint64_t sums = 0;
    for (std::uint32_t y : tuple) {
      const std::uint64_t single = (1ULL << (y % n)) | (1ULL << ((n - y % n) % n));
      sums = sums | single | rotate(sums, y) | rotate(sums, (n - y % n) % n);
      if (sums & 1ULL) return true;
    }
    return false;
  };

  VerificationReport report;
  report.target = "weighted";
  report.group = g->spec().to_string();
  report.family = "signed zero subset sum for s = floor(log2 n) + 1 = " + std::to_string(s);
  auto for_each_tuple = [&](std::uint32_t len, auto&& f) {
    std::vector<std::uint32_t> tuple(len, 0);
    for (;;) {
      f(tuple);
      std::size_t k = 0;
      while (k < len && ++tuple[k] == n) tuple[k++] = 0;
      if (k == len) break;
    }
  };
  std::set<std::vector<std::uint32_t>> failures;
  for_each_tuple(s, [&](const std::vector<std::uint32_t>& t) {
    ++report.enumerated_count;
    if (!has_signed_zero(t)) {
      auto sorted = t;
      std::sort(sorted.begin(), sorted.end());
      failures.insert(sorted);
    }
  });
  report.predicted_count = report.enumerated_count;
  auto as_sequence = [&](const std::vector<std::uint32_t>& t) {
    std::vector<Element> elems;
    for (auto v : t) elems.push_back(g->y_power(v));
    return GSequence(g, std::move(elems));
  };
  for (const auto& f : failures) report.missing.push_back(as_sequence(f));

  std::set<std::vector<std::uint32_t>> boundary;
  std::uint64_t boundary_tuples = 0;
  if (s > 1) {
    for_each_tuple(s - 1, [&](const std::vector<std::uint32_t>& t) {
      if (!has_signed_zero(t)) {
        ++boundary_tuples;
        auto sorted = t;
        std::sort(sorted.begin(), sorted.end());
        boundary.insert(sorted);
      }
    });
  }
  for (const auto& b : boundary) report.witnesses.push_back(as_sequence(b));
  report.notes.push_back("checked all " + std::to_string(report.enumerated_count) + " tuples of length " +
                         std::to_string(s));
  report.notes.push_back("length " + std::to_string(s - 1) + ": " + std::to_string(boundary_tuples) +
                         " tuples (" + std::to_string(boundary.size()) + " multisets) have no signed zero sum");
  report.elapsed =
      std::chrono::duration_cast<std::chrono::milliseconds>(std::chrono::steady_clock::now() - start);
  return report;
}

/// Zero-sum-free sequences of C_n: multiplicity bound 2|S| - n + 1 for every
/// |S| >= (n+1)/2, and the exact shapes for |S| in {n-1, n-2, n-3}. Shape
/// clauses are only asserted where |S| >= (n+1)/2; below that the diff is
/// recorded in notes and witnesses.
inline VerificationReport check_cyclic_structure(std::uint32_t n, const SearchOptions& options = {}) {
  if (n < 3) throw GroupError("cyclic structure check needs n >= 3");
  const auto start = std::chrono::steady_clock::now();
  const GroupPtr g = Group::build(GroupSpec::cyclic(n));
  VerificationReport report;
  report.target = "cyclic-structure";
  report.group = g->spec().to_string();
  report.family = "multiplicity >= 2|S|-n+1 for |S| >= (n+1)/2; shapes for |S| = n-1, n-2, n-3";
  report.davenport = static_cast<int>(n);

  std::vector<std::uint32_t> generators;
  for (std::uint32_t k = 1; k < n; ++k) {
    if (std::gcd(k, n) == 1) generators.push_back(k);
  }
  auto shape = [&](std::uint32_t gen, std::vector<std::pair<std::uint32_t, std::uint32_t>> parts) {
    // parts: (multiple of gen, count)
    std::vector<Element> elems;
    for (auto [mult, count] : parts) elems.insert(elems.end(), count, g->y_power(std::uint64_t(gen) * mult % n));
    return GSequence(g, std::move(elems));
  };
  auto predicted_for = [&](std::uint32_t len) {
    std::vector<GSequence> out;
    for (std::uint32_t gen : generators) {
      if (len == n - 1) {
        out.push_back(shape(gen, {{1, n - 1}}));
      } else if (len == n - 2) {
        out.push_back(shape(gen, {{1, n - 2}}));
        out.push_back(shape(gen, {{1, n - 3}, {2, 1}}));
      } else {
        out.push_back(shape(gen, {{1, n - 3}}));
        out.push_back(shape(gen, {{1, n - 4}, {2, 1}}));
        out.push_back(shape(gen, {{1, n - 4}, {3, 1}}));
        if (n >= 5) out.push_back(shape(gen, {{1, n - 5}, {2, 2}}));
      }
    }
    return detail::dedupe(std::move(out));
  };

  const std::uint32_t min_len = (n + 2) / 2;  // ceil((n+1)/2)
  const std::uint32_t shortest = std::min(min_len, n >= 4 ? n - 3 : 1U);
  for (std::uint32_t len = n - 1; len >= std::max(shortest, 1U); --len) {
    const auto enumeration = enumerate_free(g, len, options);
    if (!enumeration.complete) throw BudgetExhausted(report.group + ": cyclic structure enumeration ran out", 0);
    report.nodes += enumeration.nodes_expanded;
    const auto& found = enumeration.sequences;
    const bool in_hypothesis = 2 * len >= n + 1;
    if (in_hypothesis) {
      report.enumerated_count += found.size();
      const std::size_t bound = 2 * len - n + 1;
      for (const auto& s : found) {
        std::size_t most = 0;
        for (const auto& [e, c] : s.counts()) most = std::max(most, c);
        if (most < bound) report.missing.push_back(s);
      }
    }
    if (len + 3 >= n) {
      const auto predicted = predicted_for(len);
      std::vector<GSequence> absent;
      std::vector<GSequence> unexpected;
      std::set_difference(predicted.begin(), predicted.end(), found.begin(), found.end(), std::back_inserter(absent));
      std::set_difference(found.begin(), found.end(), predicted.begin(), predicted.end(),
                          std::back_inserter(unexpected));
      if (in_hypothesis) {
        report.predicted_count += predicted.size();
        report.missing.insert(report.missing.end(), absent.begin(), absent.end());
        report.extra.insert(report.extra.end(), unexpected.begin(), unexpected.end());
        report.notes.push_back("|S| = " + std::to_string(len) + ": " + std::to_string(found.size()) +
                               " zero-sum-free, " + std::to_string(predicted.size()) + " predicted");
      } else {
        report.witnesses.insert(report.witnesses.end(), unexpected.begin(), unexpected.end());
        report.notes.push_back("|S| = " + std::to_string(len) + " is below (n+1)/2, outside the hypothesis: " +
                               std::to_string(found.size()) + " zero-sum-free vs " + std::to_string(predicted.size()) +
                               " of the listed shapes, " + std::to_string(unexpected.size()) + " not of those shapes, " +
                               std::to_string(absent.size()) + " shapes not free");
      }
    }
    if (len == 1) break;
  }
  report.elapsed =
      std::chrono::duration_cast<std::chrono::milliseconds>(std::chrono::steady_clock::now() - start);
  return report;
}

/// Every minimal zero sequence of length D(G) in an abelian group contains an
/// element of order exp(G). Minimal: the whole product is 1 and every proper
/// nonempty sub-multiset is product-1-free.
inline VerificationReport check_minimal_zero_sum_order(const GroupPtr& group, const SearchOptions& options = {}) {
  if (!group->is_abelian()) throw GroupError("minimal zero-sum order check needs an abelian group");
  if (group->order() > 36) throw GroupError("minimal zero-sum order check is limited to |G| <= 36");
  const auto start = std::chrono::steady_clock::now();
  VerificationReport report;
  report.target = "minzero";
  report.group = group->spec().to_string();
  report.family = "minimal zero sequences of length D(G) contain an element of order exp(G) = " +
                  std::to_string(group->exponent());
  const int d = davenport(group, options);
  report.davenport = d;
  if (d < 2) {
    report.notes.push_back("trivial group: no nonempty minimal zero sequence of length D(G) = 1 besides (1)");
    return report;
  }
  // Dropping any element of a minimal zero sequence of length D leaves a free
  // sequence of length D - 1, so each one is some free S plus sigma(S)^-1.
  const auto free_seqs = enumerate_free(group, static_cast<std::size_t>(d - 1), options);
  if (!free_seqs.complete) throw BudgetExhausted(report.group + ": minimal zero enumeration ran out", d - 1);
  report.nodes = free_seqs.nodes_expanded;
  std::vector<GSequence> minimal;
  for (const auto& s : free_seqs.sequences) {
    Element total = group->identity();
    for (Element e : s.elements()) total = group->mul(total, e);
    std::vector<Element> elems = s.elements();
    elems.push_back(group->inverse(total));
    GSequence t(group, std::move(elems));
    bool is_minimal = true;
    for (const auto& [e, c] : t.counts()) {
      if (!is_product1_free(remove(t, GSequence(group, {e})))) {
        is_minimal = false;
        break;
      }
    }
    if (is_minimal) minimal.push_back(std::move(t));
  }
  minimal = detail::dedupe(std::move(minimal));
  report.enumerated_count = minimal.size();
  report.predicted_count = minimal.size();
  for (const auto& t : minimal) {
    const bool has_max_order = std::any_of(t.elements().begin(), t.elements().end(), [&](Element e) {
      return group->element_order(e) == group->exponent();
    });
    if (!has_max_order) report.missing.push_back(t);
  }
  report.elapsed =
      std::chrono::duration_cast<std::chrono::milliseconds>(std::chrono::steady_clock::now() - start);
  return report;
}

}  // namespace zerosum
