#pragma once

// Depth-first search over product-1-free multisets in canonical order:
// elements are appended in non-decreasing index order, so every multiset is
// generated exactly once. Each node owns a prefix of one SubsetProductDp, so
// a child costs one append and backtracking is a rollback.
//
// Pruning uses |P(S)|, the number of elements reachable as ordered products
// of sub-multisets of S. If S*g is free then P(S) u {1} is not closed under
// right multiplication by g (otherwise g^-1 would already be in P(S)), so
// every further element grows |P| by at least one and a free extension of S
// has length at most |S| + (|G| - 1 - |P(S)|).

#include <algorithm>
#include <atomic>
#include <cstdint>
#include <functional>
#include <memory>
#include <mutex>
#include <thread>
#include <vector>

#include "zerosum/element_set.hpp"
#include "zerosum/group.hpp"
#include "zerosum/product_engine.hpp"
#include "zerosum/sequence.hpp"

namespace zerosum {

inline constexpr std::uint64_t kDefaultBudget = 10'000'000;

struct SearchOptions {
  std::uint64_t budget = kDefaultBudget;
  unsigned parallelism = 1;
};

namespace detail {

/// Node accounting shared by the workers of one search.
class NodeBudget {
 public:
  explicit NodeBudget(std::uint64_t limit) : limit_(limit) {}

  /// Counts one node; false once the budget is exceeded.
  bool charge() {
    const auto used = used_.fetch_add(1, std::memory_order_relaxed) + 1;
    if (used > limit_) {
      exhausted_.store(true, std::memory_order_relaxed);
      return false;
    }
    return true;
  }

  bool exhausted() const { return exhausted_.load(std::memory_order_relaxed); }
  std::uint64_t used() const { return std::min(used_.load(std::memory_order_relaxed), limit_); }

 private:
  std::uint64_t limit_;
  std::atomic<std::uint64_t> used_{0};
  std::atomic<bool> exhausted_{false};
};

/// Runs task(i) for i in [0, count) on up to `workers` threads.
template <class Task>
void parallel_for(std::size_t count, unsigned workers, Task&& task) {
  workers = std::max(1U, std::min<unsigned>(workers, static_cast<unsigned>(count)));
  if (workers <= 1) {
    for (std::size_t i = 0; i < count; ++i) task(i);
    return;
  }
  std::atomic<std::size_t> next{0};
  std::vector<std::jthread> pool;
  pool.reserve(workers);
  for (unsigned w = 0; w < workers; ++w) {
    pool.emplace_back([&] {
      for (std::size_t i = next.fetch_add(1); i < count; i = next.fetch_add(1)) task(i);
    });
  }
}

template <std::size_t Words>
class FreeSearch {
 public:
  using Dp = SubsetProductDp<Words>;
  using Bits = ElementBits<Words>;

  FreeSearch(std::shared_ptr<const RightAction<Words>> action, NodeBudget& budget)
      : action_(std::move(action)), group_(action_->group()), budget_(budget), dp_(action_) {
    for (std::uint32_t a = 0; a < group_.order(); ++a) inverse_.push_back(group_.inverse(Element{a}).index);
  }

  /// Longest free multiset whose smallest element is `first`, if longer than `floor`.
  /// Returns the length found (or `floor` when nothing longer exists).
  std::size_t maximize_from(Element first, std::size_t floor, std::vector<Element>& witness) {
    best_ = floor;
    witness_out_ = &witness;
    current_.clear();
    if (!push(first)) return best_;
    maximize(first);
    pop();
    return best_;
  }

  /// Calls visit for every free multiset of exactly `length` elements whose
  /// smallest element is `first`.
  void enumerate_from(Element first, std::size_t length, const std::function<void(const std::vector<Element>&)>& visit) {
    target_ = length;
    visit_ = &visit;
    current_.clear();
    if (length == 0) return;
    if (!push(first)) return;
    enumerate(first);
    pop();
  }

 private:
  struct Frame {
    typename Dp::Checkpoint cp;
  };

  bool push(Element g) {
    if (budget_.exhausted()) return false;
    if (dp_.reachable().test(inverse_[g.index]) || g == group_.identity()) return false;
    frames_.push_back({dp_.checkpoint()});
    if (!dp_.append(g, true)) {
      dp_.rollback(frames_.back().cp);
      frames_.pop_back();
      return false;
    }
    current_.push_back(g);
    if (!budget_.charge()) {
      pop();
      return false;
    }
    return true;
  }

  void pop() {
    dp_.rollback(frames_.back().cp);
    frames_.pop_back();
    current_.pop_back();
  }

  std::size_t bound() const { return current_.size() + (group_.order() - 1 - dp_.reachable().count()); }

  void maximize(Element last) {
    if (current_.size() > best_) {
      best_ = current_.size();
      *witness_out_ = current_;
    }
    if (bound() <= best_) return;
    for (std::uint32_t g = last.index; g < group_.order(); ++g) {
      if (!push(Element{g})) {
        if (budget_.exhausted()) return;
        continue;
      }
      maximize(Element{g});
      pop();
      if (budget_.exhausted() || bound() <= best_) return;
    }
  }

  void enumerate(Element last) {
    if (current_.size() == target_) {
      (*visit_)(current_);
      return;
    }
    if (bound() < target_) return;
    for (std::uint32_t g = last.index; g < group_.order(); ++g) {
      if (!push(Element{g})) {
        if (budget_.exhausted()) return;
        continue;
      }
      enumerate(Element{g});
      pop();
    }
  }

  std::shared_ptr<const RightAction<Words>> action_;
  const Group& group_;
  NodeBudget& budget_;
  Dp dp_;
  std::vector<std::uint32_t> inverse_;
  std::vector<Frame> frames_;
  std::vector<Element> current_;
  std::size_t best_ = 0;
  std::vector<Element>* witness_out_ = nullptr;
  std::size_t target_ = 0;
  const std::function<void(const std::vector<Element>&)>* visit_ = nullptr;
};

}  // namespace detail

/// Outcome of a fixed-length enumeration.
struct EnumerationResult {
  std::vector<GSequence> sequences;  ///< sorted normal forms
  std::uint64_t nodes_expanded = 0;
  bool complete = true;  ///< false when the node budget ran out
};

/// All product-1-free multisets of exactly `length` elements.
inline EnumerationResult enumerate_free(const GroupPtr& group, std::size_t length, const SearchOptions& options = {}) {
  EnumerationResult result;
  if (length == 0) {
    result.sequences.emplace_back(group);
    return result;
  }
  detail::NodeBudget budget(options.budget);
  dispatch_width(group->order(), [&](auto width) {
    constexpr std::size_t W = decltype(width)::value;
    auto action = std::make_shared<const RightAction<W>>(group);
    const std::uint32_t order = group->order();
    std::vector<std::vector<std::vector<Element>>> per_branch(order);
    detail::parallel_for(order == 0 ? 0 : order - 1, options.parallelism, [&](std::size_t i) {
      detail::FreeSearch<W> search(action, budget);
      auto& sink = per_branch[i + 1];
      search.enumerate_from(Element{static_cast<std::uint32_t>(i + 1)}, length,
                            [&sink](const std::vector<Element>& s) { sink.push_back(s); });
    });
    for (auto& branch : per_branch) {
      for (auto& s : branch) result.sequences.emplace_back(group, std::move(s));
    }
  });
  std::sort(result.sequences.begin(), result.sequences.end());
  result.nodes_expanded = budget.used();
  result.complete = !budget.exhausted();
  return result;
}

}  // namespace zerosum
