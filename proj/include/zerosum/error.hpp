#pragma once

#include <stdexcept>
#include <string>

namespace zerosum {

/// Base class for every error raised by the toolkit.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Invalid group parameters, or a group relation that failed verification.
class GroupError : public Error {
 public:
  using Error::Error;
};

/// Malformed group spec, element word or sequence text.
class ParseError : public Error {
 public:
  using Error::Error;
};

/// Operation applied to sequences over different groups, or a bad sub-multiset.
class SequenceError : public Error {
 public:
  using Error::Error;
};

/// Input exceeds a documented cost bound (state space, oracle length, bitset width).
class CostGuardError : public Error {
 public:
  using Error::Error;
};

/// A search ran out of its node budget before it could decide the answer.
class BudgetExhausted : public Error {
 public:
  BudgetExhausted(const std::string& what, int known_lower_bound)
      : Error(what), known_lower_bound_(known_lower_bound) {}

  int known_lower_bound() const noexcept { return known_lower_bound_; }

 private:
  int known_lower_bound_;
};

}  // namespace zerosum
