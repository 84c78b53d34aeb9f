#ifndef PAT1324_ERRORS_HPP
#define PAT1324_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace pat1324 {

/// Malformed arguments: duplicate entries, out-of-range indices, bad fixtures.
class InvalidInputError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// A configured oracle cap or memory budget would be exceeded.
class ResourceLimitError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Two independent computations of the same quantity disagree.
class ConsistencyError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

/// A caller broke a documented precondition (e.g. an inadmissible branch).
class ContractViolation : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

/// Fixed-width counter overflowed; rerun with arbitrary precision.
class CounterOverflowError : public std::overflow_error {
 public:
  using std::overflow_error::overflow_error;
};

}  // namespace pat1324

#endif  // PAT1324_ERRORS_HPP
