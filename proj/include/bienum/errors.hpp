#pragma once

#include <stdexcept>
#include <string>

namespace bienum {

/// Thrown when a caller violates an interface contract: malformed input
/// text, arguments outside the documented domain, or queries that a
/// component does not support.
class UsageError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Thrown when an instance exceeds a configured enumeration capacity
/// (brute-force components refuse to run instead of running forever).
class CapacityError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Thrown when a problem instance admits no feasible solution and the
/// requested computation needs one.
class InfeasibleError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Thrown when an objective is unbounded below over the feasible region,
/// i.e. the instance has no finite ideal point.
class UnboundedError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Thrown when an internal invariant fails.  Indicates a bug in this
/// library, never bad user input.
class InternalError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

}  // namespace bienum
