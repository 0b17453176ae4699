#pragma once
// Error types shared across the toolkit.  Domain errors (bad word sizes,
// out-of-range rotations) use std::domain_error directly; the one custom
// type exists so callers can tell "you asked for an infeasible search"
// apart from ordinary bad arguments (the CLI maps it to exit code 2).

#include <stdexcept>
#include <string>

namespace rotkit {

// Thrown when a census/search would sweep a space larger than its guard
// allows.  The message names the guard so the fix is obvious; every
// throwing call site accepts a force flag that bypasses the check.
class InfeasibleSizeError : public std::runtime_error {
 public:
  explicit InfeasibleSizeError(const std::string& msg) : std::runtime_error(msg) {}
};

namespace detail {

// bits = log2 of the requested space, limit = guard ceiling.
inline void check_space_guard(const std::string& what, const std::string& guard_expr,
                              int bits, int limit, bool force) {
  if (bits <= limit || force) return;
  throw InfeasibleSizeError(what + ": search space 2^" + std::to_string(bits) +
                            " exceeds the " + guard_expr + " guard (2^" +
                            std::to_string(limit) + "); pass force to override");
}

}  // namespace detail
}  // namespace rotkit
