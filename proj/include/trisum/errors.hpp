#pragma once

#include <stdexcept>

namespace trisum {

// Invalid arguments and precondition violations are reported as
// std::invalid_argument (CLI exit code 1).

// An enumeration exceeded its configured step budget.
class resource_limit_error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// A pigeonhole extraction could not produce the requested sets.
class extraction_failed : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// A mathematically unconditional invariant failed; always a bug
// (CLI exit code 2).
class internal_error : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

}  // namespace trisum
