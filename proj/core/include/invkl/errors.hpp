#pragma once

#include <stdexcept>

namespace invkl {

// A requested computation exceeds a size cap that exists to keep
// enumeration-backed routines (set partitions, deletion-contraction)
// from running away.  The message names the cap and its value so the
// CLI can report it verbatim.
struct cap_error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// An internal cross-check failed: a division that must be exact was not,
// a coefficient that must be an integer had a denominator, or the
// defining recursion produced inconsistent leftover coefficients.
// Any throw of this type is a bug, not a usage error.
struct consistency_error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

}  // namespace invkl
