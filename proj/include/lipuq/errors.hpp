#pragma once

#include <stdexcept>
#include <string>

namespace lipuq {

struct DimensionMismatch : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

// |f(x)| too small to rescale to f(x) = 1; the instance must be regenerated.
struct NotNormalizable : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// No closed-form operator norm for this exponent; callers fall back to sampling.
struct UnsupportedExponent : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Every pair in the sampling cloud was degenerate (closer than the pair epsilon).
struct EmptySample : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// A composition point left the domain ball; the trial is skipped and counted.
struct DomainEscape : std::runtime_error {
  using std::runtime_error::runtime_error;
};

}  // namespace lipuq
