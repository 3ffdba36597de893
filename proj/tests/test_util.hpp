#pragma once

#include <cmath>
#include <limits>

#include "lgi/types.hpp"

namespace lgi::test {

// True error within twice the claimed bound, plus a couple of ulps of the
// reference for the rounding of the reference itself.
inline bool honest(const FnEvalResult& r, double ref, double factor = 2.0) {
  double slack = 4 * std::numeric_limits<double>::epsilon() * std::fabs(ref);
  return std::fabs(r.value - ref) <= factor * r.abs_err + slack;
}

}  // namespace lgi::test
