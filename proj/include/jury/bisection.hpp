#pragma once

#include <cmath>

#include "jury/errors.hpp"

namespace jury {

/// Root of a non-decreasing f on [lo, hi] with f(lo) <= 0 <= f(hi).
/// Halves the bracket until it is no wider than tol and returns its midpoint.
template <typename F>
double bisect_increasing(F&& f, double lo, double hi, double tol = 1e-12) {
  detail::require(lo <= hi, "bisection bracket is inverted");
  if (f(lo) > 0.0 || f(hi) < 0.0) throw domain_error("bisection bracket does not contain a root");
  while (hi - lo > tol) {
    const double mid = lo + 0.5 * (hi - lo);
    if (mid <= lo || mid >= hi) break;  // bracket is down to adjacent doubles
    if (f(mid) < 0.0)
      lo = mid;
    else
      hi = mid;
  }
  return lo + 0.5 * (hi - lo);
}

}  // namespace jury
