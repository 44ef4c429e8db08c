#pragma once

#include <functional>

namespace dpwell {

struct RootResult {
  double x = 0.0;
  double f = 0.0;  // function value at x
  int iterations = 0;
};

// Root of a continuous strictly monotone function on a sign-changing bracket:
// bisection down to a coarse relative width, then Newton with the analytic
// derivative, falling back to bisection whenever a Newton step leaves the
// bracket. Stops once |f| <= f_tol; throws numerical_error otherwise.
RootResult solve_bracketed(const std::function<double(double)>& f,
                           const std::function<double(double)>& fprime, double lo, double hi,
                           double f_tol);

}  // namespace dpwell
