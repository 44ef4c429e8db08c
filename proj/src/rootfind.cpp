#include "dpwell/rootfind.hpp"

#include <cmath>
#include <limits>

#include "dpwell/model.hpp"

namespace dpwell {

RootResult solve_bracketed(const std::function<double(double)>& f,
                           const std::function<double(double)>& fprime, double lo, double hi,
                           double f_tol) {
  double flo = f(lo);
  double fhi = f(hi);
  if (flo == 0.0) return {lo, 0.0, 0};
  if (fhi == 0.0) return {hi, 0.0, 0};
  if (flo * fhi > 0.0) throw numerical_error("solve_bracketed: no sign change on bracket");

  int iters = 0;

  // coarse bisection to 1e-3 relative width
  while (hi - lo > 1e-3 * std::fabs(0.5 * (lo + hi)) && iters < 200) {
    const double mid = 0.5 * (lo + hi);
    const double fmid = f(mid);
    ++iters;
    if (fmid == 0.0) return {mid, 0.0, iters};
    if (flo * fmid < 0.0) {
      hi = mid;
      fhi = fmid;
    } else {
      lo = mid;
      flo = fmid;
    }
  }

  // Newton polish, bracket-safeguarded
  double x = 0.5 * (lo + hi);
  double fx = f(x);
  for (int i = 0; i < 100; ++i) {
    ++iters;
    if (std::fabs(fx) <= f_tol) return {x, fx, iters};
    // keep the bracket current
    if (flo * fx < 0.0) {
      hi = x;
      fhi = fx;
    } else {
      lo = x;
      flo = fx;
    }
    const double d = fprime(x);
    double xn = (d != 0.0) ? x - fx / d : std::numeric_limits<double>::quiet_NaN();
    if (!(xn > lo && xn < hi)) xn = 0.5 * (lo + hi);
    if (xn == x) break;  // bracket resolved to machine precision
    x = xn;
    fx = f(x);
  }
  if (std::fabs(fx) <= f_tol) return {x, fx, iters};
  throw numerical_error("solve_bracketed: did not reach |f| <= " + std::to_string(f_tol) +
                        ", best |f| = " + std::to_string(std::fabs(fx)));
}

}  // namespace dpwell
