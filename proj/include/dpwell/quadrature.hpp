#pragma once

#include <functional>

#include "dpwell/model.hpp"

namespace dpwell {

struct QuadratureSpec {
  double rel_tol = 1e-10;
  double abs_tol = 1e-12;
  int max_subdivisions = 10000;
};

struct QuadratureResult {
  double value = 0.0;
  double error = 0.0;  // estimated absolute error
  int subdivisions = 0;
};

class quadrature_error : public numerical_error {
 public:
  quadrature_error(const std::string& what, double achieved_error)
      : numerical_error(what + " (achieved error estimate " + std::to_string(achieved_error) +
                        ")"),
        achieved_error_(achieved_error) {}
  double achieved_error() const { return achieved_error_; }

 private:
  double achieved_error_;
};

using Integrand = std::function<double(double)>;

// Globally adaptive Gauss-Kronrod 7-15 on a finite interval. Deterministic:
// refinement order and final summation order are fixed, so repeated calls are
// bit-identical. Throws quadrature_error when the tolerance cannot be met
// within spec.max_subdivisions.
QuadratureResult integrate(const Integrand& f, double a, double b, const QuadratureSpec& spec);

// Integral of f over [0, inf) via the rational substitution p = scale*t/(1-t).
// Suitable for smooth integrands decaying at least like 1/p^2.
QuadratureResult integrate_half_line(const Integrand& f, const QuadratureSpec& spec,
                                     double scale = 1.0);

// Integral over [0, inf) of f(p) cos(freq p) for smooth nonnegative f that is
// monotone decreasing beyond mono_from. The head up to the first cosine zero
// past mono_from is integrated adaptively; the alternating lobe series beyond
// it is summed with Euler acceleration.
QuadratureResult integrate_cos_half_line(const Integrand& f, double freq, double mono_from,
                                         const QuadratureSpec& spec);

}  // namespace dpwell
