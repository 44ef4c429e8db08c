#pragma once

#include "dpwell/model.hpp"
#include "dpwell/quadrature.hpp"
#include "dpwell/spectral.hpp"

// Position-space bound-state wave functions,
//
//   ground:  f0(x) = scale/(2 kappa) d/dx ( e^{-kappa|x-x0|} - e^{-kappa|x+x0|} )
//   excited: f1(x) = scale/(2 kappa) d/dx ( e^{-kappa|x-x0|} + e^{-kappa|x+x0|} )
//
// with scale = 1 unless normalized. f0 is even, f1 odd; both have a unit jump
// down across each centre with a continuous derivative there, which is the
// nonlocal-delta' matching condition and doubles as an independent oracle for
// the eigenvalue equations: the jump condition at +-x0 holds exactly when the
// branch function vanishes.

namespace dpwell {

struct BoundStateFunction {
  EnergyBranch branch = EnergyBranch::ground;
  double kappa = 1.0;  // sqrt(|E|) of the solved energy
  double x0 = 1.0;
  double normalization = 1.0;

  static BoundStateFunction from_point(const SpectralPoint& point);
};

// Pointwise value away from the kinks; throws std::domain_error at x = +-x0.
double evaluate(const BoundStateFunction& f, double x);

struct OneSidedValues {
  double f_left = 0.0;
  double f_right = 0.0;
  double f_prime = 0.0;  // common two-sided derivative at the centre
};

// One-sided limits and the derivative at a centre (+x0 or -x0).
OneSidedValues one_sided_values(const BoundStateFunction& f, double centre);

// |(f_right - f_left) - beta * f_prime| at the given centre; vanishes exactly
// when the branch eigenvalue equation holds.
double matching_residual_at(const BoundStateFunction& f, double beta, double centre);
double matching_residual(const BoundStateFunction& f, double beta);  // at +x0

// L2 norm by adaptive quadrature over (-L, L), L = 40/kappa, split at the
// kinks; the dropped tail is below e^{-2 kappa (L - x0)} / kappa.
double l2_norm(const BoundStateFunction& f, const QuadratureSpec& spec);

BoundStateFunction normalized(BoundStateFunction f, const QuadratureSpec& spec);

}  // namespace dpwell
