#pragma once

#include <complex>
#include <vector>

#include "dpwell/model.hpp"
#include "dpwell/parallel.hpp"

// Resonance poles as complex roots of the analytically continued eigenvalue
// conditions in the dimensionless momentum plane q = q1 + i q2 = 2 x0 k,
// alpha = 4 x0 / beta < 0:
//
//   ground:  G(q) = i q (1 - e^{iq}) - alpha = 0
//   excited: G(q) = i q (1 + e^{iq}) - alpha = 0
//
// Both are invariant under q1 -> -q1 (roots come in mirror pairs) and all
// off-axis roots lie strictly in the lower half plane. Bound states sit on the
// positive imaginary axis; the continued ground equation also has a root on
// the negative imaginary axis, which is reported through the separate
// axis_roots diagnostic and never as a resonance.

namespace dpwell {

struct ResonancePole {
  EnergyBranch family = EnergyBranch::ground;
  int index = 0;  // 1-based ordinal by increasing q1 > 0
  double q1 = 0.0;
  double q2 = 0.0;
  double residual = 0.0;  // |G| at the root
};

struct SearchBox {
  double q1_max = 4.0 * M_PI + 1.0;
  double q2_min = -8.0;
  int grid_n1 = 48;  // uniform seed counts (fallback around the heuristic seeds)
  int grid_n2 = 16;
};

// G evaluated at (q1, q2); its real and imaginary parts vanish simultaneously
// exactly when the paper's split real/imag curve equations both hold.
std::complex<double> continued_equation(EnergyBranch family, std::complex<double> q,
                                        double alpha);
std::complex<double> continued_equation_derivative(EnergyBranch family, std::complex<double> q);
std::complex<double> complex_residual(EnergyBranch family, double q1, double q2, double alpha);

// Damped Newton from heuristic seeds (ground near q1 = 2 pi n, excited near
// (2n-1) pi, q2 in {-0.5,-1.5,-3}) plus a uniform grid over the box. Seeds run
// independently (parallel map); dedup within 1e-8 keeps the smaller residual.
// Poles are reported for q1 > 0 only, sorted by q1, 1-based index, at most
// max_pairs of them; the mirror at (-q1, q2) is implied.
std::vector<ResonancePole> find_poles(EnergyBranch family, double alpha, const SearchBox& box,
                                      int max_pairs, ExecPolicy policy = ExecPolicy::parallel);

enum class CurveEquation { real_part, imag_part };

struct CurveSample {
  double q1 = 0.0;
  double q2 = 0.0;
};

// Scalar curve equations of the split system:
//   ground real: (q2+alpha) e^{q2} - q2 cos q1 - q1 sin q1
//   ground imag: e^{q2} - cos q1 + q2 sin(q1)/q1   (q1 = 0 filled by its limit)
// and the excited versions with the trigonometric block negated.
double curve_equation_value(EnergyBranch family, CurveEquation eq, double q1, double q2,
                            double alpha);

// All q2 solutions in [q2_min, 0] of the selected equation at each q1 sample;
// these are the plotted curves whose intersections are the poles.
std::vector<CurveSample> curve_points(EnergyBranch family, CurveEquation eq, double alpha,
                                      const std::vector<double>& q1_samples, double q2_min,
                                      ExecPolicy policy = ExecPolicy::parallel);

// Roots of the continued equation on the q1 = 0 axis with q2 < 0, surfaced as
// a diagnostic only (one for the ground family, none for the excited).
std::vector<double> axis_roots(EnergyBranch family, double alpha);

inline constexpr double kAxisExclusion = 1e-6;  // |q1| below this is not a resonance

}  // namespace dpwell
