#pragma once

#include <utility>
#include <vector>

#include "dpwell/model.hpp"
#include "dpwell/parallel.hpp"
#include "dpwell/quadrature.hpp"

// Ultraviolet-cutoff pipeline: the two regularized rank-one denominators, the
// running coupling, their closed-form large-k limits and the trace identities
// used as quadrature oracles.
//
// The exact decomposition of the cutoff integrals contains a sin(2 x0 k)/(2 x0)
// term that does not decay, so the closed-form limits hold along cutoff
// subsequences where it vanishes; convergence_run walks k_n = n pi / x0.

namespace dpwell {

struct CutoffSample {
  double k = 0.0;
  double lambda_k = 0.0;
  double d_sin = 0.0;
  double d_cos = 0.0;
};

struct ConvergenceRow {
  int n = 0;
  CutoffSample sample;
  double delta_sin = 0.0;  // |d_sin - closed-form limit|
  double delta_cos = 0.0;
};

// 2 int_0^k p^2 sin^2(x0 p)/(p^2+|E|) dp, evaluated through its exact
// decomposition; only the oscillatory cos(2 x0 p)/(p^2+|E|) remainder is
// quadratured (half-period subdivision).
double cutoff_integral_sin(double k, double x0, double absE, const QuadratureSpec& spec);
// Companion with 1 + cos(2 x0 p) and the oscillatory term flipped in sign.
double cutoff_integral_cos(double k, double x0, double absE, const QuadratureSpec& spec);

// int_0^k cos(2 x0 p)/(p^2 + absE) dp with cells at half-period boundaries.
double oscillatory_remainder(double k, double x0, double absE, const QuadratureSpec& spec);

// d_sin = pi/lambda(k) - cutoff_integral_sin, d_cos likewise, with
// pi/lambda(k) expanded exactly as k + pi/beta. lambda_k is Eq.-28 style and
// throws at its pole.
CutoffSample denominators(double k, const ModelParams& params, double absE,
                          const QuadratureSpec& spec);

// Closed-form k->inf limits: pi/beta + (pi sqrt|E|/2)(1 -/+ e^{-2 x0 sqrt|E|}).
// Their zeros in absE are exactly the two eigenvalue conditions times pi.
std::pair<double, double> denominator_limits(const ModelParams& params, double absE);

struct TraceIdentities {
  double t19 = 0.0;  // (1/pi) int dp/(p^2+|E|)        = 1/sqrt|E|
  double t22 = 0.0;  // (1/pi) int p^2 dp/(p^2+|E|)^2  = 1/(2 sqrt|E|)
  double t34 = 0.0;  // int_0^inf p^2 dp/(p^2+|E|)^2   = pi/(4 sqrt|E|)
};

TraceIdentities trace_identities(double absE, const QuadratureSpec& spec);

// Denominators along k_n = n pi / x0 for n = 1..n_max with distances from the
// closed-form limits. Cell integrals of the oscillatory remainder are computed
// independently (parallel map), then prefix-summed in order, so the run is
// deterministic and cheap even for n_max = 1e4. The lambda pole, when it falls
// on the sequence, is recorded as an infinite lambda_k; the denominators stay
// finite through the exact identity pi/lambda = k + pi/beta.
std::vector<ConvergenceRow> convergence_run(const ModelParams& params, double absE, int n_max,
                                            const QuadratureSpec& spec,
                                            ExecPolicy policy = ExecPolicy::parallel);

}  // namespace dpwell
