#include "dpwell/eigenfunctions.hpp"

#include <algorithm>
#include <cmath>

namespace dpwell {

BoundStateFunction BoundStateFunction::from_point(const SpectralPoint& point) {
  BoundStateFunction f;
  f.branch = point.branch;
  f.kappa = point.kappa;
  f.x0 = point.x0;
  f.normalization = 1.0;
  return f;
}

namespace {

double sign_of(double v) { return v < 0.0 ? -1.0 : 1.0; }

}  // namespace

double evaluate(const BoundStateFunction& f, double x) {
  if (x == f.x0 || x == -f.x0)
    throw std::domain_error("evaluate: kink point, use one_sided_values");
  const double near = std::exp(-f.kappa * std::fabs(x - f.x0));
  const double far = std::exp(-f.kappa * std::fabs(x + f.x0));
  const double s1 = sign_of(x - f.x0);
  const double s2 = sign_of(x + f.x0);
  const double sign = f.branch == EnergyBranch::ground ? 1.0 : -1.0;
  return f.normalization * 0.5 * (-s1 * near + sign * s2 * far);
}

OneSidedValues one_sided_values(const BoundStateFunction& f, double centre) {
  if (centre != f.x0 && centre != -f.x0)
    throw std::invalid_argument("one_sided_values: centre must be +x0 or -x0");
  const double tail = std::exp(-2.0 * f.kappa * f.x0);
  const double sign = f.branch == EnergyBranch::ground ? 1.0 : -1.0;
  OneSidedValues v;
  if (centre == f.x0) {
    // term centred at +x0 flips sign; the other sits at distance 2 x0 with sgn=+1
    v.f_left = 0.5 * (1.0 + sign * tail);
    v.f_right = 0.5 * (-1.0 + sign * tail);
    v.f_prime = 0.5 * f.kappa * (1.0 - sign * tail);
  } else {
    v.f_left = 0.5 * (tail - sign);
    v.f_right = 0.5 * (tail + sign);
    v.f_prime = 0.5 * f.kappa * (tail - sign);
  }
  v.f_left *= f.normalization;
  v.f_right *= f.normalization;
  v.f_prime *= f.normalization;
  return v;
}

double matching_residual_at(const BoundStateFunction& f, double beta, double centre) {
  const OneSidedValues v = one_sided_values(f, centre);
  return std::fabs((v.f_right - v.f_left) - beta * v.f_prime);
}

double matching_residual(const BoundStateFunction& f, double beta) {
  return matching_residual_at(f, beta, f.x0);
}

double l2_norm(const BoundStateFunction& f, const QuadratureSpec& spec) {
  const double L = 40.0 / f.kappa;
  const Integrand density = [&f](double x) {
    const double v = evaluate(f, x);
    return v * v;
  };
  // split at the kinks so each piece is smooth
  std::vector<double> cuts = {-L, L};
  if (-f.x0 > -L && -f.x0 < L) cuts.insert(cuts.end() - 1, -f.x0);
  if (f.x0 > -L && f.x0 < L) cuts.insert(cuts.end() - 1, f.x0);
  std::sort(cuts.begin(), cuts.end());
  double total = 0.0;
  for (std::size_t i = 0; i + 1 < cuts.size(); ++i)
    total += integrate(density, cuts[i], cuts[i + 1], spec).value;
  return std::sqrt(total);
}

BoundStateFunction normalized(BoundStateFunction f, const QuadratureSpec& spec) {
  const double norm = l2_norm(f, spec);
  if (!(norm > 0.0)) throw numerical_error("normalized: vanishing L2 norm");
  f.normalization /= norm;
  return f;
}

}  // namespace dpwell
