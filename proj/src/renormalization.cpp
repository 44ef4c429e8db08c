#include "dpwell/renormalization.hpp"

#include <cmath>

namespace dpwell {

namespace {

// sin(2 x0 k)/(2 x0 k) with its k -> 0 limit
double sinc2(double x0, double k) {
  const double arg = 2.0 * x0 * k;
  if (arg == 0.0) return 1.0;
  return std::sin(arg) / arg;
}

}  // namespace

double oscillatory_remainder(double k, double x0, double absE, const QuadratureSpec& spec) {
  if (k == 0.0) return 0.0;
  const Integrand f = [x0, absE](double p) { return std::cos(2.0 * x0 * p) / (p * p + absE); };
  const double half_period = M_PI / (2.0 * x0);
  if (!(half_period < k)) return integrate(f, 0.0, k, spec).value;

  QuadratureSpec cell_spec = spec;
  cell_spec.abs_tol = std::max(spec.abs_tol / std::ceil(k / half_period), 1e-16);
  cell_spec.max_subdivisions = 200;

  const int cells = static_cast<int>(std::floor(k / half_period));
  double total = 0.0;
  double a = 0.0;
  for (int m = 0; m < cells; ++m) {
    const double b = (m + 1) * half_period;
    total += integrate(f, a, b, cell_spec).value;
    a = b;
  }
  if (a < k) total += integrate(f, a, k, cell_spec).value;
  return total;
}

double cutoff_integral_sin(double k, double x0, double absE, const QuadratureSpec& spec) {
  if (k < 0.0) throw std::invalid_argument("cutoff k must be nonnegative");
  if (!(x0 > 0.0) || !(absE > 0.0))
    throw std::invalid_argument("cutoff integral needs x0 > 0 and absE > 0");
  if (k == 0.0) return 0.0;
  const double root = std::sqrt(absE);
  return k * (1.0 - sinc2(x0, k)) - root * std::atan(k / root) +
         absE * oscillatory_remainder(k, x0, absE, spec);
}

double cutoff_integral_cos(double k, double x0, double absE, const QuadratureSpec& spec) {
  if (k < 0.0) throw std::invalid_argument("cutoff k must be nonnegative");
  if (!(x0 > 0.0) || !(absE > 0.0))
    throw std::invalid_argument("cutoff integral needs x0 > 0 and absE > 0");
  if (k == 0.0) return 0.0;
  const double root = std::sqrt(absE);
  return k * (1.0 + sinc2(x0, k)) - root * std::atan(k / root) -
         absE * oscillatory_remainder(k, x0, absE, spec);
}

CutoffSample denominators(double k, const ModelParams& params, double absE,
                          const QuadratureSpec& spec) {
  params.require_renormalizable();
  CutoffSample sample;
  sample.k = k;
  sample.lambda_k = lambda_of_cutoff(params.beta, k);  // throws at the pole
  const double pi_over_lambda = k + M_PI / params.beta;
  sample.d_sin = pi_over_lambda - cutoff_integral_sin(k, params.x0, absE, spec);
  sample.d_cos = pi_over_lambda - cutoff_integral_cos(k, params.x0, absE, spec);
  return sample;
}

std::pair<double, double> denominator_limits(const ModelParams& params, double absE) {
  params.require_renormalizable();
  if (!(absE > 0.0)) throw std::invalid_argument("absE must be positive");
  const double root = std::sqrt(absE);
  const double tail = std::exp(-2.0 * params.x0 * root);
  const double d_sin = M_PI / params.beta + 0.5 * M_PI * root * (1.0 - tail);
  const double d_cos = M_PI / params.beta + 0.5 * M_PI * root * (1.0 + tail);
  return {d_sin, d_cos};
}

TraceIdentities trace_identities(double absE, const QuadratureSpec& spec) {
  if (!(absE > 0.0)) throw std::invalid_argument("absE must be positive");
  const double scale = std::sqrt(absE);
  const Integrand resolvent = [absE](double p) { return 1.0 / (p * p + absE); };
  const Integrand squared = [absE](double p) {
    const double d = p * p + absE;
    return p * p / (d * d);
  };
  TraceIdentities out;
  out.t19 = 2.0 / M_PI * integrate_half_line(resolvent, spec, scale).value;
  const double half = integrate_half_line(squared, spec, scale).value;
  out.t22 = 2.0 / M_PI * half;
  out.t34 = half;
  return out;
}

std::vector<ConvergenceRow> convergence_run(const ModelParams& params, double absE, int n_max,
                                            const QuadratureSpec& spec, ExecPolicy policy) {
  params.require_renormalizable();
  if (n_max < 1) throw std::invalid_argument("n_max must be at least 1");
  if (!(absE > 0.0)) throw std::invalid_argument("absE must be positive");

  const double x0 = params.x0;
  const double half_period = M_PI / (2.0 * x0);
  const Integrand osc = [x0, absE](double p) { return std::cos(2.0 * x0 * p) / (p * p + absE); };

  // k_n = n pi/x0 is 2n half-period cells; integrate each cell once, in parallel
  const std::size_t cells = 2 * static_cast<std::size_t>(n_max);
  QuadratureSpec cell_spec = spec;
  cell_spec.abs_tol = std::max(spec.abs_tol / static_cast<double>(cells), 1e-16);
  cell_spec.max_subdivisions = 200;
  std::vector<double> cell_values(cells);
  for_each_index(cells, policy, [&](std::size_t m) {
    const double a = static_cast<double>(m) * half_period;
    const double b = static_cast<double>(m + 1) * half_period;
    cell_values[m] = integrate(osc, a, b, cell_spec).value;
  });

  const auto [limit_sin, limit_cos] = denominator_limits(params, absE);
  const double root = std::sqrt(absE);

  std::vector<ConvergenceRow> rows(static_cast<std::size_t>(n_max));
  double remainder = 0.0;
  std::size_t consumed = 0;
  for (int n = 1; n <= n_max; ++n) {
    while (consumed < 2 * static_cast<std::size_t>(n)) remainder += cell_values[consumed++];
    const double k = static_cast<double>(n) * M_PI / x0;
    const double pi_over_lambda = k + M_PI / params.beta;
    const double i_sin =
        k * (1.0 - sinc2(x0, k)) - root * std::atan(k / root) + absE * remainder;
    const double i_cos =
        k * (1.0 + sinc2(x0, k)) - root * std::atan(k / root) - absE * remainder;

    ConvergenceRow row;
    row.n = n;
    row.sample.k = k;
    const double denom = params.beta * k + M_PI;
    // Eq.-28 form; infinite exactly at the pole, where pi/lambda = 0 stays exact
    row.sample.lambda_k = params.beta * M_PI / denom;
    row.sample.d_sin = pi_over_lambda - i_sin;
    row.sample.d_cos = pi_over_lambda - i_cos;
    row.delta_sin = std::fabs(row.sample.d_sin - limit_sin);
    row.delta_cos = std::fabs(row.sample.d_cos - limit_cos);
    rows[static_cast<std::size_t>(n - 1)] = row;
  }
  return rows;
}

}  // namespace dpwell
