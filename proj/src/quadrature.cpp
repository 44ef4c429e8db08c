#include "dpwell/quadrature.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <queue>
#include <vector>

namespace dpwell {

namespace {

// QUADPACK dqk15 nodes and weights on [-1, 1]
constexpr double kXgk[8] = {0.991455371120812639206854697526329,
                            0.949107912342758524526189684047851,
                            0.864864423359769072789712788640926,
                            0.741531185599394439863864773280788,
                            0.586087235467691130294144838258730,
                            0.405845151377397166906606412076961,
                            0.207784955007898467600689403773245,
                            0.000000000000000000000000000000000};
constexpr double kWgk[8] = {0.022935322010529224963732008058970,
                            0.063092092629978553290700663189204,
                            0.104790010322250183839876322541518,
                            0.140653259715525918745189590510238,
                            0.169004726639267902826583426598550,
                            0.190350578064785409913256402421014,
                            0.204432940075298892414161999234649,
                            0.209482141084727828012999174891714};
constexpr double kWg[4] = {0.129484966168869693270611432679082,
                           0.279705391489276667901467771423780,
                           0.381830050505118944950369775488975,
                           0.417959183673469387755102040816327};

struct CellEstimate {
  double value;
  double error;
};

CellEstimate gk15(const Integrand& f, double a, double b) {
  const double centre = 0.5 * (a + b);
  const double half = 0.5 * (b - a);

  const double fc = f(centre);
  double resk = kWgk[7] * fc;
  double resg = kWg[3] * fc;
  double resabs = std::fabs(resk);

  double fv[15];
  fv[7] = fc;
  for (int j = 0; j < 7; ++j) {
    const double dx = half * kXgk[j];
    const double f1 = f(centre - dx);
    const double f2 = f(centre + dx);
    fv[j] = f1;
    fv[14 - j] = f2;
    resk += kWgk[j] * (f1 + f2);
    resabs += kWgk[j] * (std::fabs(f1) + std::fabs(f2));
    if (j % 2 == 1) resg += kWg[j / 2] * (f1 + f2);
  }

  const double mean = 0.5 * resk;
  double resasc = kWgk[7] * std::fabs(fc - mean);
  for (int j = 0; j < 7; ++j)
    resasc += kWgk[j] * (std::fabs(fv[j] - mean) + std::fabs(fv[14 - j] - mean));

  const double value = resk * half;
  resabs *= std::fabs(half);
  resasc *= std::fabs(half);

  double err = std::fabs((resk - resg) * half);
  if (resasc != 0.0 && err != 0.0)
    err = resasc * std::min(1.0, std::pow(200.0 * err / resasc, 1.5));
  const double eps = std::numeric_limits<double>::epsilon();
  const double underflow = std::numeric_limits<double>::min();
  if (resabs > underflow / (50.0 * eps)) err = std::max(err, 50.0 * eps * resabs);
  return {value, err};
}

struct Interval {
  double a, b, value, error;
  long id;  // insertion order, breaks heap ties deterministically
};

struct WorstFirst {
  bool operator()(const Interval& lhs, const Interval& rhs) const {
    if (lhs.error != rhs.error) return lhs.error < rhs.error;
    return lhs.id > rhs.id;
  }
};

}  // namespace

QuadratureResult integrate(const Integrand& f, double a, double b, const QuadratureSpec& spec) {
  if (a == b) return {0.0, 0.0, 0};
  std::priority_queue<Interval, std::vector<Interval>, WorstFirst> queue;
  std::vector<Interval> done;
  long next_id = 0;

  CellEstimate first = gk15(f, a, b);
  queue.push({a, b, first.value, first.error, next_id++});

  double total_value = first.value;
  double total_error = first.error;
  int subdivisions = 0;

  const auto tolerance = [&](double v) { return std::max(spec.abs_tol, spec.rel_tol * std::fabs(v)); };

  while (total_error > tolerance(total_value)) {
    if (subdivisions >= spec.max_subdivisions || queue.empty())
      throw quadrature_error("integrate: tolerance not reached after " +
                                 std::to_string(subdivisions) + " subdivisions",
                             total_error);
    Interval worst = queue.top();
    queue.pop();
    if (worst.error <= tolerance(total_value) * 0.01 ||
        worst.b - worst.a <= std::fabs(worst.a) * std::numeric_limits<double>::epsilon()) {
      // interval is as resolved as double precision allows; freeze it
      done.push_back(worst);
      continue;
    }
    const double mid = 0.5 * (worst.a + worst.b);
    CellEstimate left = gk15(f, worst.a, mid);
    CellEstimate right = gk15(f, mid, worst.b);
    ++subdivisions;
    total_value += left.value + right.value - worst.value;
    total_error += left.error + right.error - worst.error;
    queue.push({worst.a, mid, left.value, left.error, next_id++});
    queue.push({mid, worst.b, right.value, right.error, next_id++});
  }

  // re-sum left to right so the result does not depend on refinement history
  while (!queue.empty()) {
    done.push_back(queue.top());
    queue.pop();
  }
  std::sort(done.begin(), done.end(),
            [](const Interval& lhs, const Interval& rhs) { return lhs.a < rhs.a; });
  double value = 0.0;
  double error = 0.0;
  for (const Interval& cell : done) {
    value += cell.value;
    error += cell.error;
  }
  return {value, error, subdivisions};
}

QuadratureResult integrate_half_line(const Integrand& f, const QuadratureSpec& spec,
                                     double scale) {
  if (!(scale > 0.0)) throw std::invalid_argument("half-line scale must be positive");
  const Integrand g = [&f, scale](double t) {
    if (t >= 1.0) return 0.0;
    const double u = 1.0 - t;
    const double p = scale * t / u;
    return f(p) * scale / (u * u);
  };
  return integrate(g, 0.0, 1.0, spec);
}

QuadratureResult integrate_cos_half_line(const Integrand& f, double freq, double mono_from,
                                         const QuadratureSpec& spec) {
  if (freq < 0.0) throw std::invalid_argument("freq must be nonnegative");
  if (freq == 0.0) return integrate_half_line(f, spec, std::max(mono_from, 1.0));

  // first zero of cos(freq p) at or beyond mono_from
  const double half_period = M_PI / freq;
  double z = 0.5 * half_period;
  if (z < mono_from) z += std::ceil((mono_from - z) / half_period) * half_period;

  const Integrand g = [&f, freq](double p) { return f(p) * std::cos(freq * p); };
  QuadratureResult head = integrate(g, 0.0, z, spec);

  // alternating lobe series with Euler acceleration
  const double tol = std::max(spec.abs_tol, spec.rel_tol * std::fabs(head.value));
  QuadratureSpec cell_spec = spec;
  cell_spec.abs_tol = std::max(tol * 1e-3, 1e-15);
  cell_spec.max_subdivisions = 200;

  std::vector<double> euler;  // running averaged-partial-sum diagonal
  double tail = 0.0;
  double previous = std::numeric_limits<double>::infinity();
  int used = head.subdivisions;
  double cell_error = 0.0;
  bool converged = false;
  int stable = 0;

  double partial = 0.0;
  for (int m = 0; m < spec.max_subdivisions; ++m) {
    QuadratureResult lobe = integrate(g, z, z + half_period, cell_spec);
    z += half_period;
    used += lobe.subdivisions;
    cell_error += lobe.error;
    partial += lobe.value;

    // push the new partial sum through the averaging table
    double carry = partial;
    for (double& slot : euler) {
      const double tmp = slot;
      slot = carry;
      carry = 0.5 * (tmp + carry);
    }
    euler.push_back(carry);
    tail = carry;

    if (m >= 3 && std::fabs(tail - previous) <= 0.25 * tol) {
      if (++stable >= 2) {
        converged = true;
        break;
      }
    } else {
      stable = 0;
    }
    previous = tail;
  }
  if (!converged)
    throw quadrature_error("integrate_cos_half_line: oscillatory tail did not converge",
                           std::fabs(tail - previous));
  return {head.value + tail, head.error + cell_error + std::fabs(tail - previous), used};
}

}  // namespace dpwell
