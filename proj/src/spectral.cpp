#include "dpwell/spectral.hpp"

#include <cmath>
#include <string>

#include "dpwell/rootfind.hpp"

namespace dpwell {

SpectralPoint solve_eigenvalue(EnergyBranch branch, const ModelParams& params, double tol) {
  params.require_spectral();
  if (!(tol > 0.0)) throw std::invalid_argument("solver tolerance must be positive");

  const auto f = [&](double kappa) { return branch_function_kappa(branch, kappa, params); };
  const auto fp = [&](double kappa) {
    return branch_function_kappa_derivative(branch, kappa, params);
  };

  double lo = kappa_lower_bound(branch, params.beta);
  double hi;
  if (branch == EnergyBranch::excited) {
    hi = kappa_excited_upper_bound(params.beta);
  } else {
    // E0 -> -inf as x0 -> 0, so the upper end has to grow until F changes sign
    double offset = 1.0;
    hi = lo + offset;
    int doublings = 0;
    while (f(hi) < 0.0) {
      if (++doublings > 60)
        throw numerical_error("solve_eigenvalue: no sign change after 60 bracket doublings");
      offset *= 2.0;
      hi = lo + offset;
    }
  }

  const RootResult root = solve_bracketed(f, fp, lo, hi, tol);
  SpectralPoint point;
  point.beta = params.beta;
  point.x0 = params.x0;
  point.branch = branch;
  point.kappa = root.x;
  point.energy = -root.x * root.x;
  point.residual = std::fabs(root.f);
  return point;
}

double x0_of_ground_energy(double energy, double beta) {
  if (!(beta < 0.0)) throw std::invalid_argument("beta must be negative");
  const double threshold = -4.0 / (beta * beta);
  if (!(energy < threshold))
    throw std::invalid_argument("ground energy must lie below -4/beta^2 = " +
                                std::to_string(threshold));
  const double kappa = std::sqrt(-energy);
  const double arg = 1.0 - 2.0 / (std::fabs(beta) * kappa);
  return -std::log(arg) / (2.0 * kappa);
}

double x0_of_excited_energy(double energy, double beta) {
  if (!(beta < 0.0)) throw std::invalid_argument("beta must be negative");
  const double b2 = beta * beta;
  if (!(energy > -4.0 / b2 && energy < -1.0 / b2))
    throw std::invalid_argument("excited energy must lie in (-4/beta^2, -1/beta^2)");
  const double kappa = std::sqrt(-energy);
  const double arg = 2.0 / (std::fabs(beta) * kappa) - 1.0;
  return -std::log(arg) / (2.0 * kappa);
}

double beta_of_energy(EnergyBranch branch, double energy, double x0) {
  if (!(energy < 0.0)) throw std::invalid_argument("energy must be negative");
  if (!(x0 > 0.0)) throw std::invalid_argument("x0 must be positive");
  const double kappa = std::sqrt(-energy);
  const double tail = std::exp(-2.0 * x0 * kappa);
  const double sign = branch == EnergyBranch::ground ? -1.0 : 1.0;
  return -2.0 / (kappa * (1.0 + sign * tail));
}

std::vector<double> make_grid(double lo, double hi, int points, GridSpacing spacing) {
  if (points < 2) throw std::invalid_argument("grid needs at least 2 points");
  if (!(lo < hi)) throw std::invalid_argument("grid range must satisfy lo < hi");
  std::vector<double> grid(static_cast<std::size_t>(points));
  if (spacing == GridSpacing::linear) {
    const double step = (hi - lo) / (points - 1);
    for (int i = 0; i < points; ++i) grid[static_cast<std::size_t>(i)] = lo + step * i;
  } else {
    if (lo == 0.0 || hi == 0.0 || (lo < 0.0) != (hi < 0.0))
      throw std::invalid_argument("log spacing needs endpoints of one sign");
    const double sign = lo < 0.0 ? -1.0 : 1.0;
    const double llo = std::log(std::fabs(lo));
    const double lhi = std::log(std::fabs(hi));
    const double step = (lhi - llo) / (points - 1);
    for (int i = 0; i < points; ++i)
      grid[static_cast<std::size_t>(i)] = sign * std::exp(llo + step * i);
  }
  grid.front() = lo;
  grid.back() = hi;
  return grid;
}

SweepTable sweep(SweepAxis axis, double fixed, double lo, double hi, int points,
                 GridSpacing spacing, double tol, ExecPolicy policy) {
  if (axis == SweepAxis::x0) {
    if (!(fixed < 0.0)) throw std::invalid_argument("x0 sweep needs fixed beta < 0");
    if (!(lo > 0.0)) throw std::invalid_argument("x0 sweep range must be positive");
  } else {
    if (!(fixed > 0.0)) throw std::invalid_argument("beta sweep needs fixed x0 > 0");
    if (!(hi < 0.0)) throw std::invalid_argument("beta sweep range must stay negative");
  }

  SweepTable table;
  table.axis = axis;
  table.fixed = fixed;
  const std::vector<double> grid = make_grid(lo, hi, points, spacing);
  table.rows.resize(grid.size());

  for_each_index(grid.size(), policy, [&](std::size_t i) {
    ModelParams p;
    if (axis == SweepAxis::x0) {
      p.beta = fixed;
      p.x0 = grid[i];
    } else {
      p.beta = grid[i];
      p.x0 = fixed;
    }
    SweepRow row;
    row.value = grid[i];
    try {
      const SpectralPoint g = solve_eigenvalue(EnergyBranch::ground, p, tol);
      const SpectralPoint e = solve_eigenvalue(EnergyBranch::excited, p, tol);
      row.e0 = g.energy;
      row.e1 = e.energy;
      row.gap = e.energy - g.energy;
      row.residual0 = g.residual;
      row.residual1 = e.residual;
    } catch (const std::exception& err) {
      throw numerical_error("sweep failed at grid index " + std::to_string(i) + " (value " +
                            std::to_string(grid[i]) + "): " + err.what());
    }
    table.rows[i] = row;
  });
  return table;
}

}  // namespace dpwell
