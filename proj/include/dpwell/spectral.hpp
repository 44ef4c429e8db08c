#pragma once

#include <vector>

#include "dpwell/model.hpp"
#include "dpwell/parallel.hpp"

namespace dpwell {

// One solved eigenvalue. kappa = sqrt(|energy|) is kept alongside the energy
// because everything downstream (eigenfunctions, degeneracy diagnostics) works
// in kappa. residual is |F(energy)| at the solution.
struct SpectralPoint {
  double beta = 0.0;
  double x0 = 0.0;
  EnergyBranch branch = EnergyBranch::ground;
  double energy = 0.0;
  double kappa = 0.0;
  double residual = 0.0;
};

inline constexpr double kDefaultSolverTol = 1e-12;

// Unique root of the branch function on its bracket. The ground bracket is
// open above; its upper end starts at 2/|beta| + 1 and the offset doubles
// until the sign changes (capped at 60 doublings).
SpectralPoint solve_eigenvalue(EnergyBranch branch, const ModelParams& params,
                               double tol = kDefaultSolverTol);

// Inverse curves: half-distance as a function of the eigenvalue at fixed beta.
// x0(E0) = -ln(1 - 2/(|beta| sqrt|E0|)) / (2 sqrt|E0|), defined for E0 < -4/beta^2;
// x0(E1) has ln(2/(|beta| sqrt|E1|) - 1) and lives on -4/beta^2 < E1 < -1/beta^2.
double x0_of_ground_energy(double energy, double beta);
double x0_of_excited_energy(double energy, double beta);

// Coupling as a function of the eigenvalue at fixed x0 > 0; strictly
// decreasing in E with range (-inf, 0).
double beta_of_energy(EnergyBranch branch, double energy, double x0);

enum class SweepAxis { x0, beta };
enum class GridSpacing { linear, log };

struct SweepRow {
  double value = 0.0;  // grid value of the swept axis
  double e0 = 0.0;
  double e1 = 0.0;
  double gap = 0.0;  // e1 - e0; may underflow to 0 at machine-degenerate points
  double residual0 = 0.0;
  double residual1 = 0.0;
};

struct SweepTable {
  SweepAxis axis = SweepAxis::x0;
  double fixed = 0.0;  // the non-swept parameter (beta when axis=x0, x0 when axis=beta)
  std::vector<SweepRow> rows;
};

// Grid of points for a sweep; log spacing works on magnitudes and requires
// both endpoints to share a sign.
std::vector<double> make_grid(double lo, double hi, int points, GridSpacing spacing);

// Both branch solutions on every grid point. Grid points are independent, so
// the parallel path maps them across threads; rows always come back in grid
// order and match the serial reference bit for bit.
SweepTable sweep(SweepAxis axis, double fixed, double lo, double hi, int points,
                 GridSpacing spacing, double tol = kDefaultSolverTol,
                 ExecPolicy policy = ExecPolicy::parallel);

}  // namespace dpwell
