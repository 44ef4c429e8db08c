#pragma once

#include <stdexcept>
#include <string>

// Core definitions for the 1D Hamiltonian with two symmetric attractive
// nonlocal delta'-interactions at +-x0, coupling beta (units hbar = 2m = 1).
// Everything downstream (spectra, resonances, renormalization flow) is built
// from the two branch functions defined here.

namespace dpwell {

// Spectral channel of the symmetric double well. The ground state couples to
// the odd (sin-kernel) rank-one term, the excited state to the even
// (cos-kernel) one.
enum class EnergyBranch { ground, excited };

const char* branch_name(EnergyBranch branch);

// Thrown when an iterative numerical procedure fails to converge.
class numerical_error : public std::runtime_error {
 public:
  explicit numerical_error(const std::string& what) : std::runtime_error(what) {}
};

// The two physical knobs of the model: renormalized coupling beta and
// half-distance x0 between the interaction centres.
struct ModelParams {
  double beta = -1.0;
  double x0 = 1.0;

  // beta < 0 and x0 > 0; required by every bound-state / resonance operation.
  void require_spectral() const;
  // beta != 0 and x0 > 0; the renormalization flow only needs beta nonzero.
  void require_renormalizable() const;
};

// Branch function F(E) = 1/beta + (sqrt|E|/2) (1 - e^{-2 x0 sqrt|E|}) for the
// ground branch, plus sign in front of the exponential for the excited one.
// Roots of F in E are the eigenvalues. Requires E < 0 and beta < 0.
double branch_function(EnergyBranch branch, double energy, const ModelParams& params);

// Same function expressed in kappa = sqrt(|E|), the variable all root finding
// uses: both branches are smooth and strictly monotone in kappa on their
// brackets, ground on (2/|beta|, inf), excited on (1/|beta|, 2/|beta|).
double branch_function_kappa(EnergyBranch branch, double kappa, const ModelParams& params);
double branch_function_kappa_derivative(EnergyBranch branch, double kappa,
                                        const ModelParams& params);

// Lower endpoint of the kappa bracket of a branch.
double kappa_lower_bound(EnergyBranch branch, double beta);
// Upper endpoint for the excited branch (the ground bracket is unbounded).
double kappa_excited_upper_bound(double beta);

// alpha = 4 x0 / beta, the dimensionless combination the resonance equations
// are written in. Negative whenever beta < 0, x0 > 0.
double alpha_of(const ModelParams& params);

// Running coupling of the ultraviolet cutoff, lambda(k) = beta pi/(beta k + pi),
// fixed so that pi/lambda(k) = k + pi/beta identically. Throws
// degenerate_cutoff_error at the pole k = -pi/beta.
double lambda_of_cutoff(double beta, double k);

class degenerate_cutoff_error : public numerical_error {
 public:
  explicit degenerate_cutoff_error(const std::string& what) : numerical_error(what) {}
};

}  // namespace dpwell
