#include "dpwell/model.hpp"

#include <cmath>

namespace dpwell {

const char* branch_name(EnergyBranch branch) {
  return branch == EnergyBranch::ground ? "ground" : "excited";
}

void ModelParams::require_spectral() const {
  if (!(beta < 0.0))
    throw std::invalid_argument("beta must be negative, got " + std::to_string(beta));
  if (!(x0 > 0.0))
    throw std::invalid_argument("x0 must be positive, got " + std::to_string(x0));
}

void ModelParams::require_renormalizable() const {
  if (beta == 0.0) throw std::invalid_argument("beta must be nonzero");
  if (!(x0 > 0.0))
    throw std::invalid_argument("x0 must be positive, got " + std::to_string(x0));
}

double branch_function_kappa(EnergyBranch branch, double kappa, const ModelParams& params) {
  params.require_spectral();
  if (!(kappa > 0.0))
    throw std::invalid_argument("kappa must be positive, got " + std::to_string(kappa));
  const double tail = std::exp(-2.0 * params.x0 * kappa);
  const double sign = branch == EnergyBranch::ground ? -1.0 : 1.0;
  return 1.0 / params.beta + 0.5 * kappa * (1.0 + sign * tail);
}

double branch_function_kappa_derivative(EnergyBranch branch, double kappa,
                                        const ModelParams& params) {
  const double tail = std::exp(-2.0 * params.x0 * kappa);
  if (branch == EnergyBranch::ground)
    return 0.5 * (1.0 - tail) + kappa * params.x0 * tail;
  return 0.5 * (1.0 + tail) - kappa * params.x0 * tail;
}

double branch_function(EnergyBranch branch, double energy, const ModelParams& params) {
  if (!(energy < 0.0))
    throw std::invalid_argument("bound-state energy must be negative, got " +
                                std::to_string(energy));
  return branch_function_kappa(branch, std::sqrt(-energy), params);
}

double kappa_lower_bound(EnergyBranch branch, double beta) {
  const double abs_beta = std::fabs(beta);
  return branch == EnergyBranch::ground ? 2.0 / abs_beta : 1.0 / abs_beta;
}

double kappa_excited_upper_bound(double beta) { return 2.0 / std::fabs(beta); }

double alpha_of(const ModelParams& params) {
  params.require_spectral();
  return 4.0 * params.x0 / params.beta;
}

double lambda_of_cutoff(double beta, double k) {
  if (beta == 0.0) throw std::invalid_argument("beta must be nonzero");
  if (!(k > 0.0)) throw std::invalid_argument("cutoff k must be positive");
  const double denom = beta * k + M_PI;
  if (denom == 0.0)
    throw degenerate_cutoff_error("lambda(k) pole: beta*k + pi vanishes at k = " +
                                  std::to_string(k));
  return beta * M_PI / denom;
}

}  // namespace dpwell
