#pragma once

#include <array>
#include <string>

#include "lark/levy.hpp"
#include "lark/prior.hpp"

// Hyperparameter elicitation: solve (epsilon, a_gamma, b_gamma, a_eta, b_eta)
// against interval targets for J and the coefficients plus a mean-square
// truncation-error budget, and (a_lambda, b_lambda) from a quantile interval.

namespace lark {

struct ElicitationTargets {
  long j_lo = 5, j_hi = 100;
  double j_coverage = 0.95;
  double beta_lo = -25.0, beta_hi = 25.0;
  double beta_coverage = 0.95;
  // Budget rho_tr: E||L[phi] - L_eps[phi]||_2 <= rho_tr * ||phi||_2.
  double trunc_budget = 0.05;
  double lambda_lo = 0.2, lambda_hi = 20.0;
  double lambda_coverage = 0.95;
};

struct GammaShapeRate {
  double shape = 1.0, rate = 1.0;
};

// Gamma(shape, rate) whose central interval at the stated coverage matches
// (lo, hi) to 1e-6 relative. Throws (with residuals in the message) when no
// solution exists with shape in (1e-3, 1e3).
GammaShapeRate solve_lambda(double lo, double hi, double coverage);

struct HyperSolve {
  Hyperparams hyper;
  bool feasible = true;
  std::string binding;  // names the binding constraint when infeasible
  // relative residuals: [ P(J<=j_lo), P(J>j_hi), coefficient tail,
  //                       budget, secondary coefficient check ]
  std::array<double, 5> residuals{0, 0, 0, 0, 0};
};

// Marginal CDF of J (Poisson mixed over gamma ~ Ga(a,b) with rate-per-gamma c).
double j_marginal_cdf(long k, double a_gamma, double b_gamma, double c_per_gamma);

// Marginal tail P(|beta| > t) of the truncated coefficient law mixed over
// eta^{-1} ~ Ga(a_eta, b_eta); Gauss-Legendre in the mixing quantile.
double beta_marginal_tail(LevyKind kind, double alpha, double a_eta, double b_eta,
                          double epsilon, double t);

// Solve the five hyperparameters for the given family. kernel_l2 is accepted
// for interface completeness; the budget compares both sides per unit
// ||phi||_2, so it cancels and only its positivity is validated.
HyperSolve solve_hyper(const ElicitationTargets& t, LevyKind kind, double alpha,
                       double omega_volume, double kernel_l2 = 1.0);

}  // namespace lark
