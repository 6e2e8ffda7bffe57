#pragma once

#include <optional>
#include <vector>

#include "lark/dict.hpp"
#include "lark/levy.hpp"
#include "lark/rng.hpp"

// Hierarchical prior: gamma ~ Ga(a_gamma, b_gamma), eta^{-1} ~ Ga(a_eta, b_eta),
// J | (gamma, eta) ~ Po(nu+), then J iid pairs (beta_j, omega_j) with beta from
// the truncated coefficient law, chi ~ Un(X), lambda ~ Ga(a_lambda, b_lambda).

namespace lark {

struct Hyperparams {
  double epsilon = 0.01;
  double a_gamma = 1.0, b_gamma = 1.0;
  double a_eta = 1.0, b_eta = 1.0;      // on eta^{-1}
  double a_lambda = 1.0, b_lambda = 1.0;
  double omega_volume = 10.0;
};

struct LarkState {
  double gamma = 1.0;
  double eta = 1.0;
  double sigma2 = 1.0;
  double rho = 2.0;  // shared power-exponential exponent; ignored otherwise
  std::vector<SupportPoint> points;

  int j() const { return static_cast<int>(points.size()); }
};

// Hard guard against pathological hyperparameter settings.
inline constexpr long kMaxPriorPoints = 1000000;

LevyFamily make_family(LevyKind kind, const Hyperparams& h, double gamma, double eta,
                       double alpha = 1.0);

// Full draw from the hierarchy. fixed_j conditions on the number of support
// points (for reproducing realization figures); it skips the Poisson stage only.
LarkState sample_prior(const Hyperparams& h, LevyKind kind, const KernelSpec& spec,
                       Rng& rng, double alpha = 1.0,
                       std::optional<long> fixed_j = std::nullopt);

std::vector<double> eval_realization(const LarkState& s, const KernelSpec& spec,
                                     std::span<const double> grid);

// E f(x) at given (gamma, eta): gamma |Omega| eta^{-1} int g(x,.) pi_omega for
// the positive Gamma family, identically zero for SymGamma. SaS has no mean.
double prior_mean(const LevyFamily& fam, const Hyperparams& h, const KernelSpec& spec,
                  double x);

// Cov{f(x1), f(x2)} of the truncated field at given (gamma, eta):
// int g(x1,.) g(x2,.) b^2 1{|b eta|>eps} nu(db domega), by quadrature.
double prior_cov(const LevyFamily& fam, const Hyperparams& h, const KernelSpec& spec,
                 double x1, double x2);

}  // namespace lark
