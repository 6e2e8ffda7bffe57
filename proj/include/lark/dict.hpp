#pragma once

#include <functional>
#include <limits>
#include <span>
#include <vector>

#include "lark/rng.hpp"

// Continuous kernel dictionary: generator evaluation and L2 norms.

namespace lark {

enum class KernelKind { Gaussian, Laplace, OneSidedExp, Haar, PowerExp, SpaceTime };

// Whether the Gaussian-type exponent uses lambda or lambda^2 as inverse scale.
enum class LambdaConvention { Linear, Squared };

struct OmegaPoint {
  double chi = 0.0;     // location
  double lambda = 1.0;  // inverse scale (> 0)
};

struct SupportPoint {
  double beta = 0.0;
  OmegaPoint omega;
};

struct KernelSpec {
  KernelKind kind = KernelKind::Gaussian;
  LambdaConvention convention = LambdaConvention::Linear;
  double xlo = 0.0, xhi = 10.0;  // domain bounds of X
  // Optional hard support cutoff |x - chi| < support_radius (used by the
  // truncated-Gaussian variant); infinity disables it.
  double support_radius = std::numeric_limits<double>::infinity();
  // Power-exponential exponent used when kind == PowerExp and no explicit
  // rho is supplied at evaluation time.
  double rho = 2.0;

  double width() const { return xhi - xlo; }
  double midpoint() const { return 0.5 * (xlo + xhi); }
};

// g(x, omega) in [0,1].
double eval(const KernelSpec& spec, double x, const OmegaPoint& om);
double eval(const KernelSpec& spec, double x, const OmegaPoint& om, double rho);

// sum_j beta_j g(x, omega_j); empty list gives 0.
double design_row(const KernelSpec& spec, double x, std::span<const SupportPoint> pts);
double design_row(const KernelSpec& spec, double x, std::span<const SupportPoint> pts, double rho);

// Law of omega = (chi, lambda): chi ~ Un(X), lambda ~ Gamma(a, rate b),
// or a point mass at fixed_lambda when fixed_lambda > 0.
struct OmegaLaw {
  double a_lambda = 1.0, b_lambda = 1.0;
  double fixed_lambda = -1.0;
};

struct NormEstimate {
  double value = 0.0;
  double std_error = 0.0;  // zero for deterministic quadrature
};

// ||g(x,.)||_2^2 = int g(x,omega)^2 |Omega| pi_omega(domega), evaluated at
// x (defaults to the domain midpoint elsewhere). Deterministic quadrature:
// Gauss-Legendre in the lambda quantile, kink-split Simpson in chi.
NormEstimate l2_norm_sq(const KernelSpec& spec, const OmegaLaw& law, double omega_volume,
                        double x);

// Space-time kernel exp{-(s-sigma)'L(s-sigma)/2 - lambda|t-tau|} on R^2 x R+.
struct SpaceTimePoint {
  double sx = 0.0, sy = 0.0, t = 0.0;
};
struct SpaceTimeOmega {
  double sigx = 0.0, sigy = 0.0, tau = 0.0;
  double l11 = 1.0, l12 = 0.0, l22 = 1.0;  // symmetric positive definite
  double lambda = 1.0;                     // temporal decay rate
};
double eval_spacetime(const SpaceTimePoint& x, const SpaceTimeOmega& om);

// Monte Carlo L2 norm for the space-time kernel under a caller-supplied
// omega sampler; returns the estimate with its standard error.
NormEstimate l2_norm_sq_spacetime(const SpaceTimePoint& x,
                                  const std::function<SpaceTimeOmega(Rng&)>& draw_omega,
                                  double omega_volume, int n_samples, Rng& rng);

}  // namespace lark
