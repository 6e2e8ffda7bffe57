#include "lark/levy.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>

#include "lark/special.hpp"

namespace lark {

namespace {
constexpr double kNegInf = -std::numeric_limits<double>::infinity();
}

LevyFamily::LevyFamily(LevyKind k, double g, double e, double eps, double omv, double a)
    : kind(k), gamma(g), eta(e), alpha(a), epsilon(eps), omega_volume(omv) {
  if (!(gamma > 0.0) || !(eta > 0.0) || !(epsilon > 0.0) || !(omega_volume > 0.0))
    throw std::invalid_argument("LevyFamily: gamma, eta, epsilon, |Omega| must be positive");
  if (kind == LevyKind::SaS && !(alpha > 0.0 && alpha < 2.0))
    throw std::invalid_argument("LevyFamily: SaS requires alpha in (0,2)");
}

double sas_tail_constant(double alpha) {
  return std::tgamma(alpha) * std::sin(M_PI * alpha / 2.0) / M_PI;
}

double nu_plus_per_gamma(const LevyFamily& f) {
  switch (f.kind) {
    case LevyKind::Gamma:
      return f.omega_volume * exp_integral_e1(f.epsilon);
    case LevyKind::SymGamma:
      return 2.0 * f.omega_volume * exp_integral_e1(f.epsilon);
    case LevyKind::SaS:
      return 2.0 * f.omega_volume * sas_tail_constant(f.alpha) *
             std::pow(f.epsilon, -f.alpha);
  }
  return 0.0;
}

double nu_plus(const LevyFamily& f) { return f.gamma * nu_plus_per_gamma(f); }

bool in_support(const LevyFamily& f, double beta) {
  if (f.kind == LevyKind::Gamma && !(beta > 0.0)) return false;
  return std::abs(beta) * f.eta > f.epsilon;
}

double sample_coefficient(const LevyFamily& f, Rng& rng) {
  const double u = rng.uniform();
  switch (f.kind) {
    case LevyKind::Gamma: {
      // T = beta*eta has density t^{-1} e^{-t} / E1(eps) on (eps, inf);
      // invert the tail E1(t) = u * E1(eps).
      const double t = exp_integral_e1_inv(u * exp_integral_e1(f.epsilon));
      return t / f.eta;
    }
    case LevyKind::SymGamma: {
      const double t = exp_integral_e1_inv(u * exp_integral_e1(f.epsilon));
      return (rng.bernoulli(0.5) ? t : -t) / f.eta;
    }
    case LevyKind::SaS: {
      // |beta| is Pareto(alpha) above eps/eta (closed-form quantile).
      const double mag = (f.epsilon / f.eta) * std::pow(u, -1.0 / f.alpha);
      return rng.bernoulli(0.5) ? mag : -mag;
    }
  }
  return 0.0;
}

double coefficient_log_density(const LevyFamily& f, double beta) {
  if (!in_support(f, beta)) return kNegInf;
  const double ab = std::abs(beta);
  switch (f.kind) {
    case LevyKind::Gamma:
      return -std::log(beta) - beta * f.eta - std::log(exp_integral_e1(f.epsilon));
    case LevyKind::SymGamma:
      return -std::log(ab) - ab * f.eta - std::log(2.0 * exp_integral_e1(f.epsilon));
    case LevyKind::SaS:
      return std::log(f.alpha / 2.0) + f.alpha * std::log(f.epsilon / f.eta) -
             (f.alpha + 1.0) * std::log(ab);
  }
  return kNegInf;
}

double levy_log_intensity_beta(const LevyFamily& f, double beta) {
  if (!in_support(f, beta)) return kNegInf;
  const double ab = std::abs(beta);
  switch (f.kind) {
    case LevyKind::Gamma:
      return std::log(f.gamma) - std::log(beta) - beta * f.eta;
    case LevyKind::SymGamma:
      return std::log(f.gamma) - std::log(ab) - ab * f.eta;
    case LevyKind::SaS:
      return std::log(f.gamma) - f.alpha * std::log(f.eta) +
             std::log(f.alpha * sas_tail_constant(f.alpha)) - (f.alpha + 1.0) * std::log(ab);
  }
  return kNegInf;
}

double truncation_error_factor(const LevyFamily& f) {
  const double e = f.epsilon;
  switch (f.kind) {
    case LevyKind::Gamma:
      return f.gamma / (f.eta * f.eta) * (1.0 - (1.0 + e) * std::exp(-e));
    case LevyKind::SymGamma:
      return 2.0 * f.gamma / (f.eta * f.eta) * (1.0 - (1.0 + e) * std::exp(-e));
    case LevyKind::SaS:
      return 2.0 * f.gamma / (f.eta * f.eta) * f.alpha * sas_tail_constant(f.alpha) /
             (2.0 - f.alpha) * std::pow(e, 2.0 - f.alpha);
  }
  return 0.0;
}

double local_l2_mass(const LevyFamily& f) {
  // int_{-1}^{1} b^2 nu_beta(b) db * |Omega|, adaptive Simpson on (0,1] with
  // the integrable endpoint handled by the substitution b = s^2.
  auto integrand = [&](double b) -> double {
    switch (f.kind) {
      case LevyKind::Gamma:
        return f.gamma * b * std::exp(-b * f.eta);
      case LevyKind::SymGamma:
        return 2.0 * f.gamma * b * std::exp(-b * f.eta);
      case LevyKind::SaS:
        return 2.0 * f.gamma * std::pow(f.eta, -f.alpha) * f.alpha *
               sas_tail_constant(f.alpha) * std::pow(b, 1.0 - f.alpha);
    }
    return 0.0;
  };
  // b = s^2, db = 2 s ds over s in (0,1]
  const int n = 4096;
  double sum = 0.0;
  for (int i = 0; i < n; ++i) {
    const double s = (i + 0.5) / n;
    sum += integrand(s * s) * 2.0 * s / n;
  }
  return sum * f.omega_volume;
}

}  // namespace lark
