#include "lark/prior.hpp"

#include <cmath>
#include <stdexcept>

#include "lark/kernels.hpp"
#include "lark/special.hpp"

namespace lark {

LevyFamily make_family(LevyKind kind, const Hyperparams& h, double gamma, double eta,
                       double alpha) {
  return LevyFamily(kind, gamma, eta, h.epsilon, h.omega_volume, alpha);
}

LarkState sample_prior(const Hyperparams& h, LevyKind kind, const KernelSpec& spec,
                       Rng& rng, double alpha, std::optional<long> fixed_j) {
  LarkState s;
  s.gamma = rng.gamma(h.a_gamma, h.b_gamma);
  s.eta = 1.0 / rng.gamma(h.a_eta, h.b_eta);
  const LevyFamily fam = make_family(kind, h, s.gamma, s.eta, alpha);
  const long j = fixed_j ? *fixed_j : rng.poisson(nu_plus(fam));
  if (j > kMaxPriorPoints)
    throw std::runtime_error("sample_prior: J exceeds the hard cap; check hyperparameters");
  s.points.reserve(j);
  for (long k = 0; k < j; ++k) {
    SupportPoint p;
    p.beta = sample_coefficient(fam, rng);
    p.omega.chi = rng.uniform(spec.xlo, spec.xhi);
    p.omega.lambda = rng.gamma(h.a_lambda, h.b_lambda);
    s.points.push_back(p);
  }
  return s;
}

std::vector<double> eval_realization(const LarkState& s, const KernelSpec& spec,
                                     std::span<const double> grid) {
  std::vector<double> out(grid.size(), 0.0);
  accumulate_curve(spec, s.rho, s.points, grid, out);
  return out;
}

namespace {

// int_X g(x; chi, lambda) dchi for fixed lambda (first power, not squared).
double chi_integral(const KernelSpec& spec, double x, double lambda, double rho) {
  const double lo = spec.xlo, hi = spec.xhi;
  if (spec.kind == KernelKind::Haar) {
    const double a = std::max(lo, x - 1.0 / lambda);
    const double b = std::min(hi, x);
    return std::max(0.0, b - a);
  }
  OmegaPoint om{0.0, lambda};
  auto f = [&](double chi) {
    om.chi = chi;
    return eval(spec, x, om, rho);
  };
  const int n = 1024;
  const double mid = std::min(std::max(x, lo), hi);
  auto simp = [&](double a, double b) {
    if (b <= a) return 0.0;
    const double step = (b - a) / n;
    double acc = f(a) + f(b);
    for (int i = 1; i < n; ++i) acc += f(a + i * step) * ((i % 2) ? 4.0 : 2.0);
    return acc * step / 3.0;
  };
  return simp(lo, mid) + simp(mid, hi);
}

template <typename G>
double mix_over_lambda(const Hyperparams& h, const G& g_of_lambda) {
  const int n = 256;
  double acc = 0.0;
  for (int i = 0; i < n; ++i) {
    const double u = (i + 0.5) / n;
    acc += g_of_lambda(gamma_quantile(h.a_lambda, h.b_lambda, u)) / n;
  }
  return acc;
}

}  // namespace

double prior_mean(const LevyFamily& fam, const Hyperparams& h, const KernelSpec& spec,
                  double x) {
  switch (fam.kind) {
    case LevyKind::SymGamma:
      return 0.0;
    case LevyKind::Gamma: {
      const double gint = mix_over_lambda(
          h, [&](double lam) { return chi_integral(spec, x, lam, spec.rho); });
      return fam.gamma * fam.omega_volume / fam.eta * gint / spec.width();
    }
    case LevyKind::SaS:
      throw std::invalid_argument("prior_mean: undefined for the stable family");
  }
  return 0.0;
}

double prior_cov(const LevyFamily& fam, const Hyperparams& h, const KernelSpec& spec,
                 double x1, double x2) {
  // second moment of the truncated coefficient measure:
  // int b^2 1{|b eta| > eps} nu_beta(db) = gamma eta^{-2} * m2
  double m2;
  const double e = fam.epsilon;
  switch (fam.kind) {
    case LevyKind::Gamma:
      m2 = (1.0 + e) * std::exp(-e);  // int_{eps}^inf t e^{-t} dt
      break;
    case LevyKind::SymGamma:
      m2 = 2.0 * (1.0 + e) * std::exp(-e);
      break;
    case LevyKind::SaS:
      throw std::invalid_argument("prior_cov: undefined for the stable family");
  }
  const double coef = fam.gamma / (fam.eta * fam.eta) * m2;
  auto cross = [&](double lam) {
    OmegaPoint om{0.0, lam};
    auto f = [&](double chi) {
      om.chi = chi;
      return eval(spec, x1, om, spec.rho) * eval(spec, x2, om, spec.rho);
    };
    const int n = 1024;
    double acc = 0.0;  // plain midpoint; integrand bounded, possibly kinked
    const double step = spec.width() / n;
    for (int i = 0; i < n; ++i) acc += f(spec.xlo + (i + 0.5) * step) * step;
    return acc;
  };
  const double gg = mix_over_lambda(h, cross);
  return coef * fam.omega_volume * gg / spec.width();
}

}  // namespace lark
