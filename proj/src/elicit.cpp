#include "lark/elicit.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>
#include <stdexcept>

#include "lark/special.hpp"

namespace lark {

namespace {

// ---- Gauss-Legendre nodes on (0,1), 256 points, generated once ----------
struct GL256 {
  std::array<double, 256> u{}, w{};
  GL256() {
    // Newton on Legendre P_n with the usual k-th root initial guess.
    const int n = 256;
    for (int k = 0; k < n; ++k) {
      double x = std::cos(M_PI * (k + 0.75) / (n + 0.5));
      for (int it = 0; it < 50; ++it) {
        double p0 = 1.0, p1 = x;
        for (int j = 2; j <= n; ++j) {
          const double p2 = ((2.0 * j - 1.0) * x * p1 - (j - 1.0) * p0) / j;
          p0 = p1;
          p1 = p2;
        }
        const double dp = n * (x * p1 - p0) / (x * x - 1.0);
        const double dx = p1 / dp;
        x -= dx;
        if (std::abs(dx) < 1e-15) break;
      }
      double p0 = 1.0, p1 = x;
      for (int j = 2; j <= n; ++j) {
        const double p2 = ((2.0 * j - 1.0) * x * p1 - (j - 1.0) * p0) / j;
        p0 = p1;
        p1 = p2;
      }
      const double dp = n * (x * p1 - p0) / (x * x - 1.0);
      u[k] = 0.5 * (1.0 - x);  // map [-1,1] -> (0,1), reversed order is harmless
      w[k] = 1.0 / ((1.0 - x * x) * dp * dp);
    }
  }
};
const GL256& gl256() {
  static const GL256 g;
  return g;
}

}  // namespace

double j_marginal_cdf(long k, double a_gamma, double b_gamma, double c_per_gamma) {
  if (k < 0) return 0.0;
  // Negative binomial: pmf(0) = (b/(b+c))^a, pmf(j+1) = pmf(j) q (a+j)/(j+1)
  const double q = c_per_gamma / (b_gamma + c_per_gamma);
  double pmf = std::exp(a_gamma * std::log(b_gamma / (b_gamma + c_per_gamma)));
  double cdf = pmf;
  for (long j = 0; j < k; ++j) {
    pmf *= q * (a_gamma + j) / (j + 1.0);
    cdf += pmf;
  }
  return std::min(cdf, 1.0);
}

double beta_marginal_tail(LevyKind kind, double alpha, double a_eta, double b_eta,
                          double epsilon, double t) {
  const auto& g = gl256();
  double acc = 0.0;
  const double e1eps = exp_integral_e1(epsilon);
  for (int i = 0; i < 256; ++i) {
    const double x = gamma_quantile(a_eta, b_eta, g.u[i]);  // x = eta^{-1}
    double tail;
    if (kind == LevyKind::SaS) {
      tail = std::min(1.0, std::pow(epsilon * x / t, alpha));
    } else {
      tail = (t >= epsilon * x) ? exp_integral_e1(t / x) / e1eps : 1.0;
    }
    acc += g.w[i] * tail;
  }
  return acc;
}

namespace {

struct JPair {
  double a_gamma, b_gamma;
};

// Match P(J <= j_lo) = tau and P(J > j_hi) = tau exactly (2-d damped Newton
// in log parameters).
JPair solve_j_pair(double c_eps, long j_lo, long j_hi, double tau) {
  double la = std::log(2.5);
  double lb = std::log(2.5 * c_eps / (0.5 * (j_lo + j_hi)));
  auto resid = [&](double a, double b, double& r1, double& r2) {
    r1 = std::log(j_marginal_cdf(j_lo, a, b, c_eps) / tau);
    r2 = std::log((1.0 - j_marginal_cdf(j_hi, a, b, c_eps)) / tau);
  };
  for (int it = 0; it < 200; ++it) {
    const double a = std::exp(la), b = std::exp(lb);
    double r1, r2;
    resid(a, b, r1, r2);
    if (std::abs(r1) < 1e-10 && std::abs(r2) < 1e-10) break;
    const double h = 1e-6;
    double r1a, r2a, r1b, r2b;
    resid(std::exp(la + h), b, r1a, r2a);
    resid(a, std::exp(lb + h), r1b, r2b);
    const double j11 = (r1a - r1) / h, j12 = (r1b - r1) / h;
    const double j21 = (r2a - r2) / h, j22 = (r2b - r2) / h;
    const double det = j11 * j22 - j12 * j21;
    if (std::abs(det) < 1e-14) break;
    double da = (r1 * j22 - r2 * j12) / det;
    double db = (j11 * r2 - j21 * r1) / det;
    const double cap = 1.0;  // damp steps to one e-fold
    da = std::clamp(da, -cap, cap);
    db = std::clamp(db, -cap, cap);
    la -= da;
    lb -= db;
  }
  return {std::exp(la), std::exp(lb)};
}

double trunc_factor_unit(LevyKind kind, double alpha, double eps) {
  return truncation_error_factor(LevyFamily(kind, 1.0, 1.0, eps, 1.0, alpha));
}

// Mean of gamma under the J-pair solution at truncation level eps.
double mean_gamma_at(LevyKind kind, double alpha, double omega_volume, double eps,
                     const ElicitationTargets& t, double tau_j, JPair* out = nullptr) {
  const LevyFamily ref(kind, 1.0, 1.0, eps, omega_volume, alpha);
  const double c_eps = nu_plus_per_gamma(ref);
  const JPair jp = solve_j_pair(c_eps, t.j_lo, t.j_hi, tau_j);
  if (out) *out = jp;
  return jp.a_gamma / jp.b_gamma;
}

}  // namespace

GammaShapeRate solve_lambda(double lo, double hi, double coverage) {
  if (!(lo > 0.0 && hi > lo)) throw std::invalid_argument("solve_lambda: need 0 < lo < hi");
  if (!(coverage > 0.0 && coverage < 1.0))
    throw std::invalid_argument("solve_lambda: coverage in (0,1)");
  const double plo = (1.0 - coverage) / 2.0, phi = (1.0 + coverage) / 2.0;
  // moment-flavored start: log-normal matching of the interval
  double la = std::log(1.0), lb = std::log(1.0 / std::sqrt(lo * hi));
  double r1 = 0.0, r2 = 0.0;
  for (int it = 0; it < 300; ++it) {
    const double a = std::exp(la), b = std::exp(lb);
    r1 = std::log(gamma_quantile(a, b, plo) / lo);
    r2 = std::log(gamma_quantile(a, b, phi) / hi);
    if (std::abs(r1) < 1e-9 && std::abs(r2) < 1e-9)
      return {a, b};
    const double h = 1e-6;
    const double r1a = std::log(gamma_quantile(std::exp(la + h), b, plo) / lo);
    const double r2a = std::log(gamma_quantile(std::exp(la + h), b, phi) / hi);
    const double r1b = std::log(gamma_quantile(a, std::exp(lb + h), plo) / lo);
    const double r2b = std::log(gamma_quantile(a, std::exp(lb + h), phi) / hi);
    const double j11 = (r1a - r1) / h, j12 = (r1b - r1) / h;
    const double j21 = (r2a - r2) / h, j22 = (r2b - r2) / h;
    const double det = j11 * j22 - j12 * j21;
    if (std::abs(det) < 1e-16) break;
    double da = (r1 * j22 - r2 * j12) / det;
    double db = (j11 * r2 - j21 * r1) / det;
    da = std::clamp(da, -0.7, 0.7);
    db = std::clamp(db, -0.7, 0.7);
    la -= da;
    lb -= db;
    if (std::exp(la) < 1e-3 || std::exp(la) > 1e3) break;
  }
  std::ostringstream msg;
  msg << "solve_lambda: no solution with shape in (1e-3,1e3); residuals " << r1 << ", " << r2;
  throw std::runtime_error(msg.str());
}

HyperSolve solve_hyper(const ElicitationTargets& t, LevyKind kind, double alpha,
                       double omega_volume, double kernel_l2) {
  if (!(kernel_l2 > 0.0)) throw std::invalid_argument("solve_hyper: kernel_l2 must be > 0");
  if (!(t.trunc_budget > 0.0)) throw std::invalid_argument("solve_hyper: budget must be > 0");
  const double tau_j = (1.0 - t.j_coverage) / 2.0;
  const double tau_b = (1.0 - t.beta_coverage) / 2.0;
  const double rho2 = t.trunc_budget * t.trunc_budget;
  const double m_hi = std::max(std::abs(t.beta_lo), std::abs(t.beta_hi));

  HyperSolve out;
  out.hyper.omega_volume = omega_volume;
  const GammaShapeRate lam = solve_lambda(t.lambda_lo, t.lambda_hi, t.lambda_coverage);
  out.hyper.a_lambda = lam.shape;
  out.hyper.b_lambda = lam.rate;

  if (kind == LevyKind::SaS) {
    // The alpha = 1 family is scale-free: epsilon, the gamma rate and the
    // eta-mixing rate can be rescaled jointly without changing any marginal,
    // so the mixing law is pinned at the conventional Ga(1/2, 1) and epsilon
    // absorbs the budget (equality). Exact width-matching of the coefficient
    // interval jointly with the budget is diagnosed first: with a point-mass
    // mixing law at the tail-matching scale the budget left side is already
    // minimal, so a ratio above one means the two goals cannot be reconciled.
    const double a_eta = 0.5, b_eta = 1.0;
    const double eps_ref = 0.01;
    const double eg_ref = mean_gamma_at(kind, alpha, omega_volume, eps_ref, t, tau_j);
    const double xbar_ref = (m_hi / eps_ref) * std::pow(tau_b, 1.0 / alpha);
    const double i_ratio =
        eg_ref * xbar_ref * xbar_ref * trunc_factor_unit(kind, alpha, eps_ref) / rho2;
    out.residuals[4] = i_ratio - 1.0;
    if (i_ratio > 1.0) {
      out.feasible = false;
      std::ostringstream msg;
      msg << "coefficient interval vs truncation budget (exact-match lower bound exceeds "
             "budget by factor "
          << i_ratio << "); relax beta coverage or widen the budget";
      out.binding = msg.str();
    }
    // epsilon from the budget equality with the conventional mixing law
    const double ex2 = a_eta * (a_eta + 1.0) / (b_eta * b_eta);
    double lo = std::log(1e-6), hi = std::log(0.8);
    auto budget_res = [&](double leps) {
      const double eps = std::exp(leps);
      const double eg = mean_gamma_at(kind, alpha, omega_volume, eps, t, tau_j);
      return std::log(eg * ex2 * trunc_factor_unit(kind, alpha, eps) / rho2);
    };
    double flo = budget_res(lo), fhi = budget_res(hi);
    if (flo * fhi > 0.0) {
      out.feasible = false;
      out.binding = out.binding.empty() ? "truncation budget unattainable for any epsilon"
                                        : out.binding;
      out.hyper.epsilon = eps_ref;
    } else {
      for (int it = 0; it < 200; ++it) {
        const double mid = 0.5 * (lo + hi);
        const double fm = budget_res(mid);
        (fm * flo <= 0.0 ? hi : lo) = mid;
        (fm * flo <= 0.0 ? fhi : flo) = fm;
        if (hi - lo < 1e-12) break;
      }
      out.hyper.epsilon = std::exp(0.5 * (lo + hi));
    }
    JPair jp;
    mean_gamma_at(kind, alpha, omega_volume, out.hyper.epsilon, t, tau_j, &jp);
    out.hyper.a_gamma = jp.a_gamma;
    out.hyper.b_gamma = jp.b_gamma;
    out.hyper.a_eta = a_eta;
    out.hyper.b_eta = b_eta;
    const double c_eps =
        nu_plus_per_gamma(LevyFamily(kind, 1.0, 1.0, out.hyper.epsilon, omega_volume, alpha));
    out.residuals[0] = j_marginal_cdf(t.j_lo, jp.a_gamma, jp.b_gamma, c_eps) / tau_j - 1.0;
    out.residuals[1] =
        (1.0 - j_marginal_cdf(t.j_hi, jp.a_gamma, jp.b_gamma, c_eps)) / tau_j - 1.0;
    const double tail =
        beta_marginal_tail(kind, alpha, a_eta, b_eta, out.hyper.epsilon, m_hi);
    out.residuals[2] = tail / tau_b - 1.0;  // one-sided: negative slack acceptable
    out.residuals[3] =
        (jp.a_gamma / jp.b_gamma) * ex2 * trunc_factor_unit(kind, alpha, out.hyper.epsilon) /
            rho2 -
        1.0;
    if (tail > tau_b * (1.0 + 1e-6)) {
      out.feasible = false;
      out.binding = "coefficient interval narrower than achievable at the budget-driven "
                    "truncation level";
    }
    return out;
  }

  // Gamma / SymGamma. The feasibility boundary in epsilon comes from the
  // degenerate-mixing pin: with eta^{-1} concentrated at xbar solving the
  // plug-in tail equation, the budget equality has a unique epsilon; finite
  // dispersion solutions exist only below it. epsilon is set 5% inside.
  auto xbar_at = [&](double eps) {
    const double target = tau_b * exp_integral_e1(eps);
    return m_hi / exp_integral_e1_inv(target);
  };
  auto boundary_res = [&](double leps) {
    const double eps = std::exp(leps);
    const double eg = mean_gamma_at(kind, alpha, omega_volume, eps, t, tau_j);
    const double xb = xbar_at(eps);
    return std::log(eg * xb * xb * trunc_factor_unit(kind, alpha, eps) / rho2);
  };
  double lo = std::log(1e-6), hi = std::log(0.8);
  double flo = boundary_res(lo), fhi = boundary_res(hi);
  if (flo * fhi > 0.0) {
    out.feasible = false;
    out.binding = "coefficient interval vs truncation budget: no epsilon attains both";
    out.hyper.epsilon = 0.01;
  } else {
    for (int it = 0; it < 200; ++it) {
      const double mid = 0.5 * (lo + hi);
      const double fm = boundary_res(mid);
      (fm * flo <= 0.0 ? hi : lo) = mid;
      (fm * flo <= 0.0 ? fhi : flo) = fm;
      if (hi - lo < 1e-12) break;
    }
    out.hyper.epsilon = 0.95 * std::exp(0.5 * (lo + hi));
  }
  const double eps = out.hyper.epsilon;
  JPair jp;
  mean_gamma_at(kind, alpha, omega_volume, eps, t, tau_j, &jp);
  out.hyper.a_gamma = jp.a_gamma;
  out.hyper.b_gamma = jp.b_gamma;

  // (a_eta, b_eta): budget equality fixes E[X^2]; the marginal tail equation
  // then determines the dispersion by a bracketed search in the shape.
  const double ex2 = rho2 / ((jp.a_gamma / jp.b_gamma) * trunc_factor_unit(kind, alpha, eps));
  auto tail_res = [&](double lae) {
    const double ae = std::exp(lae);
    const double be = std::sqrt(ae * (ae + 1.0) / ex2);
    return beta_marginal_tail(kind, alpha, ae, be, eps, m_hi) - tau_b;
  };
  double la_lo = std::log(1.02), la_hi = std::log(5e4);
  double g_lo = tail_res(la_lo), g_hi = tail_res(la_hi);
  if (g_lo * g_hi > 0.0) {
    out.feasible = false;
    out.binding = "coefficient tail unattainable at the budget-implied scale";
    out.hyper.a_eta = 2.0;
    out.hyper.b_eta = std::sqrt(2.0 * 3.0 / ex2);
  } else {
    for (int it = 0; it < 200; ++it) {
      const double mid = 0.5 * (la_lo + la_hi);
      const double gm = tail_res(mid);
      (gm * g_lo <= 0.0 ? la_hi : la_lo) = mid;
      (gm * g_lo <= 0.0 ? g_hi : g_lo) = gm;
      if (la_hi - la_lo < 1e-12) break;
    }
    out.hyper.a_eta = std::exp(0.5 * (la_lo + la_hi));
    out.hyper.b_eta = std::sqrt(out.hyper.a_eta * (out.hyper.a_eta + 1.0) / ex2);
  }

  // For the positive-support family the lower quantile is a genuine second
  // equation; refine (a_eta, b_eta) on the pair by damped Newton.
  if (kind == LevyKind::Gamma && t.beta_lo > 0.0) {
    double lae = std::log(out.hyper.a_eta), lbe = std::log(out.hyper.b_eta);
    auto pair_res = [&](double ae, double be, double& r1, double& r2) {
      const double upper = beta_marginal_tail(kind, alpha, ae, be, eps, t.beta_hi);
      const double lower = 1.0 - beta_marginal_tail(kind, alpha, ae, be, eps, t.beta_lo);
      r1 = std::log(std::max(upper, 1e-300) / tau_b);
      r2 = std::log(std::max(lower, 1e-300) / tau_b);
    };
    for (int it = 0; it < 100; ++it) {
      const double ae = std::exp(lae), be = std::exp(lbe);
      double r1, r2;
      pair_res(ae, be, r1, r2);
      if (std::abs(r1) < 1e-9 && std::abs(r2) < 1e-9) break;
      const double h = 1e-6;
      double r1a, r2a, r1b, r2b;
      pair_res(std::exp(lae + h), be, r1a, r2a);
      pair_res(ae, std::exp(lbe + h), r1b, r2b);
      const double j11 = (r1a - r1) / h, j12 = (r1b - r1) / h;
      const double j21 = (r2a - r2) / h, j22 = (r2b - r2) / h;
      const double det = j11 * j22 - j12 * j21;
      if (std::abs(det) < 1e-14) break;
      double da = (r1 * j22 - r2 * j12) / det;
      double db = (j11 * r2 - j21 * r1) / det;
      da = std::clamp(da, -0.5, 0.5);
      db = std::clamp(db, -0.5, 0.5);
      lae -= da;
      lbe -= db;
    }
    out.hyper.a_eta = std::exp(lae);
    out.hyper.b_eta = std::exp(lbe);
  }

  // residual report
  const double c_eps =
      nu_plus_per_gamma(LevyFamily(kind, 1.0, 1.0, eps, omega_volume, alpha));
  out.residuals[0] =
      j_marginal_cdf(t.j_lo, out.hyper.a_gamma, out.hyper.b_gamma, c_eps) / tau_j - 1.0;
  out.residuals[1] =
      (1.0 - j_marginal_cdf(t.j_hi, out.hyper.a_gamma, out.hyper.b_gamma, c_eps)) / tau_j -
      1.0;
  out.residuals[2] =
      beta_marginal_tail(kind, alpha, out.hyper.a_eta, out.hyper.b_eta, eps, m_hi) / tau_b -
      1.0;
  const double ex2_got =
      out.hyper.a_eta * (out.hyper.a_eta + 1.0) / (out.hyper.b_eta * out.hyper.b_eta);
  out.residuals[3] = (out.hyper.a_gamma / out.hyper.b_gamma) * ex2_got *
                         trunc_factor_unit(kind, alpha, eps) / rho2 -
                     1.0;
  if (kind == LevyKind::Gamma && t.beta_lo > 0.0) {
    out.residuals[4] =
        (1.0 - beta_marginal_tail(kind, alpha, out.hyper.a_eta, out.hyper.b_eta, eps,
                                  t.beta_lo)) /
            tau_b -
        1.0;
  } else {
    // plug-in tail at the mean mixing scale, reported for diagnosis
    const double xbar = out.hyper.a_eta / out.hyper.b_eta;
    out.residuals[4] =
        exp_integral_e1(m_hi / xbar) / exp_integral_e1(eps) / tau_b - 1.0;
  }
  return out;
}

}  // namespace lark
