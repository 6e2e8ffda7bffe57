#include <doctest.h>

#include <cmath>
#include <vector>

#include "lark/levy.hpp"
#include "lark/special.hpp"

using namespace lark;

TEST_CASE("family invariants enforced at construction") {
  CHECK_THROWS(LevyFamily(LevyKind::Gamma, -1.0, 1.0, 0.01, 10.0));
  CHECK_THROWS(LevyFamily(LevyKind::Gamma, 1.0, 1.0, 0.0, 10.0));
  CHECK_THROWS(LevyFamily(LevyKind::SaS, 1.0, 1.0, 0.01, 10.0, 2.5));
}

TEST_CASE("nu_plus closed forms") {
  const LevyFamily sg(LevyKind::SymGamma, 1.0, 1.0, 0.0041, 10.0);
  CHECK(nu_plus(sg) == doctest::Approx(98.4729688339269).epsilon(1e-10));
  const LevyFamily ca(LevyKind::SaS, 1.0, 1.0, 0.0029, 10.0, 1.0);
  CHECK(nu_plus(ca) == doctest::Approx(2195.2405943709705).epsilon(1e-10));
  const LevyFamily g(LevyKind::Gamma, 2.0, 3.0, 0.0041, 10.0);
  CHECK(nu_plus(g) == doctest::Approx(2.0 * 10.0 * exp_integral_e1(0.0041)).epsilon(1e-12));
}

TEST_CASE("nu_plus strictly decreasing in epsilon and divergent") {
  for (auto kind : {LevyKind::Gamma, LevyKind::SymGamma, LevyKind::SaS}) {
    double eps = 1.0;
    double prev = nu_plus(LevyFamily(kind, 1.0, 2.0, eps, 10.0, 1.0));
    for (int k = 0; k < 8; ++k) {
      eps /= 2.0;
      const double cur = nu_plus(LevyFamily(kind, 1.0, 2.0, eps, 10.0, 1.0));
      CHECK(cur > prev);
      prev = cur;
    }
  }
  const double big = nu_plus(LevyFamily(LevyKind::SaS, 1.0, 1.0, 1e-8, 10.0, 1.0));
  const double one = nu_plus(LevyFamily(LevyKind::SaS, 1.0, 1.0, 1.0, 10.0, 1.0));
  CHECK(big > 1e6 * one);
}

TEST_CASE("coefficient sampler respects truncation and symmetry") {
  Rng rng(11);
  const LevyFamily sg(LevyKind::SymGamma, 1.0, 18.0, 0.0041, 10.0);
  const int n = 1000000;
  long pos = 0;
  double mean = 0.0;
  double min_prod = 1e300;
  for (int i = 0; i < n; ++i) {
    const double b = sample_coefficient(sg, rng);
    pos += b > 0;
    mean += b;
    min_prod = std::min(min_prod, std::abs(b) * sg.eta);
  }
  mean /= n;
  CHECK(min_prod > sg.epsilon);
  // sign frequency 0.5 within 3 binomial sigmas
  const double sd3 = 3.0 * std::sqrt(0.25 / n);
  CHECK(std::abs(double(pos) / n - 0.5) < sd3);
  // symmetric law: mean zero within 4 standard errors (sd of |b| is ~scale)
  CHECK(std::abs(mean) < 4.0 * 1.0 / std::sqrt(double(n)));

  const LevyFamily g(LevyKind::Gamma, 1.0, 2.0, 0.01, 10.0);
  double minp = 1e300;
  for (int i = 0; i < 100000; ++i)
    minp = std::min(minp, sample_coefficient(g, rng) * g.eta);
  CHECK(minp > g.epsilon);
}

TEST_CASE("stable coefficient tail is Pareto") {
  Rng rng(5);
  const LevyFamily ca(LevyKind::SaS, 1.0, 3.0, 0.0029, 10.0, 1.0);
  // P(|b| > 2 eps/eta) = 1/2 in closed form
  const double thr = 2.0 * ca.epsilon / ca.eta;
  const int n = 1000000;
  long cnt = 0;
  for (int i = 0; i < n; ++i) cnt += std::abs(sample_coefficient(ca, rng)) > thr;
  CHECK(double(cnt) / n == doctest::Approx(0.5).epsilon(0.005));
}

TEST_CASE("coefficient density: support flag, symmetry, closed form") {
  const LevyFamily g(LevyKind::Gamma, 1.0, 1.0, 1.0, 10.0);
  CHECK(coefficient_log_density(g, 0.5) == -std::numeric_limits<double>::infinity());
  CHECK(coefficient_log_density(g, -2.0) == -std::numeric_limits<double>::infinity());
  CHECK(coefficient_log_density(g, 2.0) ==
        doctest::Approx(-std::log(2.0) - 2.0 - std::log(0.21938393439552051)).epsilon(1e-12));
  const LevyFamily sg(LevyKind::SymGamma, 2.0, 3.0, 0.02, 10.0);
  CHECK(coefficient_log_density(sg, 0.7) == coefficient_log_density(sg, -0.7));
}

TEST_CASE("coefficient density integrates to one") {
  Rng rng(42);
  for (int trial = 0; trial < 20; ++trial) {
    const double gamma = 0.2 + 3.0 * rng.uniform();
    const double eta = 0.5 + 20.0 * rng.uniform();
    const double eps = 0.002 + 0.2 * rng.uniform();
    const double alpha = 0.3 + 1.5 * rng.uniform();
    const LevyKind kind = static_cast<LevyKind>(trial % 3);
    const LevyFamily f(kind, gamma, eta, eps, 10.0, alpha);
    // integrate the positive side over |b| in (eps/eta, inf) by substitution
    // |b| = (eps/eta) e^u, u in (0, U); double for the symmetric families
    const double w = eps / eta;
    const double U = (kind == LevyKind::SaS) ? 80.0 : std::log((50.0 / eta) / w);
    const int n = 20000;
    double acc = 0.0;
    for (int i = 0; i < n; ++i) {
      const double u = (i + 0.5) * U / n;
      const double b = w * std::exp(u);
      const double ld = coefficient_log_density(f, b);
      acc += std::exp(ld) * b * U / n;  // db = b du
    }
    if (kind != LevyKind::Gamma) acc *= 2.0;
    CHECK(acc == doctest::Approx(1.0).epsilon(2e-6));
  }
}

TEST_CASE("truncation error factor: closed forms and limits") {
  const LevyFamily g(LevyKind::Gamma, 1.0, 1.0, 0.0041, 10.0);
  CHECK(truncation_error_factor(g) == doctest::Approx(8.382061616796221e-06).epsilon(1e-9));
  for (auto kind : {LevyKind::Gamma, LevyKind::SymGamma, LevyKind::SaS}) {
    double prev = truncation_error_factor(LevyFamily(kind, 1.0, 2.0, 1e-2, 10.0, 1.2));
    for (double eps : {1e-4, 1e-6, 1e-8}) {
      const double cur = truncation_error_factor(LevyFamily(kind, 1.0, 2.0, eps, 10.0, 1.2));
      CHECK(cur < prev);
      prev = cur;
    }
    CHECK(prev < 1e-7);
  }
  // Cauchy reduction 2 gamma eta^-2 eps / pi
  const LevyFamily ca(LevyKind::SaS, 2.0, 3.0, 0.01, 10.0, 1.0);
  CHECK(truncation_error_factor(ca) ==
        doctest::Approx(2.0 * 2.0 / 9.0 * 0.01 / M_PI).epsilon(1e-12));
}

// Monte Carlo oracle: simulate fields at eps' << eps; points with product
// magnitude in (eps', eps] carry the truncation-loss mass, so the mean of
// (sum phi(omega) beta)^2 over replicate fields matches C(eps) - C(eps')
// times ||phi||^2. phi == 1 on Omega keeps it scalar.
TEST_CASE("truncation error factor against Monte Carlo fields") {
  Rng rng(99);
  struct Case {
    LevyKind kind;
    double alpha;
  };
  for (const Case c : {Case{LevyKind::Gamma, 1.0}, Case{LevyKind::SymGamma, 1.0},
                       Case{LevyKind::SaS, 1.0}}) {
    const double eps_small = 0.01, eps_big = 0.35;
    const double gamma = 1.0, eta = 1.0, omv = 1.0;
    const LevyFamily fine(c.kind, gamma, eta, eps_small, omv, c.alpha);
    const LevyFamily coarse(c.kind, gamma, eta, eps_big, omv, c.alpha);
    const double expected =
        truncation_error_factor(coarse) - truncation_error_factor(fine);
    const int reps = 10000;
    double sum = 0.0, sum2 = 0.0;
    for (int r = 0; r < reps; ++r) {
      const long j = rng.poisson(nu_plus(fine));
      double gap = 0.0;
      for (long k = 0; k < j; ++k) {
        const double b = sample_coefficient(fine, rng);
        if (std::abs(b) * eta <= eps_big) gap += b;  // phi == 1
      }
      sum += gap * gap;
      sum2 += gap * gap * gap * gap;
    }
    const double mean = sum / reps;
    const double se = std::sqrt(std::max(0.0, sum2 / reps - mean * mean) / reps);
    CHECK(std::abs(mean - expected) < 3.0 * se);
  }
}

TEST_CASE("local L2 condition is finite") {
  for (auto kind : {LevyKind::Gamma, LevyKind::SymGamma, LevyKind::SaS}) {
    const LevyFamily f(kind, 1.5, 2.0, 0.01, 10.0, 1.3);
    const double v = local_l2_mass(f);
    CHECK(std::isfinite(v));
    CHECK(v > 0.0);
  }
}

TEST_CASE("chi-square goodness of fit for the gamma-tail sampler") {
  // inverse-CDF sampler vs analytic bin probabilities of t^{-1} e^{-t}/E1(eps)
  Rng rng(2024);
  const double eps = 0.05;
  const LevyFamily f(LevyKind::Gamma, 1.0, 1.0, eps, 10.0);
  const double e1 = exp_integral_e1(eps);
  const std::vector<double> edges{eps, 0.1, 0.2, 0.4, 0.8, 1.5, 3.0, 60.0};
  std::vector<double> probs;
  for (std::size_t i = 0; i + 1 < edges.size(); ++i)
    probs.push_back((exp_integral_e1(edges[i]) - exp_integral_e1(edges[i + 1])) / e1);
  const int n = 200000;
  std::vector<long> counts(probs.size(), 0);
  for (int i = 0; i < n; ++i) {
    const double t = sample_coefficient(f, rng) * f.eta;
    for (std::size_t k = 0; k + 1 < edges.size(); ++k)
      if (t > edges[k] && t <= edges[k + 1]) {
        ++counts[k];
        break;
      }
  }
  double chi2 = 0.0;
  for (std::size_t k = 0; k < probs.size(); ++k) {
    const double e = n * probs[k];
    chi2 += (counts[k] - e) * (counts[k] - e) / e;
  }
  // 6 dof, 0.001 quantile ~ 22.46
  CHECK(chi2 < 22.46);
}
