#include <doctest.h>

#include <cmath>

#include "lark/dict.hpp"

using namespace lark;

namespace {
KernelSpec make_spec(KernelKind k, LambdaConvention c = LambdaConvention::Linear) {
  KernelSpec s;
  s.kind = k;
  s.convention = c;
  s.xlo = 0.0;
  s.xhi = 10.0;
  return s;
}
}  // namespace

TEST_CASE("evaluation at the center") {
  OmegaPoint om{3.0, 2.0};
  CHECK(eval(make_spec(KernelKind::Gaussian), 3.0, om) == 1.0);
  CHECK(eval(make_spec(KernelKind::Laplace), 3.0, om) == 1.0);
  CHECK(eval(make_spec(KernelKind::PowerExp), 3.0, om) == 1.0);
  // one-sided: limit from the right is 1, at/left of the center it is 0
  CHECK(eval(make_spec(KernelKind::OneSidedExp), 3.0 + 1e-12, om) ==
        doctest::Approx(1.0).epsilon(1e-9));
  CHECK(eval(make_spec(KernelKind::OneSidedExp), 3.0, om) == 0.0);
  CHECK(eval(make_spec(KernelKind::Haar), 3.0, om) == 0.0);
}

TEST_CASE("closed-form spot values") {
  OmegaPoint om{0.0, 2.0};
  CHECK(eval(make_spec(KernelKind::Laplace), 0.5, om) ==
        doctest::Approx(std::exp(-1.0)).epsilon(1e-15));
  CHECK(eval(make_spec(KernelKind::Haar), 0.25, om) == 1.0);   // u = 0.5
  CHECK(eval(make_spec(KernelKind::Haar), 0.75, om) == 0.0);   // u = 1.5
  CHECK(eval(make_spec(KernelKind::Haar), 0.5, om) == 1.0);    // u = 1 inclusive
  const auto gsq = make_spec(KernelKind::Gaussian, LambdaConvention::Squared);
  CHECK(eval(gsq, 1.0, om) == doctest::Approx(std::exp(-0.5 * 4.0)).epsilon(1e-15));
}

TEST_CASE("hard support radius") {
  auto s = make_spec(KernelKind::Gaussian, LambdaConvention::Squared);
  s.support_radius = 2.0;
  OmegaPoint om{5.0, 0.3};
  CHECK(eval(s, 6.9, om) > 0.0);
  CHECK(eval(s, 7.1, om) == 0.0);
}

TEST_CASE("bounds and translation equivariance") {
  Rng rng(3);
  for (auto kind : {KernelKind::Gaussian, KernelKind::Laplace, KernelKind::OneSidedExp,
                    KernelKind::Haar, KernelKind::PowerExp}) {
    auto s = make_spec(kind);
    for (int i = 0; i < 100000; ++i) {
      const double x = rng.uniform(-5.0, 15.0);
      OmegaPoint om{rng.uniform(0.0, 10.0), rng.gamma(1.0, 0.5)};
      const double v = eval(s, x, om, 1.7);
      CHECK(v >= 0.0);
      CHECK(v <= 1.0);
      const double d = rng.normal();
      OmegaPoint om2{om.chi + d, om.lambda};
      CHECK(eval(s, x + d, om2, 1.7) ==
            doctest::Approx(eval(s, x, om, 1.7)).epsilon(1e-12));
    }
  }
}

TEST_CASE("monotone decay away from the center") {
  for (auto kind : {KernelKind::Gaussian, KernelKind::Laplace, KernelKind::PowerExp}) {
    auto s = make_spec(kind);
    OmegaPoint om{5.0, 1.3};
    double prev = 1.0;
    for (int i = 1; i <= 50; ++i) {
      const double v = eval(s, 5.0 + 0.1 * i, om, 1.5);
      CHECK(v <= prev);
      prev = v;
    }
  }
}

TEST_CASE("power-exponential limiting cases") {
  auto pe = make_spec(KernelKind::PowerExp);
  auto la = make_spec(KernelKind::Laplace);
  auto gsq = make_spec(KernelKind::Gaussian, LambdaConvention::Squared);
  Rng rng(8);
  for (int i = 0; i < 1000; ++i) {
    const double x = rng.uniform(0.0, 10.0);
    OmegaPoint om{rng.uniform(0.0, 10.0), rng.gamma(2.0, 1.0)};
    CHECK(eval(pe, x, om, 1.0) == doctest::Approx(eval(la, x, om)).epsilon(1e-15));
    OmegaPoint om_sq{om.chi, om.lambda};
    // rho = 2 with exponent lambda corresponds to the squared convention with
    // inverse scale sqrt(2 lambda)
    om_sq.lambda = std::sqrt(2.0 * om.lambda);
    CHECK(eval(pe, x, om, 2.0) == doctest::Approx(eval(gsq, x, om_sq)).epsilon(1e-13));
  }
}

TEST_CASE("design row") {
  auto s = make_spec(KernelKind::Gaussian);
  std::vector<SupportPoint> pts;
  CHECK(design_row(s, 4.0, pts) == 0.0);
  pts.push_back({3.0, {4.0, 1.0}});
  CHECK(design_row(s, 4.0, pts) == doctest::Approx(3.0).epsilon(1e-15));
  pts.push_back({-3.0, {4.0, 1.0}});
  CHECK(design_row(s, 7.7, pts) == 0.0);
}

TEST_CASE("l2 norm: analytic indicator and gaussian cases") {
  auto haar = make_spec(KernelKind::Haar);
  OmegaLaw law;
  law.fixed_lambda = 2.0;
  // interior x farther than 1/lambda from both bounds: |Omega| (1/lambda)/width
  const auto est = l2_norm_sq(haar, law, 10.0, 5.0);
  CHECK(est.value == doctest::Approx(0.5).epsilon(1e-12));

  auto gauss = make_spec(KernelKind::Gaussian);
  law.fixed_lambda = 3.0;
  // int exp(-lambda u^2) du = sqrt(pi/lambda); domain wide enough at x = 5
  const auto eg = l2_norm_sq(gauss, law, 10.0, 5.0);
  CHECK(eg.value == doctest::Approx(std::sqrt(M_PI / 3.0)).epsilon(1e-8));
}

TEST_CASE("l2 norm bounded by omega volume") {
  OmegaLaw law{1.117, 0.1965, -1.0};
  for (auto kind : {KernelKind::Gaussian, KernelKind::Laplace, KernelKind::Haar}) {
    auto s = make_spec(kind);
    const auto est = l2_norm_sq(s, law, 10.0, 5.0);
    CHECK(est.value > 0.0);
    CHECK(est.value <= 10.0);
  }
}

TEST_CASE("space-time kernel") {
  SpaceTimeOmega om;
  om.sigx = 1.0;
  om.sigy = 2.0;
  om.tau = 3.0;
  om.l11 = 2.0;
  om.l12 = 0.3;
  om.l22 = 1.5;
  om.lambda = 0.7;
  SpaceTimePoint at_center{1.0, 2.0, 3.0};
  CHECK(eval_spacetime(at_center, om) == 1.0);
  SpaceTimePoint p{1.5, 2.5, 4.0};
  const double q = 2.0 * 0.25 + 2.0 * 0.3 * 0.25 + 1.5 * 0.25;
  CHECK(eval_spacetime(p, om) == doctest::Approx(std::exp(-0.5 * q - 0.7)).epsilon(1e-14));
  // MC norm has positive value and finite standard error
  Rng rng(4);
  const auto est = l2_norm_sq_spacetime(
      at_center,
      [](Rng& r) {
        SpaceTimeOmega o;
        o.sigx = r.uniform(0.0, 2.0);
        o.sigy = r.uniform(0.0, 4.0);
        o.tau = r.uniform(0.0, 6.0);
        o.lambda = r.gamma(2.0, 2.0);
        return o;
      },
      48.0, 20000, rng);
  CHECK(est.value > 0.0);
  CHECK(est.std_error > 0.0);
  CHECK(est.std_error < est.value);
}
