#include <doctest.h>

#include <cmath>
#include <initializer_list>

#include "lark/special.hpp"

using namespace lark;

namespace {

// independent oracle: adaptive Simpson of t^-1 e^-t on [z, z+40]
double e1_quadrature(double z) {
  auto f = [](double t) { return std::exp(-t) / t; };
  double acc = 0.0;
  const int pieces = 400;
  // integrate on log-spaced panels out to z+60
  double a = z;
  for (int k = 0; k < pieces; ++k) {
    const double b = z + (60.0) * std::pow((k + 1.0) / pieces, 2.0);
    const int n = 64;
    const double h = (b - a) / n;
    double s = f(a) + f(b);
    for (int i = 1; i < n; ++i) s += f(a + i * h) * ((i % 2) ? 4.0 : 2.0);
    acc += s * h / 3.0;
    a = b;
  }
  return acc;
}

}  // namespace

TEST_CASE("E1 against quadrature oracle at z=1") {
  const double oracle = e1_quadrature(1.0);
  CHECK(exp_integral_e1(1.0) == doctest::Approx(oracle).epsilon(1e-10));
  CHECK(exp_integral_e1(1.0) == doctest::Approx(0.21938393439552051).epsilon(1e-12));
}

TEST_CASE("E1 series region") {
  // series value: -gamma - ln z + sum (-1)^{k+1} z^k/(k k!)
  CHECK(exp_integral_e1(0.0041) == doctest::Approx(4.9236484416963453).epsilon(1e-12));
  CHECK(exp_integral_e1(0.0029) == doctest::Approx(5.2687267759423841).epsilon(1e-12));
  CHECK(exp_integral_e1(1e-8) == doctest::Approx(17.843465089050834).epsilon(1e-12));
}

TEST_CASE("E1 continued-fraction region and asymptotics") {
  CHECK(exp_integral_e1(2.0) == doctest::Approx(4.8900510708061125e-02).epsilon(1e-12));
  CHECK(exp_integral_e1(10.0) == doctest::Approx(4.1569689296853246e-06).epsilon(1e-12));
  CHECK(exp_integral_e1(50.0) == doctest::Approx(3.7832640295504591e-24).epsilon(1e-12));
  // z E1(z) e^z -> 1
  for (double z : {100.0, 300.0, 600.0}) {
    const double v = exp_integral_e1(z) * z * std::exp(z);
    CHECK(v == doctest::Approx(1.0).epsilon(0.02));
  }
  // continuity across the series/CF split
  const double below = exp_integral_e1(0.9999);
  const double above = exp_integral_e1(1.0001);
  CHECK(below == doctest::Approx(0.21942072601873830).epsilon(1e-12));
  CHECK(above == doctest::Approx(0.21934715012989106).epsilon(1e-12));
}

TEST_CASE("E1 domain error") { CHECK_THROWS(exp_integral_e1(0.0)); CHECK_THROWS(exp_integral_e1(-1.0)); }

TEST_CASE("E1 inverse round-trips") {
  for (double z : {1e-6, 1e-3, 0.05, 0.5, 1.0, 3.0, 20.0}) {
    const double y = exp_integral_e1(z);
    CHECK(exp_integral_e1_inv(y) == doctest::Approx(z).epsilon(1e-10));
  }
}

TEST_CASE("gamma quantile matches CDF") {
  for (double a : {0.5, 1.117, 2.0, 13.01}) {
    for (double p : {0.025, 0.5, 0.975}) {
      const double x = gamma_quantile(a, 1.0, p);
      CHECK(gamma_p(a, x) == doctest::Approx(p).epsilon(1e-9));
    }
  }
  // frozen reference: Ga(2, rate 1) central 95% interval
  CHECK(gamma_quantile(2.0, 1.0, 0.025) == doctest::Approx(0.24220928).epsilon(1e-6));
  CHECK(gamma_quantile(2.0, 1.0, 0.975) == doctest::Approx(5.57164339).epsilon(1e-6));
}

TEST_CASE("normal cdf basics") {
  CHECK(norm_cdf(0.0) == doctest::Approx(0.5).epsilon(1e-14));
  CHECK(norm_cdf(1.959963984540054) == doctest::Approx(0.975).epsilon(1e-9));
}
