#include "lark/special.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>

namespace lark {

namespace {
constexpr double kEulerGamma = 0.57721566490153286060651209008240243;
}

double exp_integral_e1(double z) {
  if (!(z > 0.0)) throw std::domain_error("exp_integral_e1: requires z > 0");
  if (z < 1.0) {
    // E1(z) = -gamma - ln z + sum_{k>=1} (-1)^{k+1} z^k / (k * k!)
    double sum = 0.0;
    double term = 1.0;  // z^k / k!
    for (int k = 1; k <= 40; ++k) {
      term *= z / k;
      const double add = term / k;
      sum = (k % 2 == 1) ? sum + add : sum - add;
      if (add < 1e-18 * (std::abs(sum) + 1e-300)) break;
    }
    return -kEulerGamma - std::log(z) + sum;
  }
  // Continued fraction e^{-z} / (z + 1 - 1/(z + 3 - 4/(z + 5 - ...))),
  // evaluated with the modified Lentz algorithm.
  const double tiny = 1e-300;
  double b = z + 1.0;
  double c = 1.0 / tiny;
  double d = 1.0 / b;
  double h = d;
  for (int i = 1; i <= 200; ++i) {
    const double a = -static_cast<double>(i) * i;
    b += 2.0;
    d = a * d + b;
    if (std::abs(d) < tiny) d = tiny;
    c = b + a / c;
    if (std::abs(c) < tiny) c = tiny;
    d = 1.0 / d;
    const double delta = d * c;
    h *= delta;
    if (std::abs(delta - 1.0) < 1e-16) break;
  }
  return h * std::exp(-z);
}

double exp_integral_e1_inv(double y) {
  if (!(y > 0.0)) throw std::domain_error("exp_integral_e1_inv: requires y > 0");
  // Initial guess from the two asymptotic regimes.
  double z = (y > 2.0) ? std::exp(-y - kEulerGamma)     // small-z branch: E1 ~ -gamma - ln z
                       : -std::log(y);                  // large-z branch: E1 ~ e^{-z}/z
  if (z <= 0.0) z = 1e-3;
  // Newton on g(z) = E1(z) - y, g'(z) = -e^{-z}/z, with multiplicative steps
  // (the iterate stays positive and converges from any sane start).
  for (int it = 0; it < 100; ++it) {
    const double g = exp_integral_e1(z) - y;
    const double dg = -std::exp(-z) / z;
    double step = g / dg;
    // Damp huge steps in z-space to a factor of e.
    if (std::abs(step) > z) step = (step > 0 ? z : -z) * (1.0 - 1.0 / M_E);
    const double znew = z - step;
    if (std::abs(znew - z) <= 1e-15 * z) return znew;
    z = znew;
  }
  return z;
}

namespace {

// Series for P(a,x), x < a+1.
double gamma_p_series(double a, double x) {
  double ap = a;
  double sum = 1.0 / a;
  double del = sum;
  for (int n = 0; n < 500; ++n) {
    ap += 1.0;
    del *= x / ap;
    sum += del;
    if (std::abs(del) < std::abs(sum) * 1e-16) break;
  }
  return sum * std::exp(-x + a * std::log(x) - std::lgamma(a));
}

// Continued fraction for Q(a,x), x >= a+1 (modified Lentz).
double gamma_q_cf(double a, double x) {
  const double tiny = 1e-300;
  double b = x + 1.0 - a;
  double c = 1.0 / tiny;
  double d = 1.0 / b;
  double h = d;
  for (int i = 1; i <= 500; ++i) {
    const double an = -i * (i - a);
    b += 2.0;
    d = an * d + b;
    if (std::abs(d) < tiny) d = tiny;
    c = b + an / c;
    if (std::abs(c) < tiny) c = tiny;
    d = 1.0 / d;
    const double delta = d * c;
    h *= delta;
    if (std::abs(delta - 1.0) < 1e-16) break;
  }
  return h * std::exp(-x + a * std::log(x) - std::lgamma(a));
}

}  // namespace

double gamma_p(double a, double x) {
  if (!(a > 0.0) || x < 0.0) throw std::domain_error("gamma_p: bad arguments");
  if (x == 0.0) return 0.0;
  return (x < a + 1.0) ? gamma_p_series(a, x) : 1.0 - gamma_q_cf(a, x);
}

double gamma_q(double a, double x) {
  if (!(a > 0.0) || x < 0.0) throw std::domain_error("gamma_q: bad arguments");
  if (x == 0.0) return 1.0;
  return (x < a + 1.0) ? 1.0 - gamma_p_series(a, x) : gamma_q_cf(a, x);
}

double gamma_quantile(double shape, double rate, double p) {
  if (!(shape > 0.0) || !(rate > 0.0)) throw std::domain_error("gamma_quantile: bad parameters");
  if (!(p > 0.0 && p < 1.0)) throw std::domain_error("gamma_quantile: p must be in (0,1)");
  // Wilson-Hilferty start, then safeguarded Newton on P(shape, x).
  const double z = [&] {
    // inverse normal CDF via Acklam-style rational approximation (enough for a start)
    const double pp = (p < 0.5) ? p : 1.0 - p;
    const double t = std::sqrt(-2.0 * std::log(pp));
    double v = t - (2.30753 + 0.27061 * t) / (1.0 + 0.99229 * t + 0.04481 * t * t);
    return (p < 0.5) ? -v : v;
  }();
  const double wh = 1.0 - 1.0 / (9.0 * shape) + z / (3.0 * std::sqrt(shape));
  double x = shape * wh * wh * wh;
  if (x <= 0.0) x = std::exp((std::log(p) + std::lgamma(shape + 1.0)) / shape);
  double lo = 0.0, hi = std::numeric_limits<double>::infinity();
  for (int it = 0; it < 200; ++it) {
    const double f = gamma_p(shape, x) - p;
    if (f > 0.0) hi = x; else lo = x;
    const double pdf = std::exp(-x + (shape - 1.0) * std::log(x) - std::lgamma(shape));
    double xn = x - f / std::max(pdf, 1e-300);
    if (!(xn > lo && (xn < hi))) xn = std::isfinite(hi) ? 0.5 * (lo + hi) : 2.0 * x;
    if (std::abs(xn - x) <= 1e-14 * x) { x = xn; break; }
    x = xn;
  }
  return x / rate;
}

double gamma_log_pdf(double x, double shape, double rate) {
  if (!(x > 0.0)) return -std::numeric_limits<double>::infinity();
  return shape * std::log(rate) - std::lgamma(shape) + (shape - 1.0) * std::log(x) - rate * x;
}

double norm_cdf(double z) { return 0.5 * std::erfc(-z / std::sqrt(2.0)); }

}  // namespace lark
