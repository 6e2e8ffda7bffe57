#include "lark/norms.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace lark {

GridFunction forward_difference(const GridFunction& f, int m, double h) {
  if (m < 0) throw std::domain_error("forward_difference: m must be >= 0");
  if (m == 0) return f;
  const double kf = h / f.h0;
  const long k = std::lround(kf);
  if (k < 1 || std::abs(kf - k) > 1e-9 * std::max(1.0, kf))
    throw std::domain_error("forward_difference: h must be a positive multiple of h0");
  const long n_out = f.n() - m * k;
  if (n_out < 1) throw std::domain_error("forward_difference: grid too short for m*h shift");
  // binomial weights (-1)^{m-j} C(m,j)
  std::vector<double> w(m + 1);
  w[0] = (m % 2 == 0) ? 1.0 : -1.0;
  for (int j = 1; j <= m; ++j) w[j] = -w[j - 1] * (m - j + 1) / j;
  GridFunction out;
  out.x0 = f.x0;
  out.h0 = f.h0;
  out.v.resize(n_out);
  for (long i = 0; i < n_out; ++i) {
    double acc = 0.0;
    for (int j = 0; j <= m; ++j) acc += w[j] * f.v[i + j * k];
    out.v[i] = acc;
  }
  return out;
}

double lp_norm(const GridFunction& f, double p) {
  double acc = 0.0;
  for (double x : f.v) acc += std::pow(std::abs(x), p);
  return std::pow(f.h0 * acc, 1.0 / p);
}

namespace {

double besov_quadrature(const GridFunction& f, double s, double p, double q, int m,
                        int nh) {
  const long kmax = static_cast<long>(std::floor(1.0 / f.h0));
  if (kmax < 1) throw std::domain_error("besov_seminorm: grid spacing exceeds 1");
  // log-spaced integer shifts in [1, kmax], deduplicated
  std::vector<long> ks;
  for (int i = 0; i < nh; ++i) {
    const double lk = (nh == 1) ? 0.0 : i * std::log(static_cast<double>(kmax)) / (nh - 1);
    const long k = std::max<long>(1, std::lround(std::exp(lk)));
    if (ks.empty() || k != ks.back()) ks.push_back(k);
  }
  // trapezoid in log h of h^{-sq} ||D^m_h f||_p^q
  std::vector<double> lh(ks.size()), g(ks.size());
  for (std::size_t i = 0; i < ks.size(); ++i) {
    const double h = ks[i] * f.h0;
    lh[i] = std::log(h);
    const GridFunction d = forward_difference(f, m, h);
    g[i] = std::pow(h, -s * q) * std::pow(lp_norm(d, p), q);
  }
  double integral = 0.0;
  for (std::size_t i = 0; i + 1 < ks.size(); ++i)
    integral += 0.5 * (g[i] + g[i + 1]) * (lh[i + 1] - lh[i]);
  return std::pow(2.0 * integral, 1.0 / q);
}

}  // namespace

BesovEstimate besov_seminorm(const GridFunction& f, double s, double p, double q, int m,
                             int nh) {
  if (!(s > 0.0) || p < 1.0 || q < 1.0)
    throw std::domain_error("besov_seminorm: requires s > 0 and p, q >= 1");
  if (m < 0) m = 1 + static_cast<int>(std::floor(s));
  if (m <= s) throw std::domain_error("besov_seminorm: requires m > s");
  BesovEstimate est;
  est.value = besov_quadrature(f, s, p, q, m, nh);
  est.value_coarse = besov_quadrature(f, s, p, q, m, std::max(2, nh / 2));
  return est;
}

void fft_pow2(std::vector<std::complex<double>>& a, bool inverse) {
  const std::size_t n = a.size();
  if (n == 0 || (n & (n - 1)) != 0) throw std::domain_error("fft_pow2: size must be 2^k");
  for (std::size_t i = 1, j = 0; i < n; ++i) {
    std::size_t bit = n >> 1;
    for (; j & bit; bit >>= 1) j ^= bit;
    j ^= bit;
    if (i < j) std::swap(a[i], a[j]);
  }
  for (std::size_t len = 2; len <= n; len <<= 1) {
    const double ang = 2.0 * M_PI / len * (inverse ? 1.0 : -1.0);
    const std::complex<double> wl(std::cos(ang), std::sin(ang));
    for (std::size_t i = 0; i < n; i += len) {
      std::complex<double> w(1.0, 0.0);
      for (std::size_t j = 0; j < len / 2; ++j) {
        const auto u = a[i + j];
        const auto v = a[i + j + len / 2] * w;
        a[i + j] = u + v;
        a[i + j + len / 2] = u - v;
        w *= wl;
      }
    }
  }
  if (inverse)
    for (auto& x : a) x /= static_cast<double>(n);
}

double sobolev_norm(const GridFunction& f, double s) {
  if (s < 0.0) throw std::domain_error("sobolev_norm: requires s >= 0");
  std::size_t n = 1;
  while (n < f.v.size()) n <<= 1;
  std::vector<std::complex<double>> a(n, 0.0);
  for (int i = 0; i < f.n(); ++i) a[i] = f.v[i];
  fft_pow2(a, false);
  // fhat(xi_k) ~ h0 * F_k at xi_k = 2 pi k / (n h0), k in (-n/2, n/2];
  // norm^2 = (1/2pi) sum (1+xi^2)^s |fhat|^2 dxi, dxi = 2 pi / (n h0).
  double acc = 0.0;
  for (std::size_t k = 0; k < n; ++k) {
    const double kk = (k <= n / 2) ? static_cast<double>(k)
                                   : static_cast<double>(k) - static_cast<double>(n);
    const double xi = 2.0 * M_PI * kk / (static_cast<double>(n) * f.h0);
    acc += std::pow(1.0 + xi * xi, s) * std::norm(a[k]);
  }
  return std::sqrt(acc * f.h0 / static_cast<double>(n));
}

std::pair<double, double> scaling_identity_check(const std::function<double(double)>& g,
                                                 double lambda, double chi, int m,
                                                 double h, double p, double lo, double hi,
                                                 int n) {
  if (!(lambda > 0.0)) throw std::domain_error("scaling_identity_check: lambda > 0");
  const double h0 = (hi - lo) / (n - 1);
  if (h / h0 < 1.0 - 1e-9)
    throw std::domain_error("scaling_identity_check: h below grid resolution");
  // left: samples of g(lambda (x - chi)) on [lo, hi]
  GridFunction left;
  left.x0 = lo;
  left.h0 = h0;
  left.v.resize(n);
  for (int i = 0; i < n; ++i) left.v[i] = g(lambda * (lo + i * h0 - chi));
  const double lhs = lp_norm(forward_difference(left, m, h), p);
  // right: samples of g on the scaled window, spacing lambda*h0, shift lambda*h
  GridFunction right;
  right.x0 = lambda * (lo - chi);
  right.h0 = lambda * h0;
  right.v.resize(n);
  for (int i = 0; i < n; ++i) right.v[i] = g(right.x0 + i * right.h0);
  const double rhs =
      std::pow(lambda, -1.0 / p) * lp_norm(forward_difference(right, m, lambda * h), p);
  return {lhs, rhs};
}

}  // namespace lark
