#pragma once

#include <complex>
#include <functional>
#include <vector>

// Numerical Besov semi-norm and Sobolev norm estimators for functions
// sampled on uniform grids. All values are discretizations; the Besov
// estimator reports a companion value at halved h-resolution so callers can
// judge convergence.

namespace lark {

struct GridFunction {
  double x0 = 0.0;  // first sample location
  double h0 = 1.0;  // grid spacing (> 0)
  std::vector<double> v;

  int n() const { return static_cast<int>(v.size()); }
};

// m-th forward finite difference with shift h = k*h0 (k integral >= 1),
// restricted to the valid subgrid. m = 0 returns the input.
GridFunction forward_difference(const GridFunction& f, int m, double h);

// (h0 * sum |v|^p)^{1/p}
double lp_norm(const GridFunction& f, double p);

struct BesovEstimate {
  double value = 0.0;
  double value_coarse = 0.0;  // same quadrature at half the h-resolution
};

// | f |^s_{p,q} = (2 int_0^1 h^{-1-sq} ||D^m_h f||_p^q dh)^{1/q}, with the
// h-integral discretized on nh log-spaced grid-representable shifts in
// (h0, 1]. m defaults to 1 + floor(s).
BesovEstimate besov_seminorm(const GridFunction& f, double s, double p, double q,
                             int m = -1, int nh = 64);

// { (2 pi)^{-1} int (1+xi^2)^s |fhat(xi)|^2 dxi }^{1/2} via the DFT of the
// samples with Riemann normalization; exact Plancherel at s = 0.
double sobolev_norm(const GridFunction& f, double s);

// Both sides of ||D^m_h g(lambda(.-chi))||_p = |lambda|^{-1/p} ||D^m_{lambda h} g||_p,
// computed on matched grids of n points spanning [lo, hi] (left side) and the
// correspondingly scaled window (right side).
std::pair<double, double> scaling_identity_check(const std::function<double(double)>& g,
                                                 double lambda, double chi, int m,
                                                 double h, double p, double lo, double hi,
                                                 int n);

// Radix-2 in-place FFT (size must be a power of two); exposed for tests.
void fft_pow2(std::vector<std::complex<double>>& a, bool inverse);

}  // namespace lark
