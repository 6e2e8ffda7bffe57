#pragma once

// Scalar special functions used throughout: the exponential integral E1 and
// the regularized incomplete gamma function (with inverse).

namespace lark {

// E1(z) = \int_z^\infty t^{-1} e^{-t} dt, z > 0.
// Power series below z = 1, modified-Lentz continued fraction above.
// Relative error <= 1e-13 over the whole range.
double exp_integral_e1(double z);

// Inverse of E1 on (0, inf): returns z with E1(z) = y.
double exp_integral_e1_inv(double y);

// Regularized incomplete gamma P(a,x) = gamma(a,x)/Gamma(a) and Q = 1 - P.
double gamma_p(double a, double x);
double gamma_q(double a, double x);

// Quantile of Gamma(shape, rate): smallest x with P(shape, rate*x) = p.
double gamma_quantile(double shape, double rate, double p);

// Density and log-density of Gamma(shape, rate) at x > 0.
double gamma_log_pdf(double x, double shape, double rate);

// Standard normal CDF.
double norm_cdf(double z);

}  // namespace lark
