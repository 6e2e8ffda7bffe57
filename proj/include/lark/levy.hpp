#pragma once

#include <cmath>

#include "lark/rng.hpp"

// Truncated Levy-measure families. The coefficient measure nu_beta is one of
//
//   Gamma     : gamma * b^{-1} e^{-b eta}           on b > 0
//   SymGamma  : gamma * |b|^{-1} e^{-|b| eta}       on b != 0
//   SaS       : gamma eta^{-alpha} c_a alpha |b|^{-alpha-1},  0 < alpha < 2
//
// with c_a = Gamma(alpha) sin(pi alpha / 2) / pi, and every family truncated
// on the product scale: support restricted to |b * eta| > epsilon.

namespace lark {

enum class LevyKind { Gamma, SymGamma, SaS };

struct LevyFamily {
  LevyKind kind = LevyKind::SymGamma;
  double gamma = 1.0;         // frequency rate
  double eta = 1.0;           // magnitude rate
  double alpha = 1.0;         // SaS index, in (0,2); ignored otherwise
  double epsilon = 0.01;      // truncation level (product scale)
  double omega_volume = 10.0; // |Omega|

  LevyFamily() = default;
  LevyFamily(LevyKind k, double g, double e, double eps, double omv, double a = 1.0);
};

// Stable tail constant c_a = Gamma(alpha) sin(pi alpha / 2) / pi.
double sas_tail_constant(double alpha);

// Total truncated mass nu+ = nu({|b eta| > eps} x Omega); the Poisson mean of
// the number of support points.
double nu_plus(const LevyFamily& f);

// nu+ divided by gamma; depends only on (kind, alpha, epsilon, |Omega|).
double nu_plus_per_gamma(const LevyFamily& f);

// True when beta lies in the truncated support.
bool in_support(const LevyFamily& f, double beta);

// One draw from the normalized truncated coefficient law pi_beta.
double sample_coefficient(const LevyFamily& f, Rng& rng);

// log pi_beta(beta); -inf outside the support. Integrates to 1.
double coefficient_log_density(const LevyFamily& f, double beta);

// log of the truncated Levy density nu_eps(beta, omega) / (|Omega| pi_omega):
// i.e. the beta-part gamma-scaled, as it enters the joint posterior.
double levy_log_intensity_beta(const LevyFamily& f, double beta);

// C(eps) with E|L[phi] - L_eps[phi]|^2 = C(eps) * ||phi||_2^2.
double truncation_error_factor(const LevyFamily& f);

// Numerical check of the local L2 condition: |Omega| * int_{|b|<=1} b^2 nu_beta(db),
// by quadrature on the untruncated measure. Finite for all three families.
double local_l2_mass(const LevyFamily& f);

}  // namespace lark
