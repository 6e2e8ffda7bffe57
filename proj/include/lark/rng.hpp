#pragma once

#include <cmath>
#include <cstdint>
#include <random>
#include <stdexcept>

// Self-contained random source. All samplers are implemented here rather
// than via std:: distributions so that streams are reproducible independent
// of the standard library build.

namespace lark {

class Rng {
 public:
  explicit Rng(std::uint64_t seed = 1) : eng_(seed) {}

  // Uniform on (0,1), never exactly 0 or 1.
  double uniform() {
    const std::uint64_t r = eng_();
    return (static_cast<double>(r >> 11) + 0.5) * (1.0 / 9007199254740992.0);
  }

  double uniform(double a, double b) { return a + (b - a) * uniform(); }

  bool bernoulli(double p) { return uniform() < p; }

  double exponential(double rate = 1.0) { return -std::log(uniform()) / rate; }

  double normal(double mu = 0.0, double sd = 1.0) {
    if (have_spare_) {
      have_spare_ = false;
      return mu + sd * spare_;
    }
    // Marsaglia polar method
    double u, v, s;
    do {
      u = 2.0 * uniform() - 1.0;
      v = 2.0 * uniform() - 1.0;
      s = u * u + v * v;
    } while (s >= 1.0 || s == 0.0);
    const double m = std::sqrt(-2.0 * std::log(s) / s);
    spare_ = v * m;
    have_spare_ = true;
    return mu + sd * u * m;
  }

  // Gamma(shape, rate) via Marsaglia-Tsang, with the power boost for shape < 1.
  double gamma(double shape, double rate) {
    if (!(shape > 0.0) || !(rate > 0.0)) throw std::domain_error("Rng::gamma: bad parameters");
    if (shape < 1.0) {
      const double u = uniform();
      return gamma(shape + 1.0, rate) * std::pow(u, 1.0 / shape);
    }
    const double d = shape - 1.0 / 3.0;
    const double c = 1.0 / std::sqrt(9.0 * d);
    for (;;) {
      double x, v;
      do {
        x = normal();
        v = 1.0 + c * x;
      } while (v <= 0.0);
      v = v * v * v;
      const double u = uniform();
      if (u < 1.0 - 0.0331 * x * x * x * x) return d * v / rate;
      if (std::log(u) < 0.5 * x * x + d * (1.0 - v + std::log(v))) return d * v / rate;
    }
  }

  // Exact Poisson for arbitrary mean: inversion below 60, gamma split above.
  long poisson(double mean) {
    if (mean < 0.0) throw std::domain_error("Rng::poisson: negative mean");
    long count = 0;
    while (mean > 60.0) {
      const long m = static_cast<long>(std::floor(0.875 * mean));
      const double x = gamma(static_cast<double>(m), 1.0);
      if (x <= mean) {
        count += m;
        mean -= x;
      } else {
        return count + binomial(m - 1, mean / x);
      }
    }
    const double l = std::exp(-mean);
    double p = 1.0;
    long k = 0;
    do {
      ++k;
      p *= uniform();
    } while (p > l);
    return count + k - 1;
  }

  // Exact Binomial(n, p) via beta split for large n.
  long binomial(long n, double p) {
    if (n < 0 || p < 0.0 || p > 1.0) throw std::domain_error("Rng::binomial: bad parameters");
    long count = 0;
    while (n > 60) {
      const long i = (n + 1) / 2;
      const double ga = gamma(static_cast<double>(i), 1.0);
      const double gb = gamma(static_cast<double>(n + 1 - i), 1.0);
      const double x = ga / (ga + gb);
      if (x <= p) {
        count += i;
        n -= i;
        p = (p - x) / (1.0 - x);
      } else {
        n = i - 1;
        p = p / x;
      }
    }
    for (long k = 0; k < n; ++k)
      if (uniform() < p) ++count;
    return count;
  }

  std::uint64_t raw() { return eng_(); }

 private:
  std::mt19937_64 eng_;
  bool have_spare_ = false;
  double spare_ = 0.0;
};

}  // namespace lark
