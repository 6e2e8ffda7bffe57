#include "lark/kernels.hpp"

#include <algorithm>
#include <cassert>
#include <vector>

namespace lark {

void accumulate_curve_serial(const KernelSpec& spec, double rho,
                             std::span<const SupportPoint> pts,
                             std::span<const double> xs, std::span<double> out) {
  assert(xs.size() == out.size());
  for (std::size_t i = 0; i < xs.size(); ++i) {
    double acc = 0.0;
    for (const auto& p : pts) acc += p.beta * eval(spec, xs[i], p.omega, rho);
    out[i] = acc;
  }
}

void accumulate_curve_omp(const KernelSpec& spec, double rho,
                          std::span<const SupportPoint> pts,
                          std::span<const double> xs, std::span<double> out) {
  assert(xs.size() == out.size());
  const long n = static_cast<long>(xs.size());
#pragma omp parallel for schedule(static)
  for (long i = 0; i < n; ++i) {
    double acc = 0.0;
    for (const auto& p : pts) acc += p.beta * eval(spec, xs[i], p.omega, rho);
    out[i] = acc;
  }
}

void accumulate_curve(const KernelSpec& spec, double rho,
                      std::span<const SupportPoint> pts,
                      std::span<const double> xs, std::span<double> out) {
#ifdef _OPENMP
  if (xs.size() >= 256) {
    accumulate_curve_omp(spec, rho, pts, xs, out);
    return;
  }
#endif
  accumulate_curve_serial(spec, rho, pts, xs, out);
}

void eval_column_serial(const KernelSpec& spec, double rho, const OmegaPoint& om,
                        std::span<const double> xs, std::span<double> col) {
  assert(xs.size() == col.size());
  for (std::size_t i = 0; i < xs.size(); ++i) col[i] = eval(spec, xs[i], om, rho);
}

namespace {

inline void quantile_pair(std::vector<double>& buf, double plo, double phi, double& lo,
                          double& hi) {
  const int n = static_cast<int>(buf.size());
  auto pick = [&](double p) {
    // nearest-rank with linear interpolation
    const double h = p * (n - 1);
    const int k = static_cast<int>(h);
    std::nth_element(buf.begin(), buf.begin() + k, buf.end());
    const double vk = buf[k];
    if (k + 1 >= n) return vk;
    const double vk1 = *std::min_element(buf.begin() + k + 1, buf.end());
    return vk + (h - k) * (vk1 - vk);
  };
  lo = pick(plo);
  hi = pick(phi);
}

}  // namespace

void column_quantiles_serial(std::span<const double> matrix, int n_draws, int n_grid,
                             double plo, double phi, std::span<double> qlo,
                             std::span<double> qhi) {
  std::vector<double> buf(n_draws);
  for (int i = 0; i < n_grid; ++i) {
    for (int d = 0; d < n_draws; ++d) buf[d] = matrix[static_cast<std::size_t>(d) * n_grid + i];
    quantile_pair(buf, plo, phi, qlo[i], qhi[i]);
  }
}

void column_quantiles_omp(std::span<const double> matrix, int n_draws, int n_grid,
                          double plo, double phi, std::span<double> qlo,
                          std::span<double> qhi) {
#pragma omp parallel
  {
    std::vector<double> buf(n_draws);
#pragma omp for schedule(static)
    for (int i = 0; i < n_grid; ++i) {
      for (int d = 0; d < n_draws; ++d)
        buf[d] = matrix[static_cast<std::size_t>(d) * n_grid + i];
      quantile_pair(buf, plo, phi, qlo[i], qhi[i]);
    }
  }
}

}  // namespace lark
