// Micro-benchmark: serial reference vs OpenMP batch kernels.
#include <chrono>
#include <functional>
#include <cmath>
#include <cstdio>
#include <vector>

#include "lark/kernels.hpp"
#include "lark/rng.hpp"

using namespace lark;

namespace {

double time_of(const std::function<void()>& f, int reps) {
  const auto t0 = std::chrono::steady_clock::now();
  for (int r = 0; r < reps; ++r) f();
  const auto t1 = std::chrono::steady_clock::now();
  return std::chrono::duration<double>(t1 - t0).count() / reps;
}

}  // namespace

int main() {
  Rng rng(7);
  KernelSpec spec;
  spec.kind = KernelKind::Gaussian;
  spec.xlo = 0.0;
  spec.xhi = 10.0;
  std::printf("%10s %6s %12s %12s %8s %8s\n", "n", "J", "serial(ms)", "omp(ms)", "speedup",
              "maxdiff");
  for (int n : {1024, 16384, 262144}) {
    for (int j : {16, 64, 256}) {
      std::vector<double> xs(n);
      for (int i = 0; i < n; ++i) xs[i] = rng.uniform(0.0, 10.0);
      std::vector<SupportPoint> pts(j);
      for (auto& p : pts) {
        p.beta = rng.normal();
        p.omega.chi = rng.uniform(0.0, 10.0);
        p.omega.lambda = rng.gamma(1.117, 0.1965);
      }
      std::vector<double> a(n), b(n);
      const int reps = n <= 16384 ? 50 : 5;
      const double ts =
          time_of([&] { accumulate_curve_serial(spec, 2.0, pts, xs, a); }, reps);
      const double tp = time_of([&] { accumulate_curve_omp(spec, 2.0, pts, xs, b); }, reps);
      double md = 0.0;
      for (int i = 0; i < n; ++i) md = std::max(md, std::abs(a[i] - b[i]));
      std::printf("%10d %6d %12.3f %12.3f %8.2f %8.1e\n", n, j, ts * 1e3, tp * 1e3, ts / tp,
                  md);
    }
  }
  return 0;
}
