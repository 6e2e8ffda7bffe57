#include <doctest.h>

#include <vector>

#include "lark/kernels.hpp"

using namespace lark;

TEST_CASE("omp and serial curve kernels agree bitwise") {
  Rng rng(17);
  KernelSpec spec;
  spec.kind = KernelKind::Laplace;
  spec.xlo = 0.0;
  spec.xhi = 10.0;
  for (int n : {1, 7, 1024, 4096}) {
    std::vector<double> xs(n);
    for (auto& x : xs) x = rng.uniform(0.0, 10.0);
    std::vector<SupportPoint> pts(33);
    for (auto& p : pts) {
      p.beta = rng.normal();
      p.omega.chi = rng.uniform(0.0, 10.0);
      p.omega.lambda = rng.gamma(1.0, 0.5);
    }
    std::vector<double> a(n), b(n), c(n);
    accumulate_curve_serial(spec, 2.0, pts, xs, a);
    accumulate_curve_omp(spec, 2.0, pts, xs, b);
    accumulate_curve(spec, 2.0, pts, xs, c);
    for (int i = 0; i < n; ++i) {
      CHECK(a[i] == b[i]);
      CHECK(a[i] == c[i]);
    }
  }
}

TEST_CASE("column quantiles match across variants") {
  Rng rng(23);
  const int nd = 500, ng = 64;
  std::vector<double> mat(nd * ng);
  for (auto& v : mat) v = rng.normal();
  std::vector<double> lo_s(ng), hi_s(ng), lo_p(ng), hi_p(ng);
  column_quantiles_serial(mat, nd, ng, 0.05, 0.95, lo_s, hi_s);
  column_quantiles_omp(mat, nd, ng, 0.05, 0.95, lo_p, hi_p);
  for (int i = 0; i < ng; ++i) {
    CHECK(lo_s[i] == lo_p[i]);
    CHECK(hi_s[i] == hi_p[i]);
    CHECK(lo_s[i] <= hi_s[i]);
  }
}
