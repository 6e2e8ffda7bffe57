#include "lark/bench.hpp"

#include <chrono>
#include <cmath>
#include <fstream>
#include <limits>
#include <sstream>
#include <stdexcept>

namespace lark {

namespace {

// Standard eleven-knot configuration shared by the blocks and bumps signals.
constexpr double kT[11] = {0.10, 0.13, 0.15, 0.23, 0.25, 0.40, 0.44, 0.65, 0.76, 0.78, 0.81};
constexpr double kHBlocks[11] = {4.0, -5.0, 3.0, -4.0, 5.0, -4.2, 2.1, 4.3, -3.1, 2.1, -4.2};
constexpr double kHBumps[11] = {4.0, 5.0, 3.0, 4.0, 5.0, 4.2, 2.1, 4.3, 3.1, 5.1, 4.2};
constexpr double kWBumps[11] = {0.005, 0.005, 0.006, 0.01, 0.01, 0.03, 0.01, 0.01, 0.005, 0.008, 0.005};

double raw_signal(TestFunctionKind kind, double t) {
  switch (kind) {
    case TestFunctionKind::Blocks: {
      double v = 0.0;
      for (int j = 0; j < 11; ++j) v += kHBlocks[j] * (1.0 + ((t - kT[j]) > 0 ? 1.0 : (t - kT[j]) < 0 ? -1.0 : 0.0)) / 2.0;
      return v;
    }
    case TestFunctionKind::Bumps: {
      double v = 0.0;
      for (int j = 0; j < 11; ++j) {
        const double u = 1.0 + std::abs(t - kT[j]) / kWBumps[j];
        v += kHBumps[j] / (u * u * u * u);
      }
      return v;
    }
    case TestFunctionKind::Doppler:
      return std::sqrt(t * (1.0 - t)) * std::sin(2.0 * M_PI * 1.05 / (t + 0.05));
    case TestFunctionKind::Heavysine: {
      auto sgn = [](double z) { return z > 0 ? 1.0 : (z < 0 ? -1.0 : 0.0); };
      return 4.0 * std::sin(4.0 * M_PI * t) - sgn(t - 0.3) - sgn(0.72 - t);
    }
  }
  return 0.0;
}

// range calibration constants (reference grid of 200001 points on [0,1])
struct Affine {
  double scale, shift;
};
Affine affine_for(TestFunctionKind kind) {
  switch (kind) {
    case TestFunctionKind::Blocks:
      return {3.472222222222, 6.944444444444};
    case TestFunctionKind::Bumps:
      return {4.895328737271, -0.000169929812};
    case TestFunctionKind::Doppler:
      return {25.238207121257, 12.556601694882};
    case TestFunctionKind::Heavysine:
      return {2.500000000000, 15.000000000000};
  }
  return {1.0, 0.0};
}

}  // namespace

double test_function(TestFunctionKind kind, double x) {
  const Affine a = affine_for(kind);
  return a.scale * raw_signal(kind, x / 10.0) + a.shift;
}

const char* test_function_name(TestFunctionKind kind) {
  switch (kind) {
    case TestFunctionKind::Blocks:
      return "blocks";
    case TestFunctionKind::Bumps:
      return "bumps";
    case TestFunctionKind::Doppler:
      return "doppler";
    case TestFunctionKind::Heavysine:
      return "heavysine";
  }
  return "?";
}

BenchData gen_data(TestFunctionKind kind, int n, double rsnr, Rng& rng) {
  if (n < 2 || !(rsnr > 0.0)) throw std::invalid_argument("gen_data: need n >= 2, rsnr > 0");
  BenchData out;
  out.data.xs.resize(n);
  out.ftrue.resize(n);
  double mean = 0.0;
  for (int i = 0; i < n; ++i) {
    out.data.xs[i] = 10.0 * i / (n - 1.0);
    out.ftrue[i] = test_function(kind, out.data.xs[i]);
    mean += out.ftrue[i];
  }
  mean /= n;
  double var = 0.0;
  for (int i = 0; i < n; ++i) var += (out.ftrue[i] - mean) * (out.ftrue[i] - mean);
  var /= n;
  out.sigma = std::sqrt(var) / rsnr;
  out.data.ys.resize(n);
  for (int i = 0; i < n; ++i) out.data.ys[i] = out.ftrue[i] + out.sigma * rng.normal();
  return out;
}

double mse(std::span<const double> fhat, std::span<const double> ftrue) {
  if (fhat.size() != ftrue.size()) throw std::invalid_argument("mse: length mismatch");
  double acc = 0.0;
  for (std::size_t i = 0; i < fhat.size(); ++i) {
    const double d = fhat[i] - ftrue[i];
    acc += d * d;
  }
  return acc / static_cast<double>(fhat.size());
}

BenchReport run_benchmark(TestFunctionKind kind, LevyKind family, const KernelSpec& spec,
                          const Hyperparams& hyper, const McmcConfig& cfg, int replicates,
                          std::uint64_t master_seed) {
  if (replicates < 1) throw std::invalid_argument("run_benchmark: replicates >= 1");
  BenchReport rep;
  rep.replicates = replicates;
  rep.master_seed = master_seed;
  rep.label = test_function_name(kind);
  rep.mses.assign(replicates, 0.0);
  const auto t0 = std::chrono::steady_clock::now();
#pragma omp parallel for schedule(dynamic)
  for (int r = 0; r < replicates; ++r) {
    Rng rng(master_seed + static_cast<std::uint64_t>(r));
    const BenchData bd = gen_data(kind, 1024, 7.0, rng);
    McmcConfig c = cfg;
    c.seed = master_seed * 1000003ull + static_cast<std::uint64_t>(r) + 1;
    const FitResult fit = run(bd.data, hyper, family, spec, c);
    rep.mses[r] = mse(fit.mean_curve, bd.ftrue);
  }
  const auto t1 = std::chrono::steady_clock::now();
  rep.wall_seconds = std::chrono::duration<double>(t1 - t0).count();
  double m = 0.0;
  for (double v : rep.mses) m += v;
  rep.amse = m / replicates;
  if (replicates > 1) {
    double s2 = 0.0;
    for (double v : rep.mses) s2 += (v - rep.amse) * (v - rep.amse);
    rep.std_error = std::sqrt(s2 / (replicates - 1)) / std::sqrt(double(replicates));
  } else {
    rep.std_error = std::numeric_limits<double>::quiet_NaN();
  }
  return rep;
}

std::uint64_t fnv1a64(const void* data, std::size_t n) {
  const auto* p = static_cast<const unsigned char*>(data);
  std::uint64_t h = 0xcbf29ce484222325ull;
  for (std::size_t i = 0; i < n; ++i) {
    h ^= p[i];
    h *= 0x100000001b3ull;
  }
  return h;
}

Dataset motorcycle_dataset(const std::string& csv_path) {
  std::ifstream in(csv_path, std::ios::binary);
  if (!in) throw std::runtime_error("motorcycle_dataset: cannot open " + csv_path);
  std::stringstream buf;
  buf << in.rdbuf();
  const std::string bytes = buf.str();
  if (fnv1a64(bytes.data(), bytes.size()) != kMotorcycleChecksum)
    throw std::runtime_error("motorcycle_dataset: checksum mismatch, file corrupted");
  Dataset d;
  std::istringstream ss(bytes);
  std::string line;
  std::getline(ss, line);  // header
  int lineno = 1;
  while (std::getline(ss, line)) {
    ++lineno;
    if (line.empty()) continue;
    const auto comma = line.find(',');
    if (comma == std::string::npos)
      throw std::runtime_error("motorcycle_dataset: malformed line " + std::to_string(lineno));
    d.xs.push_back(std::stod(line.substr(0, comma)));
    d.ys.push_back(std::stod(line.substr(comma + 1)));
  }
  if (d.n() != kMotorcycleRows)
    throw std::runtime_error("motorcycle_dataset: expected 133 rows");
  return d;
}

}  // namespace lark
