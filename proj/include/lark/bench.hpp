#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "lark/mcmc.hpp"

// Standard piecewise test signals, noise calibration by root signal-to-noise
// ratio, and the replicated mean-squared-error harness.

namespace lark {

enum class TestFunctionKind { Blocks, Bumps, Doppler, Heavysine };

// Signals live on [0,10], affinely calibrated to range [0, 25]. The affine
// constants are frozen from a 200001-point reference grid and recorded here.
double test_function(TestFunctionKind kind, double x);
const char* test_function_name(TestFunctionKind kind);

struct BenchData {
  Dataset data;
  std::vector<double> ftrue;
  double sigma = 0.0;
};

// n equally spaced points on [0,10]; sigma = sd(f)/rsnr with the population
// standard deviation taken over the same grid.
BenchData gen_data(TestFunctionKind kind, int n, double rsnr, Rng& rng);

double mse(std::span<const double> fhat, std::span<const double> ftrue);

struct BenchReport {
  std::vector<double> mses;  // one per replicate
  double amse = 0.0;
  double std_error = 0.0;  // sample sd / sqrt(R); NaN when R == 1
  double wall_seconds = 0.0;
  int replicates = 0;
  std::uint64_t master_seed = 0;
  std::string label;
};

// Replicates run in parallel with seeds master_seed + r; the report is
// identical for any thread count.
BenchReport run_benchmark(TestFunctionKind kind, LevyKind family, const KernelSpec& spec,
                          const Hyperparams& hyper, const McmcConfig& cfg, int replicates,
                          std::uint64_t master_seed);

// Bundled crash-test data: 133 rows, unequally spaced with repeated
// abscissae. The loader verifies row count and the recorded checksum.
Dataset motorcycle_dataset(const std::string& csv_path);
inline constexpr std::uint64_t kMotorcycleChecksum = 0x8d98b3080bfc691cull;
inline constexpr int kMotorcycleRows = 133;

std::uint64_t fnv1a64(const void* data, std::size_t n);

}  // namespace lark
