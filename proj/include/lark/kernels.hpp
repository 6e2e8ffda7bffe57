#pragma once

#include <span>

#include "lark/dict.hpp"

// Batch evaluation kernels. Each routine exists in a serial reference form
// and an OpenMP form; outputs are element-wise identical (one writer per
// element, no cross-thread reductions), so the pair is testable for exact
// equality and the parallel form is safe for byte-reproducible pipelines.

namespace lark {

// out[i] = sum_j beta_j g(xs[i], omega_j)
void accumulate_curve_serial(const KernelSpec& spec, double rho,
                             std::span<const SupportPoint> pts,
                             std::span<const double> xs, std::span<double> out);
void accumulate_curve_omp(const KernelSpec& spec, double rho,
                          std::span<const SupportPoint> pts,
                          std::span<const double> xs, std::span<double> out);
// Dispatches to the OpenMP form when built with OpenMP and the grid is large.
void accumulate_curve(const KernelSpec& spec, double rho,
                      std::span<const SupportPoint> pts,
                      std::span<const double> xs, std::span<double> out);

// col[i] = g(xs[i], omega); the single-column workhorse of the sampler.
void eval_column_serial(const KernelSpec& spec, double rho, const OmegaPoint& om,
                        std::span<const double> xs, std::span<double> col);

// Row-wise quantiles of a draws-by-grid matrix (draws-major storage):
// for each grid index i, fills qlo/qhi with the requested empirical
// quantiles over draws. Parallel over grid columns.
void column_quantiles_serial(std::span<const double> matrix, int n_draws, int n_grid,
                             double plo, double phi, std::span<double> qlo,
                             std::span<double> qhi);
void column_quantiles_omp(std::span<const double> matrix, int n_draws, int n_grid,
                          double plo, double phi, std::span<double> qlo,
                          std::span<double> qhi);

}  // namespace lark
