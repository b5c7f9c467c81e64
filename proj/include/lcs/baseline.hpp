#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

#include "lcs/pattern.hpp"
#include "lcs/transform.hpp"

namespace lcs {

/// Variable-density random sampling parameters.
///  r: radius of the fully sampled central region, in units of the
///     normalized frequency radius (1 = distance to the farthest corner).
///  d: polynomial falloff degree outside that region.
struct VariableDensityParams {
  double r = 0.0;
  double d = 0.0;
  std::uint64_t seed = 0;
  std::size_t n = 0;
};

// Normalized frequency radius rho in [0, 1] of every (unshifted, row-major)
// index: per-axis signed frequency over half the axis length, Euclidean norm,
// divided by its maximum so rho = 1 at the farthest corner.
std::vector<double> frequency_radius(std::span<const std::size_t> dims);

// Sampling weights: 1 for rho <= r, (1 - rho)^d otherwise.
std::vector<double> density_map(std::span<const std::size_t> dims, double r, double d);

// All indices of the fully sampled disk (rho <= r, empty when r = 0) plus a
// weighted draw without replacement from the rest, using exponential keys
// log(u_i) / w_i (Efraimidis-Spirakis) with one uniform per index in index
// order. Zero-weight indices are only taken once positive weights run out.
SubsamplingPattern sample_variable_density(std::span<const std::size_t> dims,
                                           const VariableDensityParams& params);

// n distinct indices drawn uniformly (partial Fisher-Yates).
SubsamplingPattern sample_uniform(std::size_t p, std::size_t n, std::uint64_t seed,
                                  std::vector<std::size_t> dims = {});

struct GridPoint {
  double r = 0.0;
  double d = 0.0;
};

// Cartesian product, r in the outer loop.
std::vector<GridPoint> make_grid(std::span<const double> radii, std::span<const double> degrees);

struct TuningEntry {
  GridPoint point;
  std::uint64_t seed = 0;
  // False when the fully sampled disk alone exceeds the budget.
  bool feasible = false;
  double mean_psnr = 0.0;
  double mean_normalized_error = 0.0;
};

struct TuningResult {
  VariableDensityParams best;
  SubsamplingPattern pattern;
  std::vector<TuningEntry> log;
};

/// Picks the grid point whose pattern gives the highest mean PSNR when
/// decoding the training signals. Grid point k draws with seed
/// derive_seed(seed, k); ties go to the earliest grid point. Infeasible
/// points are logged and skipped; BudgetTooSmall if none is feasible.
TuningResult tune_variable_density(const TransformOperator& op, std::span<const Signal> training,
                                   std::size_t n, std::span<const GridPoint> grid,
                                   std::uint64_t seed);

// Per-signal oracle: the n largest |F x| entries, ties to the smaller index.
SubsamplingPattern best_n_pattern(const TransformOperator& op, std::span<const Complex> x,
                                  std::size_t n);

}  // namespace lcs
