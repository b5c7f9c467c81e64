#include "lcs/baseline.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <limits>
#include <numeric>
#include <string>

#include "lcs/error.hpp"
#include "lcs/metrics.hpp"
#include "lcs/random.hpp"

namespace lcs {

namespace {

std::size_t product(std::span<const std::size_t> dims) {
  return std::accumulate(dims.begin(), dims.end(), std::size_t{1}, std::multiplies<>());
}

void check_density_params(std::span<const std::size_t> dims, double r, double d) {
  if (dims.empty() || product(dims) == 0) {
    throw Error(ErrorCode::InvalidParams, "density map needs non-empty positive dims");
  }
  if (!(r >= 0.0 && r <= 1.0)) throw Error(ErrorCode::InvalidParams, "r must lie in [0, 1]");
  if (!(d >= 0.0) || !std::isfinite(d)) throw Error(ErrorCode::InvalidParams, "d must be >= 0");
}

// Indices sorted by descending key, ties to the smaller index; first `count`.
std::vector<std::size_t> top_by_key(std::vector<std::size_t> candidates,
                                    const std::vector<double>& key, std::size_t count) {
  std::partial_sort(candidates.begin(), candidates.begin() + static_cast<std::ptrdiff_t>(count),
                    candidates.end(), [&](std::size_t a, std::size_t b) {
                      return key[a] > key[b] || (key[a] == key[b] && a < b);
                    });
  candidates.resize(count);
  return candidates;
}

}  // namespace

std::vector<double> frequency_radius(std::span<const std::size_t> dims) {
  const std::size_t p = product(dims);
  std::vector<double> rho(p, 0.0);
  std::vector<std::size_t> coord(dims.size(), 0);
  for (std::size_t flat = 0; flat < p; ++flat) {
    double sq = 0.0;
    for (std::size_t a = 0; a < dims.size(); ++a) {
      const std::size_t len = dims[a];
      if (len < 2) continue;
      const auto k = static_cast<double>(coord[a]);
      const double freq = coord[a] >= (len + 1) / 2 ? k - static_cast<double>(len) : k;
      const double u = freq / (static_cast<double>(len) / 2.0);
      sq += u * u;
    }
    rho[flat] = std::sqrt(sq);
    for (std::size_t a = dims.size(); a-- > 0;) {
      if (++coord[a] < dims[a]) break;
      coord[a] = 0;
    }
  }
  const double peak = *std::max_element(rho.begin(), rho.end());
  if (peak > 0.0) {
    for (auto& v : rho) v /= peak;
  }
  return rho;
}

std::vector<double> density_map(std::span<const std::size_t> dims, double r, double d) {
  check_density_params(dims, r, d);
  std::vector<double> weights = frequency_radius(dims);
  for (auto& rho : weights) rho = rho <= r ? 1.0 : std::pow(1.0 - rho, d);
  return weights;
}

SubsamplingPattern sample_variable_density(std::span<const std::size_t> dims,
                                           const VariableDensityParams& params) {
  check_density_params(dims, params.r, params.d);
  const std::size_t p = product(dims);
  if (params.n > p) {
    throw Error(ErrorCode::InvalidBudget,
                "budget " + std::to_string(params.n) + " exceeds p = " + std::to_string(p));
  }
  std::vector<std::size_t> shape(dims.begin(), dims.end());
  if (params.n == p) return SubsamplingPattern::full(p, shape);

  const std::vector<double> rho = frequency_radius(dims);
  std::vector<std::size_t> disk;
  std::vector<std::size_t> rest;
  for (std::size_t i = 0; i < p; ++i) {
    if (params.r > 0.0 && rho[i] <= params.r) disk.push_back(i);
    else rest.push_back(i);
  }
  if (disk.size() > params.n) {
    throw Error(ErrorCode::BudgetTooSmall, "fully sampled region holds " +
                                               std::to_string(disk.size()) +
                                               " indices, budget is " + std::to_string(params.n));
  }

  Rng rng(params.seed);
  std::vector<double> key(p, -std::numeric_limits<double>::infinity());
  for (auto i : rest) {
    const double u = rng.uniform_open();
    const double w = std::pow(1.0 - rho[i], params.d);
    if (w > 0.0) key[i] = std::log(u) / w;
  }
  std::vector<std::size_t> picked = top_by_key(std::move(rest), key, params.n - disk.size());
  picked.insert(picked.end(), disk.begin(), disk.end());
  return {p, std::move(picked), std::move(shape)};
}

SubsamplingPattern sample_uniform(std::size_t p, std::size_t n, std::uint64_t seed,
                                  std::vector<std::size_t> dims) {
  if (n > p) {
    throw Error(ErrorCode::InvalidBudget,
                "budget " + std::to_string(n) + " exceeds p = " + std::to_string(p));
  }
  std::vector<std::size_t> pool(p);
  std::iota(pool.begin(), pool.end(), std::size_t{0});
  Rng rng(seed);
  for (std::size_t i = 0; i < n; ++i) {
    const std::size_t j = i + static_cast<std::size_t>(rng.below(p - i));
    std::swap(pool[i], pool[j]);
  }
  pool.resize(n);
  return {p, std::move(pool), std::move(dims)};
}

std::vector<GridPoint> make_grid(std::span<const double> radii, std::span<const double> degrees) {
  std::vector<GridPoint> grid;
  grid.reserve(radii.size() * degrees.size());
  for (double r : radii) {
    for (double d : degrees) grid.push_back({r, d});
  }
  return grid;
}

TuningResult tune_variable_density(const TransformOperator& op, std::span<const Signal> training,
                                   std::size_t n, std::span<const GridPoint> grid,
                                   std::uint64_t seed) {
  if (grid.empty()) throw Error(ErrorCode::InvalidParams, "empty tuning grid");
  if (training.empty()) throw Error(ErrorCode::EmptyTrainingSet, "no training signals");
  const auto& dims = op.shape();

  TuningResult result;
  bool found = false;
  double best_psnr = 0.0;
  for (std::size_t k = 0; k < grid.size(); ++k) {
    TuningEntry entry{grid[k], derive_seed(seed, k), false, 0.0, 0.0};
    const VariableDensityParams params{grid[k].r, grid[k].d, entry.seed, n};
    SubsamplingPattern pattern;
    try {
      pattern = sample_variable_density(dims, params);
    } catch (const Error& e) {
      if (e.code() != ErrorCode::BudgetTooSmall) throw;
      result.log.push_back(entry);
      continue;
    }
    const EvalReport report = evaluate(op, pattern, training);
    entry.feasible = true;
    entry.mean_psnr = report.mean_psnr;
    entry.mean_normalized_error = report.mean_normalized_error;
    result.log.push_back(entry);
    if (!found || entry.mean_psnr > best_psnr) {
      found = true;
      best_psnr = entry.mean_psnr;
      result.best = params;
      result.pattern = std::move(pattern);
    }
  }
  if (!found) {
    throw Error(ErrorCode::BudgetTooSmall,
                "every grid point's fully sampled region exceeds the budget");
  }
  return result;
}

SubsamplingPattern best_n_pattern(const TransformOperator& op, std::span<const Complex> x,
                                  std::size_t n) {
  const std::size_t p = op.size();
  if (n > p) {
    throw Error(ErrorCode::InvalidBudget,
                "budget " + std::to_string(n) + " exceeds p = " + std::to_string(p));
  }
  const Spectrum s = op.forward(x);
  std::vector<double> magnitude(p);
  for (std::size_t j = 0; j < p; ++j) magnitude[j] = std::abs(s[j]);
  std::vector<std::size_t> all(p);
  std::iota(all.begin(), all.end(), std::size_t{0});
  return {p, top_by_key(std::move(all), magnitude, n), op.shape()};
}

}  // namespace lcs
