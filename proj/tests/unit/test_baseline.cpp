#include <algorithm>
#include <cmath>
#include <set>

#include "doctest.h"
#include "expect_error.hpp"
#include "lcs/baseline.hpp"
#include "lcs/learn.hpp"
#include "lcs/reconstruct.hpp"
#include "lcs/synthetic.hpp"
#include "oracles.hpp"

using lcs::Complex;
using lcs::ErrorCode;
using lcs::SubsamplingPattern;
using lcs::TransformOperator;
using lcs::VariableDensityParams;

namespace {

const std::vector<std::size_t> k4x4{4, 4};

}  // namespace

TEST_CASE("frequency radius on a 4x4 grid") {
  // Signed frequencies per axis are {0, 1, -2, -1}, halved to {0, .5, -1, -.5};
  // the farthest corner (index (2,2) = 10) sits at sqrt(2).
  const auto rho = lcs::frequency_radius(k4x4);
  CHECK(rho[0] == 0.0);
  CHECK(rho[10] == doctest::Approx(1.0));
  CHECK(rho[4] == doctest::Approx(0.5 / std::sqrt(2.0)));
  CHECK(rho[5] == doctest::Approx(0.5));
  CHECK(*std::max_element(rho.begin(), rho.end()) == doctest::Approx(1.0));
}

TEST_CASE("density map values") {
  const auto w = lcs::density_map(k4x4, 0.1, 2.0);
  CHECK(w[0] == 1.0);
  CHECK(w[4] == doctest::Approx(std::pow(1.0 - 0.5 / std::sqrt(2.0), 2.0)));
  CHECK(w[10] == 0.0);
  for (double v : w) CHECK((v >= 0.0 && v <= 1.0));
  for (double v : lcs::density_map(std::vector<std::size_t>{8, 6}, 0.3, 0.0)) CHECK(v == 1.0);
  for (double v : lcs::density_map(std::vector<std::size_t>{8, 6}, 1.0, 7.0)) CHECK(v == 1.0);
  for (double r : {0.0, 0.2, 0.9})
    for (double d : {0.0, 1.0, 50.0}) CHECK(lcs::density_map(std::vector<std::size_t>{9, 7}, r, d)[0] == 1.0);
  CHECK_LCS_ERROR(lcs::density_map(k4x4, 1.5, 1.0), ErrorCode::InvalidParams);
  CHECK_LCS_ERROR(lcs::density_map(k4x4, 0.5, -1.0), ErrorCode::InvalidParams);
}

TEST_CASE("variable-density sampling contract") {
  const std::vector<std::size_t> dims{16, 16};
  SUBCASE("n = p gives the full pattern") {
    CHECK(lcs::sample_variable_density(dims, {0.3, 4.0, 1, 256}) == SubsamplingPattern::full(256, dims));
  }
  SUBCASE("fixed seed is reproducible, different seeds differ") {
    const VariableDensityParams params{0.1, 3.0, 42, 40};
    CHECK(lcs::sample_variable_density(dims, params) == lcs::sample_variable_density(dims, params));
    CHECK(lcs::sample_variable_density(dims, params) !=
          lcs::sample_variable_density(dims, {0.1, 3.0, 43, 40}));
  }
  SUBCASE("exactly n distinct indices including the whole disk") {
    oracle::Gen gen(1);
    const auto rho = lcs::frequency_radius(dims);
    for (int trial = 0; trial < 50; ++trial) {
      const double r = gen.uniform(0.0, 0.2);
      const std::size_t disk = static_cast<std::size_t>(
          std::count_if(rho.begin(), rho.end(), [&](double v) { return r > 0.0 && v <= r; }));
      const std::size_t n = gen.index(disk, 256);
      const auto pat = lcs::sample_variable_density(dims, {r, gen.uniform(0.0, 10.0), gen.engine(), n});
      CHECK(pat.count() == n);
      CHECK(std::set<std::size_t>(pat.indices().begin(), pat.indices().end()).size() == n);
      for (std::size_t i = 0; i < 256; ++i)
        if (r > 0.0 && rho[i] <= r) CHECK(pat.contains(i));
    }
  }
  SUBCASE("disk larger than the budget") {
    CHECK_LCS_ERROR(lcs::sample_variable_density(dims, {0.5, 1.0, 0, 10}), ErrorCode::BudgetTooSmall);
    CHECK_LCS_ERROR(lcs::sample_variable_density(dims, {0.1, 1.0, 0, 300}), ErrorCode::InvalidBudget);
  }
  SUBCASE("zero-weight corner is taken only when needed") {
    // d > 0 makes the farthest corner weight 0; asking for p - 1 samples must
    // leave exactly that index out.
    const auto pat = lcs::sample_variable_density(k4x4, {0.0, 2.0, 5, 15});
    CHECK_FALSE(pat.contains(10));
  }
}

TEST_CASE("high degree concentrates samples near the centre") {
  const std::vector<std::size_t> dims{32, 32};
  const auto rho = lcs::frequency_radius(dims);
  const double r = 0.05;
  const std::size_t n = 100;
  const double near_count =
      static_cast<double>(std::count_if(rho.begin(), rho.end(), [&](double v) { return v <= 2 * r; }));
  const double uniform_fraction = near_count / static_cast<double>(rho.size());
  double fraction = 0.0;
  for (std::uint64_t seed = 0; seed < 100; ++seed) {
    const auto pat = lcs::sample_variable_density(dims, {r, 100.0, seed, n});
    std::size_t near = 0;
    for (auto i : pat.indices()) near += rho[i] <= 2 * r ? 1 : 0;
    fraction += static_cast<double>(near) / static_cast<double>(n);
  }
  fraction /= 100.0;
  CHECK(fraction > uniform_fraction);
}

TEST_CASE("uniform sampling") {
  const auto a = lcs::sample_uniform(100, 30, 9);
  CHECK(a.count() == 30);
  CHECK(a == lcs::sample_uniform(100, 30, 9));
  CHECK(a != lcs::sample_uniform(100, 30, 10));
  CHECK(lcs::sample_uniform(5, 5, 1) == SubsamplingPattern::full(5));
  CHECK_LCS_ERROR(lcs::sample_uniform(5, 6, 1), ErrorCode::InvalidBudget);
}

TEST_CASE("grid order is r-major") {
  const std::vector<double> radii{0.0, 0.1}, degrees{1.0, 2.0, 3.0};
  const auto grid = lcs::make_grid(radii, degrees);
  REQUIRE(grid.size() == 6);
  CHECK(grid[1].r == 0.0);
  CHECK(grid[1].d == 2.0);
  CHECK(grid[3].r == 0.1);
  CHECK(grid[3].d == 1.0);
}

TEST_CASE("tuning") {
  const auto ens = lcs::generate_lowpass_ensemble({16, 16}, 1.5, 24, 3);
  const auto op = TransformOperator::dft2d(16, 16);

  SUBCASE("single grid point wins") {
    const std::vector<lcs::GridPoint> grid{{0.05, 2.0}};
    const auto res = lcs::tune_variable_density(op, ens.atoms, 40, grid, 7);
    CHECK(res.best.r == 0.05);
    CHECK(res.best.d == 2.0);
    CHECK(res.log.size() == 1);
    CHECK(res.pattern.count() == 40);
  }
  SUBCASE("ties go to the earliest grid point") {
    const std::vector<lcs::GridPoint> grid{{0.0, 0.0}, {0.5, 2.0}, {0.2, 1.0}};
    const auto res = lcs::tune_variable_density(op, ens.atoms, 256, grid, 7);
    CHECK(res.best.r == 0.0);
    CHECK(res.best.d == 0.0);
  }
  SUBCASE("low-pass signals prefer a positive degree") {
    const std::vector<double> radii{0.0}, degrees{0.0, 1.0, 2.0, 4.0, 8.0};
    const auto grid = lcs::make_grid(radii, degrees);
    const auto res = lcs::tune_variable_density(op, ens.atoms, 32, grid, 11);
    CHECK(res.best.d > 0.0);
    CHECK(std::isfinite(res.best.d));
    CHECK(res.log.size() == 5);
  }
  SUBCASE("infeasible points are logged and skipped") {
    const std::vector<lcs::GridPoint> grid{{0.9, 1.0}, {0.0, 1.0}};
    const auto res = lcs::tune_variable_density(op, ens.atoms, 20, grid, 1);
    CHECK_FALSE(res.log[0].feasible);
    CHECK(res.log[1].feasible);
    CHECK(res.best.r == 0.0);
    const std::vector<lcs::GridPoint> bad{{0.9, 1.0}};
    CHECK_LCS_ERROR(lcs::tune_variable_density(op, ens.atoms, 20, bad, 1), ErrorCode::BudgetTooSmall);
  }
  SUBCASE("reproducible") {
    const std::vector<lcs::GridPoint> grid{{0.0, 1.0}, {0.05, 4.0}};
    const auto a = lcs::tune_variable_density(op, ens.atoms, 30, grid, 5);
    const auto b = lcs::tune_variable_density(op, ens.atoms, 30, grid, 5);
    CHECK(a.pattern == b.pattern);
    CHECK(a.log[1].mean_psnr == b.log[1].mean_psnr);
  }
}

TEST_CASE("best-n pattern") {
  const auto op = TransformOperator::dft1d(4);
  const auto x = op.adjoint(std::vector<Complex>{3.0, 1.0, 2.0, 5.0});
  CHECK(lcs::best_n_pattern(op, x, 2).indices() == std::vector<std::size_t>{0, 3});
  const auto full = lcs::best_n_pattern(op, x, 4);
  CHECK(full.count() == 4);
  CHECK(lcs::normalized_error(lcs::simulate(op, full, x).estimate, x) == 0.0);
  CHECK_LCS_ERROR(lcs::best_n_pattern(op, x, 5), ErrorCode::InvalidBudget);
}

TEST_CASE("best-n dominates every pattern of the same size") {
  oracle::Gen gen(8);
  for (int trial = 0; trial < 20; ++trial) {
    const std::size_t p = gen.index(2, 12);
    const std::size_t n = gen.index(0, p);
    const auto op = TransformOperator::dft1d(p);
    const auto x = gen.signal(p);
    const double best = lcs::captured_fraction(op, lcs::best_n_pattern(op, x, n), x);
    for (std::uint32_t mask = 0; mask < (1u << p); ++mask) {
      if (static_cast<std::size_t>(__builtin_popcount(mask)) != n) continue;
      std::vector<std::size_t> idx;
      for (std::size_t j = 0; j < p; ++j)
        if (mask & (1u << j)) idx.push_back(j);
      CHECK(best >= lcs::captured_fraction(op, SubsamplingPattern(p, idx), x) - 1e-12);
    }
  }
}
