#include "lcs/reconstruct.hpp"

#include <algorithm>
#include <string>

#include "lcs/error.hpp"

namespace lcs {

namespace {

double norm_sq(std::span<const Complex> v) {
  double acc = 0.0;
  for (const auto& z : v) acc += std::norm(z);
  return acc;
}

void check_pattern(const TransformOperator& op, const SubsamplingPattern& pattern) {
  if (pattern.universe() != op.size()) {
    throw Error(ErrorCode::InvalidShape, "pattern universe " + std::to_string(pattern.universe()) +
                                             " does not match transform size " +
                                             std::to_string(op.size()));
  }
}

}  // namespace

Signal ls_reconstruct(const TransformOperator& op, const SubsamplingPattern& pattern,
                      std::span<const Complex> y) {
  check_pattern(op, pattern);
  return op.adjoint(embed(pattern, y));
}

double normalized_error(std::span<const Complex> x_hat, std::span<const Complex> x_true) {
  if (x_hat.size() != x_true.size()) {
    throw Error(ErrorCode::InvalidShape, "estimate and reference lengths differ");
  }
  const double denom = norm_sq(x_true);
  if (denom == 0.0) throw Error(ErrorCode::DegenerateSignal, "reference signal is zero");
  double num = 0.0;
  for (std::size_t i = 0; i < x_true.size(); ++i) num += std::norm(x_hat[i] - x_true[i]);
  return num / denom;
}

double captured_fraction(const TransformOperator& op, const SubsamplingPattern& pattern,
                         std::span<const Complex> x) {
  check_pattern(op, pattern);
  const double denom = norm_sq(x);
  if (denom == 0.0) throw Error(ErrorCode::DegenerateSignal, "signal is zero");
  const Spectrum s = op.forward(x);
  double kept = 0.0;
  for (auto j : pattern.indices()) kept += std::norm(s[j]);
  // Rounding can push the ratio a few ulps past 1 when Omega is (nearly) full.
  return std::clamp(kept / denom, 0.0, 1.0);
}

Reconstruction simulate(const TransformOperator& op, const SubsamplingPattern& pattern,
                        std::span<const Complex> x) {
  check_pattern(op, pattern);
  const double denom = norm_sq(x);
  if (denom == 0.0) throw Error(ErrorCode::DegenerateSignal, "signal is zero");
  // P^T P = I on a full pattern, so F^H P^T P F x = x exactly.
  if (pattern.count() == op.size()) return {Signal(x.begin(), x.end()), pattern, 1.0};
  const Spectrum s = op.forward(x);
  const Measurements y = subsample(pattern, s);
  double kept = 0.0;
  for (const auto& z : y) kept += std::norm(z);
  return {op.adjoint(embed(pattern, y)), pattern, std::clamp(kept / denom, 0.0, 1.0)};
}

}  // namespace lcs
