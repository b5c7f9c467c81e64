#pragma once

#include <cstddef>
#include <limits>
#include <span>
#include <string>
#include <vector>

#include "lcs/pattern.hpp"
#include "lcs/transform.hpp"

namespace lcs {

// Returned by psnr for an exact reconstruction.
inline constexpr double kInfinitePsnr = std::numeric_limits<double>::infinity();

/// PSNR in dB on magnitude images with a per-image peak:
///   10 log10(max|ref|^2 / mean(||est| - |ref||^2)).
/// Invariant to a common positive scaling of both inputs.
double psnr(std::span<const Complex> reference, std::span<const Complex> estimate);

// log C(p, n) through log-gamma; exact enough for p in the 10^5 range.
double log_binomial(std::size_t p, std::size_t n);

struct BoundInput {
  std::size_t m = 1;
  std::size_t p = 1;
  std::size_t n = 0;
  double beta = 0.05;
};

// sqrt((2/m) [log C(p, n) + log(2/beta)]), natural logarithms. With
// probability at least 1 - beta over m i.i.d. training signals, the learned
// pattern's expected captured fraction is within this of the optimum.
double generalization_bound(const BoundInput& input);

struct SignalScore {
  double psnr = 0.0;
  double normalized_error = 0.0;
  double captured_fraction = 0.0;
};

/// Per-signal and aggregate reconstruction quality of one pattern.
///
/// Infinite PSNR entries (exact reconstructions) are excluded from
/// mean_psnr and counted in infinite_psnr_count; if every entry is infinite
/// mean_psnr is infinite as well. Means are accumulated in signal order.
struct EvalReport {
  std::string pattern_id;
  std::size_t n = 0;
  std::size_t p = 0;
  SamplingRate rate;
  std::vector<SignalScore> signals;
  double mean_psnr = 0.0;
  std::size_t infinite_psnr_count = 0;
  double mean_normalized_error = 0.0;
  double mean_captured_fraction = 0.0;
};

EvalReport evaluate(const TransformOperator& op, const SubsamplingPattern& pattern,
                    std::span<const Signal> test_signals, std::string pattern_id = {});

// Fills the mean fields from report.signals.
void summarize(EvalReport& report);

}  // namespace lcs
