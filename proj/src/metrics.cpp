#include "lcs/metrics.hpp"

#include <cmath>
#include <string>

#include "lcs/error.hpp"
#include "lcs/parallel.hpp"
#include "lcs/reconstruct.hpp"

namespace lcs {

double psnr(std::span<const Complex> reference, std::span<const Complex> estimate) {
  if (reference.empty()) throw Error(ErrorCode::InvalidShape, "psnr of an empty image");
  if (reference.size() != estimate.size()) {
    throw Error(ErrorCode::InvalidShape, "reference and estimate lengths differ");
  }
  double peak = 0.0;
  double sse = 0.0;
  for (std::size_t i = 0; i < reference.size(); ++i) {
    const double ref = std::abs(reference[i]);
    const double diff = std::abs(estimate[i]) - ref;
    peak = std::max(peak, ref);
    sse += diff * diff;
  }
  if (peak == 0.0) throw Error(ErrorCode::DegenerateSignal, "reference image is zero");
  if (sse == 0.0) return kInfinitePsnr;
  const double mse = sse / static_cast<double>(reference.size());
  return 10.0 * std::log10(peak * peak / mse);
}

double log_binomial(std::size_t p, std::size_t n) {
  if (n > p) throw Error(ErrorCode::InvalidParams, "binomial with n > p");
  const auto lg = [](std::size_t k) { return std::lgamma(static_cast<double>(k) + 1.0); };
  return lg(p) - lg(n) - lg(p - n);
}

double generalization_bound(const BoundInput& input) {
  if (input.m == 0) throw Error(ErrorCode::InvalidParams, "m must be at least 1");
  if (input.p == 0) throw Error(ErrorCode::InvalidParams, "p must be at least 1");
  if (input.n > input.p) throw Error(ErrorCode::InvalidParams, "n must not exceed p");
  if (!(input.beta > 0.0 && input.beta < 1.0)) {
    throw Error(ErrorCode::InvalidParams, "beta must lie in (0, 1)");
  }
  // Exact zero at the endpoints instead of lgamma round-off.
  const double log_count =
      (input.n == 0 || input.n == input.p) ? 0.0 : log_binomial(input.p, input.n);
  return std::sqrt(2.0 / static_cast<double>(input.m) * (log_count + std::log(2.0 / input.beta)));
}

void summarize(EvalReport& report) {
  double psnr_sum = 0.0;
  std::size_t finite = 0;
  double err_sum = 0.0;
  double captured_sum = 0.0;
  report.infinite_psnr_count = 0;
  for (const auto& s : report.signals) {
    if (std::isinf(s.psnr)) {
      ++report.infinite_psnr_count;
    } else {
      psnr_sum += s.psnr;
      ++finite;
    }
    err_sum += s.normalized_error;
    captured_sum += s.captured_fraction;
  }
  const auto count = static_cast<double>(report.signals.size());
  report.mean_psnr = finite > 0 ? psnr_sum / static_cast<double>(finite)
                                : (report.signals.empty() ? 0.0 : kInfinitePsnr);
  report.mean_normalized_error = report.signals.empty() ? 0.0 : err_sum / count;
  report.mean_captured_fraction = report.signals.empty() ? 0.0 : captured_sum / count;
}

EvalReport evaluate(const TransformOperator& op, const SubsamplingPattern& pattern,
                    std::span<const Signal> test_signals, std::string pattern_id) {
  if (test_signals.empty()) throw Error(ErrorCode::EmptyInput, "no test signals");
  EvalReport report;
  report.pattern_id = std::move(pattern_id);
  report.n = pattern.count();
  report.p = pattern.universe();
  report.rate = pattern.rate();
  report.signals.resize(test_signals.size());
  parallel_for(test_signals.size(), [&](std::size_t i) {
    const Reconstruction rec = simulate(op, pattern, test_signals[i]);
    report.signals[i] = {psnr(test_signals[i], rec.estimate),
                         normalized_error(rec.estimate, test_signals[i]), rec.captured_fraction};
  });
  summarize(report);
  return report;
}

}  // namespace lcs
