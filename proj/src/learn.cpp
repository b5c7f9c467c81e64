#include "lcs/learn.hpp"

#include <algorithm>
#include <numeric>
#include <string>

#include "lcs/error.hpp"
#include "lcs/parallel.hpp"

namespace lcs {

ScoreVector compute_scores(const TransformOperator& op, std::span<const Signal> training,
                           ScoreNormalization normalization) {
  if (training.empty()) throw Error(ErrorCode::EmptyTrainingSet, "no training signals");
  const std::size_t p = op.size();
  for (std::size_t i = 0; i < training.size(); ++i) {
    if (training[i].size() != p) {
      throw Error(ErrorCode::InvalidShape, "training signal " + std::to_string(i) + " has length " +
                                               std::to_string(training[i].size()) + ", expected " +
                                               std::to_string(p));
    }
    if (squared_norm(training[i]) == 0.0) {
      throw Error(ErrorCode::DegenerateSignal, "training signal " + std::to_string(i) + " is zero");
    }
  }

  const std::size_t chunks = (training.size() + kScoreChunk - 1) / kScoreChunk;
  std::vector<std::vector<double>> partial(chunks);
  parallel_for(chunks, [&](std::size_t c) {
    std::vector<double> acc(p, 0.0);
    Spectrum s(p);
    const std::size_t end = std::min(training.size(), (c + 1) * kScoreChunk);
    for (std::size_t i = c * kScoreChunk; i < end; ++i) {
      std::copy(training[i].begin(), training[i].end(), s.begin());
      op.forward_in_place(s);
      const double weight =
          normalization == ScoreNormalization::per_signal ? 1.0 / squared_norm(training[i]) : 1.0;
      for (std::size_t j = 0; j < p; ++j) acc[j] += std::norm(s[j]) * weight;
    }
    partial[c] = std::move(acc);
  });

  ScoreVector out{std::vector<double>(p, 0.0), training.size()};
  for (const auto& chunk : partial) {
    for (std::size_t j = 0; j < p; ++j) out.scores[j] += chunk[j];
  }
  const double inv_m = 1.0 / static_cast<double>(training.size());
  for (auto& v : out.scores) v *= inv_m;
  return out;
}

double empirical_objective(const SubsamplingPattern& pattern, const ScoreVector& scores) {
  if (pattern.universe() != scores.size()) {
    throw Error(ErrorCode::InvalidShape, "pattern universe " + std::to_string(pattern.universe()) +
                                             " does not match score length " +
                                             std::to_string(scores.size()));
  }
  double total = 0.0;
  for (auto j : pattern.indices()) total += scores.scores[j];
  return total;
}

SubsamplingPattern learn_pattern(const ScoreVector& scores, std::size_t n,
                                 std::vector<std::size_t> dims) {
  const std::size_t p = scores.size();
  if (n > p) {
    throw Error(ErrorCode::InvalidBudget,
                "budget " + std::to_string(n) + " exceeds p = " + std::to_string(p));
  }
  std::vector<std::size_t> order(p);
  std::iota(order.begin(), order.end(), std::size_t{0});
  const auto& v = scores.scores;
  std::partial_sort(order.begin(), order.begin() + static_cast<std::ptrdiff_t>(n), order.end(),
                    [&](std::size_t a, std::size_t b) { return v[a] > v[b] || (v[a] == v[b] && a < b); });
  order.resize(n);
  return {p, std::move(order), std::move(dims)};
}

SubsamplingPattern brute_force_pattern(const ScoreVector& scores, std::size_t n) {
  const std::size_t p = scores.size();
  if (n > p) {
    throw Error(ErrorCode::InvalidBudget,
                "budget " + std::to_string(n) + " exceeds p = " + std::to_string(p));
  }
  // C(p, n) built incrementally; each step stays integral.
  const std::size_t k = std::min(n, p - n);
  std::size_t combos = 1;
  for (std::size_t i = 1; i <= k; ++i) {
    combos = combos * (p - k + i) / i;
    if (combos > kBruteForceLimit) {
      throw Error(ErrorCode::TooLarge, "C(" + std::to_string(p) + ", " + std::to_string(n) +
                                           ") exceeds the enumeration limit");
    }
  }

  std::vector<std::size_t> current(n);
  std::iota(current.begin(), current.end(), std::size_t{0});
  std::vector<std::size_t> best = current;
  double best_value = -1.0;
  while (true) {
    double value = 0.0;
    for (auto j : current) value += scores.scores[j];
    if (value > best_value) {
      best_value = value;
      best = current;
    }
    // Advance to the next combination in lexicographic order.
    std::size_t pos = n;
    while (pos > 0 && current[pos - 1] == p - n + pos - 1) --pos;
    if (pos == 0) break;
    ++current[pos - 1];
    for (std::size_t i = pos; i < n; ++i) current[i] = current[i - 1] + 1;
  }
  return {p, std::move(best)};
}

}  // namespace lcs
