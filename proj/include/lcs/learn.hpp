#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "lcs/pattern.hpp"
#include "lcs/transform.hpp"

namespace lcs {

// per_signal divides each signal's spectral energies by its squared norm,
// which makes top-n selection the exact maximizer of the average captured
// fraction. none keeps raw energies and is offered for comparison only.
enum class ScoreNormalization { per_signal, none };

/// Per-index empirical energies v_j averaged over m training signals.
/// With per_signal normalization every entry is in [0, 1] and they sum to 1.
struct ScoreVector {
  std::vector<double> scores;
  std::size_t m = 0;

  std::size_t size() const noexcept { return scores.size(); }
};

// Signals are processed in fixed chunks whose partial sums are reduced in
// chunk order, so results are bit-identical regardless of thread count.
inline constexpr std::size_t kScoreChunk = 64;

ScoreVector compute_scores(const TransformOperator& op, std::span<const Signal> training,
                           ScoreNormalization normalization = ScoreNormalization::per_signal);

// sum_{j in Omega} scores[j], accumulated in increasing index order.
double empirical_objective(const SubsamplingPattern& pattern, const ScoreVector& scores);

// Top-n indices by score, ties to the smaller index. This is the exact
// maximizer of empirical_objective over all patterns of size n, and among
// maximizers it is the lexicographically smallest index set.
SubsamplingPattern learn_pattern(const ScoreVector& scores, std::size_t n,
                                 std::vector<std::size_t> dims = {});

inline constexpr std::size_t kBruteForceLimit = 1'000'000;

// Exhaustive argmax of empirical_objective over all C(p, n) patterns, keeping
// the lexicographically first maximizer. Throws TooLarge above kBruteForceLimit.
SubsamplingPattern brute_force_pattern(const ScoreVector& scores, std::size_t n);

}  // namespace lcs
