#pragma once

#include <cstddef>
#include <array>
#include <cstdint>
#include <string>
#include <vector>

#include "lcs/dataset.hpp"
#include "lcs/learn.hpp"
#include "lcs/pattern.hpp"
#include "lcs/transform.hpp"

namespace lcs {

/// A finite signal distribution: atom k is drawn with probability probs[k].
/// Population quantities (expected captured fraction, the optimal pattern and
/// its value) are exact finite sums over the atoms.
struct DiscreteEnsemble {
  std::vector<Signal> atoms;
  std::vector<double> probs;
  std::vector<std::size_t> dims;
  std::uint64_t seed = 0;

  std::size_t dimension() const noexcept { return atoms.empty() ? 0 : atoms.front().size(); }
};

// Throws InvalidParams unless probs are non-negative and sum to 1 within
// 1e-12 and every atom is nonzero with a common length matching dims.
void validate(const DiscreteEnsemble& ens);

// m i.i.d. draws from the ensemble.
std::vector<Signal> draw_signals(const DiscreteEnsemble& ens, std::size_t m, std::uint64_t seed);

// Per-index population scores sum_k probs[k] |<phi_j, atom_k>|^2 / ||atom_k||^2.
ScoreVector population_scores(const DiscreteEnsemble& ens, const TransformOperator& op);

// E f_Omega(x) = sum_k probs[k] f_Omega(atom_k).
double population_objective(const DiscreteEnsemble& ens, const TransformOperator& op,
                            const SubsamplingPattern& pattern);

struct PopulationOptimum {
  SubsamplingPattern pattern;
  double epsilon = 0.0;
};

// Omega_opt by top-n on the population scores, and eps_P = E f_{Omega_opt}.
PopulationOptimum population_optimum(const DiscreteEnsemble& ens, const TransformOperator& op,
                                     std::size_t n);

// Delta_m = eps_P - E f_{Omega_m}, where Omega_m is learned from m draws
// seeded by `seed`. Clamped at 0 against round-off between tied patterns.
double empirical_gap_trial(const DiscreteEnsemble& ens, const TransformOperator& op,
                           std::size_t n, std::size_t m, std::uint64_t seed);
double empirical_gap_trial(const DiscreteEnsemble& ens, const TransformOperator& op,
                           const PopulationOptimum& optimum, std::size_t m, std::uint64_t seed);

/// K equiprobable random atoms whose spectral coefficients are complex
/// Gaussians with standard deviation (1 + radius)^-decay, radius being the
/// Euclidean frequency distance from DC in index units. decay = 0 gives a
/// flat expected spectrum. Deterministic given seed.
DiscreteEnsemble generate_lowpass_ensemble(const std::vector<std::size_t>& dims, double decay,
                                           std::size_t atoms, std::uint64_t seed);

/// Fixture k-space volume with dims (x, y, z): every z-slice is an
/// independent low-pass image (as in generate_lowpass_ensemble) scaled by
/// sin^2(pi (z + 0.5) / Nz), so slices near the z boundaries carry little
/// energy. Stored as raw k-space, i.e. 2D-transformed per slice and then
/// forward transformed along z.
KSpaceVolume generate_phantom_volume(const std::array<std::size_t, 3>& dims, double decay,
                                     std::uint64_t seed, std::string source);

// Euclidean distance of each flattened index from DC in signed-frequency
// index units.
std::vector<double> frequency_distance(const std::vector<std::size_t>& dims);

}  // namespace lcs
