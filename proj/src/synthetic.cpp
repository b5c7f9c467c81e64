#include "lcs/synthetic.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <numbers>
#include <numeric>
#include <string>

#include "lcs/error.hpp"
#include "lcs/random.hpp"
#include "lcs/reconstruct.hpp"

namespace lcs {

void validate(const DiscreteEnsemble& ens) {
  if (ens.atoms.empty()) throw Error(ErrorCode::InvalidParams, "ensemble has no atoms");
  if (ens.atoms.size() != ens.probs.size()) {
    throw Error(ErrorCode::InvalidParams, "ensemble atoms and probabilities differ in count");
  }
  double total = 0.0;
  for (double q : ens.probs) {
    if (!(q >= 0.0)) throw Error(ErrorCode::InvalidParams, "negative ensemble probability");
    total += q;
  }
  if (std::abs(total - 1.0) > 1e-12) {
    throw Error(ErrorCode::InvalidParams, "ensemble probabilities do not sum to 1");
  }
  const std::size_t p = ens.atoms.front().size();
  if (!ens.dims.empty() &&
      std::accumulate(ens.dims.begin(), ens.dims.end(), std::size_t{1}, std::multiplies<>()) != p) {
    throw Error(ErrorCode::InvalidParams, "ensemble dims do not match atom length");
  }
  for (const auto& a : ens.atoms) {
    if (a.size() != p) throw Error(ErrorCode::InvalidParams, "ensemble atoms differ in length");
    if (squared_norm(a) == 0.0) throw Error(ErrorCode::InvalidParams, "ensemble atom is zero");
  }
}

std::vector<Signal> draw_signals(const DiscreteEnsemble& ens, std::size_t m, std::uint64_t seed) {
  validate(ens);
  std::vector<double> cumulative(ens.probs.size());
  std::partial_sum(ens.probs.begin(), ens.probs.end(), cumulative.begin());
  Rng rng(seed);
  std::vector<Signal> out;
  out.reserve(m);
  for (std::size_t i = 0; i < m; ++i) {
    const double u = rng.uniform();
    auto it = std::upper_bound(cumulative.begin(), cumulative.end(), u);
    if (it == cumulative.end()) it = std::prev(cumulative.end());
    // Skip zero-probability atoms that share a cumulative value with a
    // predecessor; upper_bound already lands past them.
    out.push_back(ens.atoms[static_cast<std::size_t>(it - cumulative.begin())]);
  }
  return out;
}

ScoreVector population_scores(const DiscreteEnsemble& ens, const TransformOperator& op) {
  validate(ens);
  if (ens.dimension() != op.size()) {
    throw Error(ErrorCode::InvalidShape, "ensemble dimension does not match transform");
  }
  ScoreVector out{std::vector<double>(op.size(), 0.0), ens.atoms.size()};
  for (std::size_t k = 0; k < ens.atoms.size(); ++k) {
    const Spectrum s = op.forward(ens.atoms[k]);
    const double weight = ens.probs[k] / squared_norm(ens.atoms[k]);
    for (std::size_t j = 0; j < s.size(); ++j) out.scores[j] += weight * std::norm(s[j]);
  }
  return out;
}

double population_objective(const DiscreteEnsemble& ens, const TransformOperator& op,
                            const SubsamplingPattern& pattern) {
  validate(ens);
  double total = 0.0;
  for (std::size_t k = 0; k < ens.atoms.size(); ++k) {
    total += ens.probs[k] * captured_fraction(op, pattern, ens.atoms[k]);
  }
  return total;
}

PopulationOptimum population_optimum(const DiscreteEnsemble& ens, const TransformOperator& op,
                                     std::size_t n) {
  SubsamplingPattern pattern = learn_pattern(population_scores(ens, op), n, ens.dims);
  const double epsilon = population_objective(ens, op, pattern);
  return {std::move(pattern), epsilon};
}

double empirical_gap_trial(const DiscreteEnsemble& ens, const TransformOperator& op,
                           const PopulationOptimum& optimum, std::size_t m, std::uint64_t seed) {
  if (m == 0) throw Error(ErrorCode::EmptyTrainingSet, "gap trial needs m >= 1");
  const std::vector<Signal> training = draw_signals(ens, m, seed);
  const SubsamplingPattern learned =
      learn_pattern(compute_scores(op, training), optimum.pattern.count(), ens.dims);
  if (learned.indices() == optimum.pattern.indices()) return 0.0;
  return std::max(0.0, optimum.epsilon - population_objective(ens, op, learned));
}

double empirical_gap_trial(const DiscreteEnsemble& ens, const TransformOperator& op,
                           std::size_t n, std::size_t m, std::uint64_t seed) {
  return empirical_gap_trial(ens, op, population_optimum(ens, op, n), m, seed);
}

std::vector<double> frequency_distance(const std::vector<std::size_t>& dims) {
  const std::size_t p =
      std::accumulate(dims.begin(), dims.end(), std::size_t{1}, std::multiplies<>());
  std::vector<double> dist(p, 0.0);
  std::vector<std::size_t> coord(dims.size(), 0);
  for (std::size_t flat = 0; flat < p; ++flat) {
    double sq = 0.0;
    for (std::size_t a = 0; a < dims.size(); ++a) {
      const auto k = static_cast<double>(coord[a]);
      const double freq = coord[a] >= (dims[a] + 1) / 2 ? k - static_cast<double>(dims[a]) : k;
      sq += freq * freq;
    }
    dist[flat] = std::sqrt(sq);
    for (std::size_t a = dims.size(); a-- > 0;) {
      if (++coord[a] < dims[a]) break;
      coord[a] = 0;
    }
  }
  return dist;
}

DiscreteEnsemble generate_lowpass_ensemble(const std::vector<std::size_t>& dims, double decay,
                                           std::size_t atoms, std::uint64_t seed) {
  if (dims.empty() || dims.size() > 2 ||
      std::any_of(dims.begin(), dims.end(), [](std::size_t d) { return d == 0; })) {
    throw Error(ErrorCode::InvalidParams, "ensemble dims must be one or two positive sizes");
  }
  if (!(decay >= 0.0) || !std::isfinite(decay)) {
    throw Error(ErrorCode::InvalidParams, "decay exponent must be >= 0");
  }
  if (atoms == 0) throw Error(ErrorCode::InvalidParams, "ensemble needs at least one atom");

  const TransformOperator op = fourier_for(dims);
  const std::vector<double> dist = frequency_distance(dims);
  std::vector<double> amplitude(dist.size());
  for (std::size_t j = 0; j < dist.size(); ++j) amplitude[j] = std::pow(1.0 + dist[j], -decay);

  DiscreteEnsemble ens;
  ens.dims = dims;
  ens.seed = seed;
  Rng rng(seed);
  while (ens.atoms.size() < atoms) {
    Spectrum s(dist.size());
    for (std::size_t j = 0; j < s.size(); ++j) {
      const double re = rng.normal();
      const double im = rng.normal();
      s[j] = Complex{re, im} * (amplitude[j] / std::sqrt(2.0));
    }
    Signal x = op.adjoint(s);
    if (squared_norm(x) > 0.0) ens.atoms.push_back(std::move(x));
  }
  ens.probs.assign(atoms, 1.0 / static_cast<double>(atoms));
  // Uniform weights may miss 1 by an ulp or two; fold the residue into the
  // last atom so validate() holds exactly.
  const double total = std::accumulate(ens.probs.begin(), ens.probs.end(), 0.0);
  ens.probs.back() += 1.0 - total;
  return ens;
}

KSpaceVolume generate_phantom_volume(const std::array<std::size_t, 3>& dims, double decay,
                                     std::uint64_t seed, std::string source) {
  const auto [nx, ny, nz] = dims;
  if (nx == 0 || ny == 0 || nz == 0) throw Error(ErrorCode::InvalidParams, "volume dims must be positive");
  const DiscreteEnsemble slices = generate_lowpass_ensemble({nx, ny}, decay, nz, seed);
  const TransformOperator op = TransformOperator::dft2d(nx, ny);
  KSpaceVolume vol;
  vol.dims = dims;
  vol.source = std::move(source);
  vol.data.assign(nx * ny * nz, Complex{0.0, 0.0});
  for (std::size_t z = 0; z < nz; ++z) {
    const double s = std::sin(std::numbers::pi * (static_cast<double>(z) + 0.5) / static_cast<double>(nz));
    const Spectrum k = op.forward(slices.atoms[z]);
    for (std::size_t x = 0; x < nx; ++x) {
      for (std::size_t y = 0; y < ny; ++y) vol.data[vol.at(x, y, z)] = k[x * ny + y] * (s * s);
    }
  }
  return fft_z(vol);
}

}  // namespace lcs
