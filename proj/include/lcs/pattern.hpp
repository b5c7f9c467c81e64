#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "lcs/types.hpp"

namespace lcs {

struct SamplingRate {
  std::size_t numerator = 0;
  std::size_t denominator = 1;

  double value() const noexcept {
    return static_cast<double>(numerator) / static_cast<double>(denominator);
  }
  friend bool operator==(const SamplingRate&, const SamplingRate&) = default;
};

/// A sub-sampling pattern Omega: n distinct indices out of a universe of p.
///
/// Indices are over the flattened (row-major, unshifted) transform domain and
/// are kept strictly increasing. `dims` is optional metadata recording the
/// original shape for 2D rendering; when present its product equals p.
class SubsamplingPattern {
 public:
  SubsamplingPattern() = default;

  // Sorts and validates; throws InvalidIndex on duplicates or out-of-range
  // entries and InvalidShape if dims do not multiply to p.
  SubsamplingPattern(std::size_t p, std::vector<std::size_t> indices,
                     std::vector<std::size_t> dims = {});

  static SubsamplingPattern full(std::size_t p, std::vector<std::size_t> dims = {});
  static SubsamplingPattern empty(std::size_t p, std::vector<std::size_t> dims = {});
  // Indices i with mask[i] != 0.
  static SubsamplingPattern from_mask(std::span<const unsigned char> mask,
                                      std::vector<std::size_t> dims = {});

  std::size_t universe() const noexcept { return p_; }
  std::size_t count() const noexcept { return indices_.size(); }
  const std::vector<std::size_t>& indices() const noexcept { return indices_; }
  const std::vector<std::size_t>& dims() const noexcept { return dims_; }

  bool contains(std::size_t index) const;
  // Reduced fraction n/p.
  SamplingRate rate() const noexcept;
  std::vector<unsigned char> mask() const;

  friend bool operator==(const SubsamplingPattern&, const SubsamplingPattern&) = default;

 private:
  std::size_t p_ = 0;
  std::vector<std::size_t> indices_;
  std::vector<std::size_t> dims_;
};

// P_Omega s: the entries of s at the pattern's indices, in index order.
Measurements subsample(const SubsamplingPattern& pattern, std::span<const Complex> s);

// P_Omega^T y: y scattered to the pattern's indices, zeros elsewhere.
Spectrum embed(const SubsamplingPattern& pattern, std::span<const Complex> y);

// n = round(rate * p), rate in (0, 1].
std::size_t budget_from_rate(double rate, std::size_t p);

}  // namespace lcs
