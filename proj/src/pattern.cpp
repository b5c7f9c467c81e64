#include "lcs/pattern.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <numeric>
#include <string>

#include "lcs/error.hpp"

namespace lcs {

namespace {

void check_dims(std::size_t p, const std::vector<std::size_t>& dims) {
  if (dims.empty()) return;
  const std::size_t product =
      std::accumulate(dims.begin(), dims.end(), std::size_t{1}, std::multiplies<>());
  if (product != p) {
    throw Error(ErrorCode::InvalidShape,
                "pattern dims multiply to " + std::to_string(product) + ", expected p = " +
                    std::to_string(p));
  }
}

}  // namespace

SubsamplingPattern::SubsamplingPattern(std::size_t p, std::vector<std::size_t> indices,
                                       std::vector<std::size_t> dims)
    : p_(p), indices_(std::move(indices)), dims_(std::move(dims)) {
  check_dims(p_, dims_);
  std::sort(indices_.begin(), indices_.end());
  if (std::adjacent_find(indices_.begin(), indices_.end()) != indices_.end()) {
    throw Error(ErrorCode::InvalidIndex, "pattern indices must be distinct");
  }
  if (!indices_.empty() && indices_.back() >= p_) {
    throw Error(ErrorCode::InvalidIndex, "pattern index " + std::to_string(indices_.back()) +
                                             " out of range for p = " + std::to_string(p_));
  }
}

SubsamplingPattern SubsamplingPattern::full(std::size_t p, std::vector<std::size_t> dims) {
  std::vector<std::size_t> all(p);
  std::iota(all.begin(), all.end(), std::size_t{0});
  return {p, std::move(all), std::move(dims)};
}

SubsamplingPattern SubsamplingPattern::empty(std::size_t p, std::vector<std::size_t> dims) {
  return {p, {}, std::move(dims)};
}

SubsamplingPattern SubsamplingPattern::from_mask(std::span<const unsigned char> mask,
                                                 std::vector<std::size_t> dims) {
  std::vector<std::size_t> picked;
  for (std::size_t i = 0; i < mask.size(); ++i) {
    if (mask[i] != 0) picked.push_back(i);
  }
  return {mask.size(), std::move(picked), std::move(dims)};
}

bool SubsamplingPattern::contains(std::size_t index) const {
  return std::binary_search(indices_.begin(), indices_.end(), index);
}

SamplingRate SubsamplingPattern::rate() const noexcept {
  if (p_ == 0) return {0, 1};
  const std::size_t g = std::gcd(indices_.size(), p_);
  return {indices_.size() / g, p_ / g};
}

std::vector<unsigned char> SubsamplingPattern::mask() const {
  std::vector<unsigned char> out(p_, 0);
  for (auto i : indices_) out[i] = 1;
  return out;
}

Measurements subsample(const SubsamplingPattern& pattern, std::span<const Complex> s) {
  if (s.size() != pattern.universe()) {
    throw Error(ErrorCode::InvalidShape, "spectrum length " + std::to_string(s.size()) +
                                             " does not match pattern universe " +
                                             std::to_string(pattern.universe()));
  }
  Measurements y;
  y.reserve(pattern.count());
  for (auto i : pattern.indices()) y.push_back(s[i]);
  return y;
}

Spectrum embed(const SubsamplingPattern& pattern, std::span<const Complex> y) {
  if (y.size() != pattern.count()) {
    throw Error(ErrorCode::InvalidShape, "measurement length " + std::to_string(y.size()) +
                                             " does not match pattern size " +
                                             std::to_string(pattern.count()));
  }
  Spectrum s(pattern.universe(), Complex{0.0, 0.0});
  const auto& idx = pattern.indices();
  for (std::size_t k = 0; k < idx.size(); ++k) s[idx[k]] = y[k];
  return s;
}

std::size_t budget_from_rate(double rate, std::size_t p) {
  if (!(rate > 0.0 && rate <= 1.0)) {
    throw Error(ErrorCode::InvalidParams, "sampling rate must lie in (0, 1]");
  }
  return static_cast<std::size_t>(std::llround(rate * static_cast<double>(p)));
}

}  // namespace lcs
