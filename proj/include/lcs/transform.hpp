#pragma once

#include <cstddef>
#include <memory>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "lcs/types.hpp"

namespace lcs {

enum class TransformKind { dft1d, dft2d, hadamard };

std::string_view to_string(TransformKind kind) noexcept;
TransformKind parse_transform_kind(std::string_view name);

/// Unitary measurement basis applied implicitly in O(p log p).
///
/// Conventions:
///  - DFT sign is exp(-2 pi i j k / N) on the forward side and the 1/sqrt(p)
///    factor is split symmetrically, so adjoint(forward(x)) == x.
///  - Frequencies are in natural (unshifted) order; 2D data is flattened
///    row-major, shape = {rows, cols}. Pattern indices refer to this order.
///  - Hadamard uses natural (Sylvester) ordering over the flattened index,
///    i.e. entry (j, k) is (-1)^popcount(j & k) / sqrt(p). Multi-dimensional
///    shapes therefore coincide with the 1D transform of length p.
///
/// Instances are immutable; copies share the underlying FFT plans and may be
/// used concurrently from several threads.
class TransformOperator {
 public:
  TransformOperator(TransformKind kind, std::vector<std::size_t> shape);

  static TransformOperator dft1d(std::size_t p) { return {TransformKind::dft1d, {p}}; }
  static TransformOperator dft2d(std::size_t rows, std::size_t cols) {
    return {TransformKind::dft2d, {rows, cols}};
  }
  static TransformOperator hadamard(std::size_t p) { return {TransformKind::hadamard, {p}}; }

  TransformKind kind() const noexcept { return kind_; }
  const std::vector<std::size_t>& shape() const noexcept { return shape_; }
  std::size_t size() const noexcept { return size_; }

  Spectrum forward(std::span<const Complex> x) const;
  Signal adjoint(std::span<const Complex> s) const;
  // Overwrites v with forward(v); avoids allocation in hot loops.
  void forward_in_place(std::span<Complex> v) const;

  // <phi_j, x>, evaluated directly in O(p) without a full transform.
  Complex row_inner(std::size_t j, std::span<const Complex> x) const;

 private:
  struct Plans;

  void check_length(std::size_t n, const char* what) const;
  void hadamard_in_place(std::span<Complex> v) const;

  TransformKind kind_;
  std::vector<std::size_t> shape_;
  std::size_t size_ = 0;
  std::shared_ptr<const Plans> plans_;
};

}  // namespace lcs

namespace lcs {

// dft1d for a single dimension, dft2d for two.
TransformOperator fourier_for(const std::vector<std::size_t>& dims);

}  // namespace lcs
