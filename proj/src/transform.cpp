#include "lcs/transform.hpp"

#include <fftw3.h>

#include <bit>
#include <cmath>
#include <mutex>
#include <numbers>

#include "lcs/error.hpp"

namespace lcs {

namespace {

// FFTW planning and plan destruction are not thread-safe; execution with the
// new-array interface is.
std::mutex& planner_mutex() {
  static std::mutex m;
  return m;
}

fftw_complex* as_fftw(Complex* p) { return reinterpret_cast<fftw_complex*>(p); }

Complex unit_phase(std::uint64_t numerator, std::uint64_t denominator) {
  const double angle = -2.0 * std::numbers::pi * static_cast<double>(numerator % denominator) /
                       static_cast<double>(denominator);
  return {std::cos(angle), std::sin(angle)};
}

}  // namespace

struct TransformOperator::Plans {
  fftw_plan forward = nullptr;
  fftw_plan backward = nullptr;

  Plans(const std::vector<std::size_t>& shape, std::size_t size) {
    std::vector<int> dims(shape.begin(), shape.end());
    std::lock_guard lock(planner_mutex());
    // In-place plans; execution always goes through the new-array interface.
    auto* buf = static_cast<fftw_complex*>(fftw_malloc(sizeof(fftw_complex) * size));
    const unsigned flags = FFTW_ESTIMATE | FFTW_UNALIGNED;
    const int rank = static_cast<int>(dims.size());
    forward = fftw_plan_dft(rank, dims.data(), buf, buf, FFTW_FORWARD, flags);
    backward = fftw_plan_dft(rank, dims.data(), buf, buf, FFTW_BACKWARD, flags);
    fftw_free(buf);
    if (!forward || !backward) throw Error(ErrorCode::InvalidShape, "FFT planning failed");
  }

  ~Plans() {
    std::lock_guard lock(planner_mutex());
    if (forward) fftw_destroy_plan(forward);
    if (backward) fftw_destroy_plan(backward);
  }

  Plans(const Plans&) = delete;
  Plans& operator=(const Plans&) = delete;
};

std::string_view to_string(TransformKind kind) noexcept {
  switch (kind) {
    case TransformKind::dft1d: return "dft1d";
    case TransformKind::dft2d: return "dft2d";
    case TransformKind::hadamard: return "hadamard";
  }
  return "unknown";
}

TransformKind parse_transform_kind(std::string_view name) {
  if (name == "dft1d") return TransformKind::dft1d;
  if (name == "dft2d") return TransformKind::dft2d;
  if (name == "hadamard") return TransformKind::hadamard;
  throw Error(ErrorCode::InvalidParams, "unknown transform kind '" + std::string(name) + "'");
}

TransformOperator::TransformOperator(TransformKind kind, std::vector<std::size_t> shape)
    : kind_(kind), shape_(std::move(shape)) {
  if (shape_.empty()) throw Error(ErrorCode::InvalidShape, "transform shape is empty");
  size_ = 1;
  for (auto d : shape_) {
    if (d == 0) throw Error(ErrorCode::InvalidShape, "transform dimensions must be positive");
    size_ *= d;
  }
  switch (kind_) {
    case TransformKind::dft1d:
      if (shape_.size() != 1) throw Error(ErrorCode::InvalidShape, "dft1d takes exactly one dimension");
      plans_ = std::make_shared<const Plans>(shape_, size_);
      break;
    case TransformKind::dft2d:
      if (shape_.size() != 2) throw Error(ErrorCode::InvalidShape, "dft2d takes exactly two dimensions");
      plans_ = std::make_shared<const Plans>(shape_, size_);
      break;
    case TransformKind::hadamard:
      for (auto d : shape_) {
        if (!std::has_single_bit(d)) {
          throw Error(ErrorCode::InvalidShape, "hadamard dimensions must be powers of two");
        }
      }
      break;
  }
}

void TransformOperator::check_length(std::size_t n, const char* what) const {
  if (n != size_) {
    throw Error(ErrorCode::InvalidShape, std::string(what) + " has length " + std::to_string(n) +
                                             ", transform expects " + std::to_string(size_));
  }
}

void TransformOperator::hadamard_in_place(std::span<Complex> v) const {
  for (std::size_t half = 1; half < v.size(); half *= 2) {
    for (std::size_t block = 0; block < v.size(); block += 2 * half) {
      for (std::size_t k = block; k < block + half; ++k) {
        const Complex a = v[k];
        const Complex b = v[k + half];
        v[k] = a + b;
        v[k + half] = a - b;
      }
    }
  }
  const double scale = 1.0 / std::sqrt(static_cast<double>(v.size()));
  for (auto& z : v) z *= scale;
}

Spectrum TransformOperator::forward(std::span<const Complex> x) const {
  check_length(x.size(), "signal");
  Spectrum out(x.begin(), x.end());
  forward_in_place(out);
  return out;
}

void TransformOperator::forward_in_place(std::span<Complex> v) const {
  check_length(v.size(), "signal");
  if (kind_ == TransformKind::hadamard) {
    hadamard_in_place(v);
    return;
  }
  fftw_execute_dft(plans_->forward, as_fftw(v.data()), as_fftw(v.data()));
  const double scale = 1.0 / std::sqrt(static_cast<double>(size_));
  for (auto& z : v) z *= scale;
}

Signal TransformOperator::adjoint(std::span<const Complex> s) const {
  check_length(s.size(), "spectrum");
  Signal out(s.begin(), s.end());
  if (kind_ == TransformKind::hadamard) {
    hadamard_in_place(out);
    return out;
  }
  fftw_execute_dft(plans_->backward, as_fftw(out.data()), as_fftw(out.data()));
  const double scale = 1.0 / std::sqrt(static_cast<double>(size_));
  for (auto& z : out) z *= scale;
  return out;
}

Complex TransformOperator::row_inner(std::size_t j, std::span<const Complex> x) const {
  check_length(x.size(), "signal");
  if (j >= size_) {
    throw Error(ErrorCode::InvalidIndex,
                "row " + std::to_string(j) + " out of range for p = " + std::to_string(size_));
  }
  const double scale = 1.0 / std::sqrt(static_cast<double>(size_));
  Complex acc{0.0, 0.0};
  switch (kind_) {
    case TransformKind::hadamard:
      for (std::size_t k = 0; k < size_; ++k) {
        if (std::popcount(j & k) % 2 == 0) acc += x[k];
        else acc -= x[k];
      }
      break;
    case TransformKind::dft1d:
      for (std::size_t k = 0; k < size_; ++k) acc += x[k] * unit_phase(std::uint64_t{j} * k, size_);
      break;
    case TransformKind::dft2d: {
      const std::size_t rows = shape_[0];
      const std::size_t cols = shape_[1];
      const std::size_t a = j / cols;
      const std::size_t b = j % cols;
      std::vector<Complex> col_phase(cols);
      for (std::size_t c = 0; c < cols; ++c) col_phase[c] = unit_phase(std::uint64_t{b} * c, cols);
      for (std::size_t r = 0; r < rows; ++r) {
        Complex row_acc{0.0, 0.0};
        for (std::size_t c = 0; c < cols; ++c) row_acc += x[r * cols + c] * col_phase[c];
        acc += row_acc * unit_phase(std::uint64_t{a} * r, rows);
      }
      break;
    }
  }
  return acc * scale;
}

}  // namespace lcs

namespace lcs {

TransformOperator fourier_for(const std::vector<std::size_t>& dims) {
  if (dims.size() == 1) return TransformOperator::dft1d(dims[0]);
  if (dims.size() == 2) return TransformOperator::dft2d(dims[0], dims[1]);
  throw Error(ErrorCode::InvalidShape, "Fourier operator needs one or two dimensions");
}

}  // namespace lcs
