#pragma once

#include <span>

#include "lcs/pattern.hpp"
#include "lcs/transform.hpp"

namespace lcs {

struct Reconstruction {
  Signal estimate;
  SubsamplingPattern pattern;
  // f_Omega of the ground truth; only meaningful when the truth was supplied.
  double captured_fraction = 0.0;
};

// Zero-filled least-squares decoder: adjoint(embed(y)).
Signal ls_reconstruct(const TransformOperator& op, const SubsamplingPattern& pattern,
                      std::span<const Complex> y);

// ||x_hat - x||^2 / ||x||^2.
double normalized_error(std::span<const Complex> x_hat, std::span<const Complex> x_true);

// f_Omega(x) = ||P_Omega F x||^2 / ||x||^2.
double captured_fraction(const TransformOperator& op, const SubsamplingPattern& pattern,
                         std::span<const Complex> x);

// Simulates acquisition of x on the pattern and decodes it. A full pattern
// returns x itself, so exact reconstructions compare equal bit for bit.
Reconstruction simulate(const TransformOperator& op, const SubsamplingPattern& pattern,
                        std::span<const Complex> x);

}  // namespace lcs
