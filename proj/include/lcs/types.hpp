#pragma once

#include <complex>
#include <vector>

namespace lcs {

using Complex = std::complex<double>;

// Image-domain vector x (1D, or 2D flattened row-major).
using Signal = std::vector<Complex>;
// Transform-domain vector F x, same length and flattening as the signal.
using Spectrum = std::vector<Complex>;
// The n retained entries P_Omega F x, in increasing index order.
using Measurements = std::vector<Complex>;

double squared_norm(const std::vector<Complex>& v) noexcept;

}  // namespace lcs
