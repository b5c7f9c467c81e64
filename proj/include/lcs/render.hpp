#pragma once

#include <cstddef>
#include <cstdint>
#include <filesystem>
#include <span>
#include <vector>

#include "lcs/pattern.hpp"
#include "lcs/types.hpp"

namespace lcs {

struct GrayImage {
  std::size_t width = 0;
  std::size_t height = 0;
  std::vector<std::uint8_t> pixels;  // row-major, height x width
};

// Sampled locations white on black. 2D patterns are fftshifted for display so
// DC sits at the centre; 1D patterns are drawn as a 16-pixel-high strip.
GrayImage render_mask(const SubsamplingPattern& pattern);

// |x| / peak mapped linearly to 0..255 and clamped; image is rows x cols.
GrayImage render_magnitude(std::span<const Complex> image, std::size_t rows, std::size_t cols,
                           double peak);

// Display index of an fftshifted axis: out[i] = in[(i + (len + 1) / 2) % len].
std::size_t fftshift_source(std::size_t display, std::size_t len) noexcept;

// 8-bit grayscale PNG. Output bytes depend only on the image.
void write_png(const std::filesystem::path& path, const GrayImage& image);

}  // namespace lcs
