#include "lcs/render.hpp"

#include <png.h>

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <memory>

#include "lcs/error.hpp"

namespace lcs {

std::size_t fftshift_source(std::size_t display, std::size_t len) noexcept {
  return (display + (len + 1) / 2) % len;
}

GrayImage render_mask(const SubsamplingPattern& pattern) {
  const auto mask = pattern.mask();
  const auto& dims = pattern.dims();
  GrayImage img;
  if (dims.size() == 2) {
    const std::size_t rows = dims[0];
    const std::size_t cols = dims[1];
    img = {cols, rows, std::vector<std::uint8_t>(rows * cols, 0)};
    for (std::size_t r = 0; r < rows; ++r) {
      const std::size_t src_r = fftshift_source(r, rows);
      for (std::size_t c = 0; c < cols; ++c) {
        const std::size_t src_c = fftshift_source(c, cols);
        img.pixels[r * cols + c] = mask[src_r * cols + src_c] ? 255 : 0;
      }
    }
    return img;
  }
  constexpr std::size_t kStrip = 16;
  const std::size_t p = pattern.universe();
  img = {p, kStrip, std::vector<std::uint8_t>(p * kStrip, 0)};
  for (std::size_t c = 0; c < p; ++c) {
    const std::uint8_t v = mask[fftshift_source(c, p)] ? 255 : 0;
    for (std::size_t r = 0; r < kStrip; ++r) img.pixels[r * p + c] = v;
  }
  return img;
}

GrayImage render_magnitude(std::span<const Complex> image, std::size_t rows, std::size_t cols,
                           double peak) {
  if (image.size() != rows * cols) throw Error(ErrorCode::InvalidShape, "image size mismatch");
  if (!(peak > 0.0)) throw Error(ErrorCode::InvalidParams, "display peak must be positive");
  GrayImage img{cols, rows, std::vector<std::uint8_t>(image.size())};
  for (std::size_t i = 0; i < image.size(); ++i) {
    const double v = std::clamp(std::abs(image[i]) / peak, 0.0, 1.0);
    img.pixels[i] = static_cast<std::uint8_t>(std::lround(v * 255.0));
  }
  return img;
}

void write_png(const std::filesystem::path& path, const GrayImage& image) {
  if (image.width == 0 || image.height == 0) throw Error(ErrorCode::InvalidShape, "empty image");
  if (path.has_parent_path()) std::filesystem::create_directories(path.parent_path());
  std::unique_ptr<std::FILE, int (*)(std::FILE*)> file(std::fopen(path.c_str(), "wb"), &std::fclose);
  if (!file) throw Error(ErrorCode::Io, "cannot open '" + path.string() + "' for writing");

  png_structp png = png_create_write_struct(PNG_LIBPNG_VER_STRING, nullptr, nullptr, nullptr);
  png_infop info = png ? png_create_info_struct(png) : nullptr;
  if (!png || !info) {
    png_destroy_write_struct(&png, nullptr);
    throw Error(ErrorCode::Io, "libpng initialisation failed");
  }
  if (setjmp(png_jmpbuf(png))) {
    png_destroy_write_struct(&png, &info);
    throw Error(ErrorCode::Io, "PNG encoding failed for '" + path.string() + "'");
  }
  png_init_io(png, file.get());
  png_set_IHDR(png, info, static_cast<png_uint_32>(image.width), static_cast<png_uint_32>(image.height),
               8, PNG_COLOR_TYPE_GRAY, PNG_INTERLACE_NONE, PNG_COMPRESSION_TYPE_DEFAULT,
               PNG_FILTER_TYPE_DEFAULT);
  png_write_info(png, info);
  for (std::size_t r = 0; r < image.height; ++r) {
    png_write_row(png, const_cast<png_bytep>(image.pixels.data() + r * image.width));
  }
  png_write_end(png, nullptr);
  png_destroy_write_struct(&png, &info);
}

}  // namespace lcs
