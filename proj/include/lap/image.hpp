#pragma once

#include <array>
#include <cstdint>
#include <vector>

#include "lap/error.hpp"

namespace lap {

using Rgb = std::array<std::uint8_t, 3>;

template <typename T>
struct Image {
  int width = 0;
  int height = 0;
  std::vector<T> data;

  Image() = default;
  Image(int w, int h, T fill = T{}) : width(w), height(h), data(static_cast<size_t>(w) * h, fill) {}

  T& at(int x, int y) { return data[static_cast<size_t>(y) * width + x]; }
  const T& at(int x, int y) const { return data[static_cast<size_t>(y) * width + x]; }

  bool in_bounds(int x, int y) const { return x >= 0 && x < width && y >= 0 && y < height; }
  size_t pixel_count() const { return static_cast<size_t>(width) * height; }
  bool same_size(int w, int h) const { return width == w && height == h; }
};

using ImageRgb = Image<Rgb>;
using ImageGray = Image<std::uint8_t>;
// 0/1 per pixel
using ImageBool = Image<std::uint8_t>;

// ITU-R 601 luma, shared by every grayscale consumer so the per-pixel and
// whole-frame code paths produce identical values.
inline float luma601(const Rgb& p) {
  return 0.299f * p[0] + 0.587f * p[1] + 0.114f * p[2];
}

inline ImageGray to_gray(const ImageRgb& img) {
  ImageGray g(img.width, img.height);
  for (size_t i = 0; i < img.data.size(); ++i)
    g.data[i] = static_cast<std::uint8_t>(luma601(img.data[i]) + 0.5f);
  return g;
}

}  // namespace lap
