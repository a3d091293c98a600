#pragma once

#include <array>
#include <vector>

#include "lap/maskgen.hpp"
#include "lap/types.hpp"

namespace lap {

inline constexpr int kColorBins = 10;
inline constexpr int kGradientBins = 5;

// Largest response of a 3x3 Sobel kernel on 8-bit input (4 * 255); gradient
// magnitudes are normalized against it.
inline constexpr double kMaxSobelResponse = 1020.0;

struct ColorHistograms {
  std::array<double, kColorBins> hue{};
  std::array<double, kColorBins> sat{};
  bool empty_region = false;  // no in-mask pixels; histograms all zero
};

struct GradientHistograms {
  std::array<double, kGradientBins> orientation{};  // aligned: max bin first
  std::array<double, kGradientBins> magnitude{};
  bool empty_region = false;
};

// 10-bin hue ([0,360)) and saturation ([0,1]) histograms over the in-mask
// pixels of the box, L1-normalized. Achromatic pixels land in hue bin 0.
ColorHistograms color_histograms(const Frame& frame, const CircleMask& mask,
                                 const BoundingBox& box);

// 5-bin gradient orientation (folded to [0,180), rotated so the fullest bin
// comes first) and magnitude histograms over the in-mask pixels of the box.
// Pixels with normalized magnitude < 1e-3 are excluded from the orientation
// histogram only.
GradientHistograms gradient_histograms(const Frame& frame, const CircleMask& mask,
                                       const BoundingBox& box);

// Cyclic rotation placing the maximum bin first (lowest index on ties).
template <size_t N>
std::array<double, N> align_histogram(const std::array<double, N>& h) {
  size_t best = 0;
  for (size_t i = 1; i < N; ++i)
    if (h[i] > h[best]) best = i;
  std::array<double, N> out{};
  for (size_t i = 0; i < N; ++i) out[i] = h[(best + i) % N];
  return out;
}

template <size_t N>
void l1_normalize(std::array<double, N>& h) {
  double sum = 0;
  for (double v : h) sum += v;
  if (sum > 0)
    for (double& v : h) v /= sum;
}

void l1_normalize(std::vector<double>& h);

// Sobel 3x3 on the luma image with clamped borders; used by both the
// segmentation features and the gradient histograms.
void sobel_at(const ImageRgb& img, int x, int y, double& gx, double& gy);

}  // namespace lap
