#pragma once

#include <array>
#include <cstdint>
#include <vector>

#include "lap/types.hpp"

namespace lap {

struct SurfParams {
  double hessian_threshold = 500.0;  // on the 8-bit intensity scale
  int octaves = 3;
  int layers_per_octave = 4;
  double box_padding = 0.10;  // each box side grows by this fraction, clipped to the frame
};

struct SurfFeature {
  double x = 0;  // frame coordinates
  double y = 0;
  double scale = 0;
  double orientation = 0;  // radians
  double response = 0;
  std::array<double, 64> descriptor{};
};

// Standard SURF: integral image, approximate-Hessian box filters from 9x9
// upward, 3x3x3 non-maximum suppression with sub-pixel/scale interpolation,
// Haar-wavelet dominant orientation, and the 64-dimensional 4x4-subregion
// descriptor, L2-normalized. Keypoints are detected inside the padded box and
// only those whose center falls in the original box are returned.
std::vector<SurfFeature> detect_describe_surf(const Frame& frame, const BoundingBox& box,
                                              const SurfParams& params = {});

// Detector over a full grayscale image (float luma), used internally and by
// the tests that probe blob response directly.
std::vector<SurfFeature> detect_describe_surf_gray(const std::vector<float>& luma, int width,
                                                   int height, const SurfParams& params = {});

// Number of detect_describe_surf calls since process start (or last reset).
// The cascade's laziness contract is asserted against this counter.
std::uint64_t surf_invocation_count();
void reset_surf_invocation_count();

}  // namespace lap
