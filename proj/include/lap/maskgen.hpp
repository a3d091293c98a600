#pragma once

#include "lap/types.hpp"

namespace lap {

struct CircleMask {
  double center_x = 0;
  double center_y = 0;
  double radius = 0;
  ImageBool mask;  // 1 = inside circle

  bool inside(int x, int y) const { return mask.at(x, y) != 0; }
};

// Finds the circular endoscopic border: threshold the luma image at gray > 3,
// walk the four corner diagonals toward the image center until the first
// non-black pixel, and fit a circle to the hit points (least squares for 4,
// circumcircle for 3, frame-center fallback for fewer). Throws NoContent when
// no diagonal hits anything.
CircleMask generate_mask(const Frame& frame);

// Zeroes the pixels outside the circle. Throws DimensionMismatch.
Frame apply_mask(const Frame& frame, const CircleMask& mask);

// Exposed for tests: least-squares (Kasa) circle through >= 3 points.
// Returns false when the points are collinear to machine precision.
bool fit_circle_kasa(const std::vector<std::pair<double, double>>& pts,
                     double& cx, double& cy, double& r);

}  // namespace lap
