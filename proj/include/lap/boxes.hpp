#pragma once

#include <utility>
#include <vector>

#include "lap/segment.hpp"
#include "lap/types.hpp"

namespace lap {

struct Contour {
  std::vector<std::pair<int, int>> points;  // traced outer boundary, (x, y)
  long long area = 0;                       // pixel count of the component
  double dir_x = 1.0;                       // principal direction, unit norm
  double dir_y = 0.0;
  double centroid_x = 0;
  double centroid_y = 0;

  BoundingBox bounds() const;
};

struct BoxParams {
  int close_kernel = 5;        // odd side of the elliptical structuring element
  int min_area = 100;          // components below this are discarded
  double proximity_px = 20.0;  // max bounding-box gap for fusion
  double angle_deg = 15.0;     // max principal-direction angle for fusion
  int max_boxes = 5;
};

// Morphological closing with an elliptical kernel (dilate then erode).
ImageBool close_map(const ImageBool& map, int kernel_size);

// Closing, 8-connected labeling, outer-boundary tracing, small-component
// rejection. Empty map gives an empty list.
std::vector<Contour> extract_contours(const SegmentationMap& map, const BoxParams& params = {});

// Top eigenvector of the 2x2 covariance of the points, sign-normalized to
// x >= 0 (y >= 0 on tie). Throws DegeneratePoints when all points coincide.
std::pair<double, double> principal_direction(const std::vector<std::pair<int, int>>& points);

// Transitively merges contours whose principal directions differ by at most
// angle_deg (mod 180) and whose bounding boxes are within proximity_px.
std::vector<Contour> fuse_contours(const std::vector<Contour>& contours,
                                   const BoxParams& params = {});

// extract -> fuse -> tight box per contour, sorted by area descending
// (ties by x then y), truncated to max_boxes.
std::vector<BoundingBox> candidate_boxes(const SegmentationMap& map, const BoxParams& params = {});

}  // namespace lap
