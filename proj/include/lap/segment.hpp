#pragma once

#include <array>

#include "lap/forest.hpp"
#include "lap/maskgen.hpp"
#include "lap/types.hpp"

namespace lap {

// Per-pixel feature vector, every component mapped to [0,1]:
// hue, LAB A, LAB B, opponent o1, o2, gradient orientation, gradient magnitude.
inline constexpr int kPixelFeatureDim = 7;
using PixelFeatures = std::array<double, kPixelFeatureDim>;

// Segmentation classes.
inline constexpr int kSegBackground = 0;
inline constexpr int kSegInstrument = 1;

struct SegmentationMap {
  ImageBool map;  // 1 = instrument; always 0 outside the circle mask
};

// Features for one pixel; p must lie inside the circle mask (OutsideMask).
PixelFeatures pixel_features(const Frame& frame, const CircleMask& mask, int x, int y);

struct SegmenterTrainOptions {
  int samples_per_frame = 2000;  // drawn half per class where available
};

// Trains the 2-class / 7-feature pixel forest from the dataset's pixel-mask
// annotations. Throws NoMaskAnnotations when the dataset has none.
RandomForest train_segmenter(const Dataset& dataset, const ForestConfig& config,
                             const SegmenterTrainOptions& options = {});

// Labels a pixel instrument unless P(background) >= background_threshold.
// Pixels outside the circle mask are background. Throws ModelMismatch unless
// the forest is 2-class / 7-feature.
SegmentationMap segment_frame(const RandomForest& forest, const Frame& frame,
                              const CircleMask& mask, double background_threshold = 0.6,
                              int jobs = 1);

}  // namespace lap
