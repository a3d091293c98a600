#pragma once

#include "lap/bow.hpp"
#include "lap/histograms.hpp"
#include "lap/pca.hpp"
#include "lap/surf.hpp"

namespace lap {

inline constexpr int kStage1Dim = 2 * kColorBins;                    // 20
inline constexpr int kStage2FixedDim = kStage1Dim + 2 * kGradientBins;  // 30

enum class FeatureStage { Stage1 = 1, Stage2 = 2 };

// Concatenation order is fixed: hue(10), sat(10), orientation(5),
// magnitude(5), bag-of-words(k).
struct BoxFeatures {
  ColorHistograms color;
  GradientHistograms gradient;   // stage 2 only
  std::vector<double> bow;       // stage 2 only, k bins
  bool has_stage2 = false;
  bool empty_region = false;

  std::vector<double> stage1_vector() const;          // 20 values
  std::vector<double> stage2_vector() const;          // 30 + k values
};

// Stage 1 fills only the color histograms; the gradient and SURF work runs
// only for stage 2 (the cascade's laziness contract).
BoxFeatures box_features(const Frame& frame, const CircleMask& mask, const BoundingBox& box,
                         const PcaModel& pca, const Vocabulary& vocabulary, FeatureStage stage,
                         const SurfParams& surf = {});

}  // namespace lap
