#pragma once

#include <optional>

#include "lap/boxes.hpp"
#include "lap/box_features.hpp"
#include "lap/model.hpp"

namespace lap {

struct Detection {
  BoundingBox box;
  ToolClass label = ToolClass::NoInstrument;  // never Unknown
  // Absent when the box was gated out at stage 1.
  std::optional<std::array<double, kNumToolClasses>> stage2_distribution;
  double stage1_background_probability = 0;
  bool empty_region = false;
};

struct CascadeSample {
  const Frame* frame = nullptr;
  const CircleMask* mask = nullptr;
  BoundingBox box;
  ToolClass label = ToolClass::NoInstrument;  // Unknown is not a training label
};

struct CascadeForests {
  RandomForest stage1;  // binary instrument/background on hue+sat
  RandomForest stage2;  // 5 classes on the full 30+k stack
};

// Stage 1 trains on every sample; stage 2 trains only on the samples whose
// stage-1 P(no instrument) stays below beta.
CascadeForests train_cascade(const std::vector<CascadeSample>& samples,
                             const ForestConfig& config1, const ForestConfig& config2,
                             const PcaModel& pca, const Vocabulary& vocabulary, double beta,
                             const SurfParams& surf = {});

// Stage-1 features always; stage-2 features only when the gate passes
// (P(no instrument) < beta). Empty-region boxes short-circuit to NoInstrument.
Detection classify_box(const PipelineModel& model, const Frame& frame, const CircleMask& mask,
                       const BoundingBox& box, const SurfParams& surf = {});

struct FrameDetections {
  std::vector<Detection> detections;
  double detect_ms = 0;    // mask + segmentation + box extraction
  double identify_ms = 0;  // cascade over the candidate boxes
  bool mask_found = true;  // false when maskgen saw no content
};

// mask -> segment -> candidate boxes -> classify, preserving candidate order.
FrameDetections classify_frame(const PipelineModel& model, const Frame& frame,
                               const BoxParams& box_params = {}, const SurfParams& surf = {},
                               int jobs = 1);

}  // namespace lap
