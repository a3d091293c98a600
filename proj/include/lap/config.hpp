#pragma once

#include <cstdint>
#include <string>

#include "lap/boxes.hpp"
#include "lap/forest.hpp"
#include "lap/segment.hpp"
#include "lap/surf.hpp"

namespace lap {

// Every tunable of the pipeline, defaulted to the published parameter set:
// segmentation forest 50 trees / depth 10 with a 60% background certainty,
// cascade forests 300 trees / depth 8 with beta = 60%, PCA alpha = 95%,
// k = 100 visual words.
struct PipelineConfig {
  int seg_trees = 50;
  int seg_depth = 10;
  double seg_bg_threshold = 0.6;
  int seg_samples_per_frame = 2000;

  int cascade_trees = 300;
  int cascade_depth = 8;
  double cascade_beta = 0.6;

  double pca_alpha = 0.95;
  int bow_k = 100;

  BoxParams boxes;
  SurfParams surf;

  std::uint64_t seed = 0;
  int jobs = 1;

  ForestConfig seg_forest_config() const {
    ForestConfig c;
    c.num_trees = seg_trees;
    c.max_depth = seg_depth;
    c.rng_seed = seed;
    c.jobs = jobs;
    return c;
  }

  ForestConfig cascade_forest_config(std::uint64_t salt) const {
    ForestConfig c;
    c.num_trees = cascade_trees;
    c.max_depth = cascade_depth;
    c.rng_seed = seed ^ salt;
    c.jobs = jobs;
    return c;
  }
};

// Flat key=value config file ('#' comments). Unknown keys are rejected.
// Keys: seg.trees, seg.depth, seg.bg_threshold, seg.samples_per_frame,
// cascade.trees, cascade.depth, cascade.beta, pca.alpha, bow.k,
// boxes.close_kernel, boxes.min_area, boxes.proximity_px, boxes.angle_deg,
// surf.hessian_threshold.
void apply_config_file(PipelineConfig& config, const std::string& path);
void apply_config_line(PipelineConfig& config, const std::string& key, const std::string& value);

}  // namespace lap
