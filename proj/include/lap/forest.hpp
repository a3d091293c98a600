#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "lap/error.hpp"

namespace lap {

struct ForestConfig {
  int num_trees = 50;
  int max_depth = 10;           // max edges root -> leaf
  int min_samples_split = 2;
  int features_per_split = 0;   // 0 = floor(sqrt(feature_dim))
  std::uint64_t rng_seed = 0;
  int jobs = 1;                 // trees may build in parallel; result is identical
};

// Binary decision tree stored as parallel node arrays, root at index 0.
// left/right = -1 marks a leaf; leaf_dist holds num_classes doubles per node
// (zeros for internal nodes).
struct Tree {
  std::vector<std::uint32_t> feature;
  std::vector<double> threshold;
  std::vector<std::int32_t> left;
  std::vector<std::int32_t> right;
  std::vector<double> leaf_dist;

  size_t node_count() const { return feature.size(); }
  bool is_leaf(size_t i) const { return left[i] < 0; }

  // Index of the leaf reached by x (traversal rule: x[f] <= threshold goes left).
  size_t find_leaf(std::span<const double> x) const {
    size_t i = 0;
    while (left[i] >= 0)
      i = static_cast<size_t>(x[feature[i]] <= threshold[i] ? left[i] : right[i]);
    return i;
  }
};

struct RandomForest {
  int num_classes = 0;
  int feature_dim = 0;
  std::vector<Tree> trees;

  // Mean of the leaf distributions reached in each tree; sums to 1.
  std::vector<double> predict_proba(std::span<const double> x) const;
  void predict_proba(std::span<const double> x, std::span<double> out) const;

  // argmax of predict_proba, ties broken toward the lowest class index.
  int predict(std::span<const double> x) const;

  bool operator==(const RandomForest&) const = default;
};

struct Sample {
  std::vector<double> features;
  int label = 0;
};

// CART training with Gini impurity, bootstrap per tree, and per-split feature
// subsampling. Deterministic for a fixed seed: samples are canonically
// ordered before training and each tree draws from its own seeded generator,
// so parallel and serial builds produce the same forest.
RandomForest train_forest(const std::vector<Sample>& samples, const ForestConfig& config);

int argmax_lowest(std::span<const double> v);

}  // namespace lap
