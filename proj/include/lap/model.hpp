#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>

#include "lap/bow.hpp"
#include "lap/forest.hpp"
#include "lap/pca.hpp"

namespace lap {

inline constexpr std::uint32_t kModelFormatVersion = 1;

// Serialized bundle of everything inference needs.
struct PipelineModel {
  RandomForest segmentation_forest;  // 2 classes, 7 features
  RandomForest stage1_forest;        // 2 classes, 20 features
  RandomForest stage2_forest;        // 5 classes, 30 + k features
  PcaModel pca;
  Vocabulary vocabulary;
  double beta = 0.6;                 // stage-1 discard threshold
  double background_threshold = 0.6;
  std::uint32_t format_version = kModelFormatVersion;

  bool operator==(const PipelineModel&) const = default;

  void validate() const;  // invariants: vocab dim == m_hat, 0 < beta < 1, forest shapes
};

// Binary schema: magic "LSC1", little-endian u32 version, u64 payload length,
// payload, u32 CRC32 of the payload. Forests are stored as node arrays
// (feature u32, threshold f64, left/right i32 with -1 = leaf, leaf class
// distribution f64 x num_classes). Two saves of one model are byte-identical.
std::uint64_t save_model(const PipelineModel& model, std::ostream& out);
PipelineModel load_model(std::istream& in);

void save_model_file(const PipelineModel& model, const std::string& path);
PipelineModel load_model_file(const std::string& path);

}  // namespace lap
