#pragma once

#include <algorithm>
#include <optional>
#include <string>
#include <vector>

#include "lap/image.hpp"

namespace lap {

// Label alphabet. Indices 0..4 are the classifier classes; Unknown is legal
// in annotations only and never comes out of a classifier.
enum class ToolClass : int {
  NoInstrument = 0,
  LigaSure = 1,
  AtraumaticGrasper = 2,
  Aspirator = 3,
  ClipApplier = 4,
  Unknown = 5,
};

inline constexpr int kNumToolClasses = 5;  // classifier classes, excludes Unknown

std::string to_label(ToolClass c);
ToolClass parse_label(const std::string& s);  // throws UnknownLabelString

struct Frame {
  std::string surgery_id;
  std::string frame_id;
  ImageRgb image;

  int width() const { return image.width; }
  int height() const { return image.height; }

  void validate() const;  // width/height >= 16
};

struct BoundingBox {
  int x = 0;
  int y = 0;
  int w = 0;
  int h = 0;

  long long area() const { return static_cast<long long>(w) * h; }
  int right() const { return x + w; }    // exclusive
  int bottom() const { return y + h; }   // exclusive

  bool operator==(const BoundingBox&) const = default;

  // Intersection area with another box.
  long long intersection_area(const BoundingBox& o) const {
    int ix = std::max(x, o.x);
    int iy = std::max(y, o.y);
    int ir = std::min(right(), o.right());
    int ib = std::min(bottom(), o.bottom());
    if (ir <= ix || ib <= iy) return 0;
    return static_cast<long long>(ir - ix) * (ib - iy);
  }

  // Clip to a w x h frame; may produce an empty box.
  BoundingBox clipped(int fw, int fh) const {
    int nx = std::clamp(x, 0, fw);
    int ny = std::clamp(y, 0, fh);
    int nr = std::clamp(right(), 0, fw);
    int nb = std::clamp(bottom(), 0, fh);
    return {nx, ny, std::max(0, nr - nx), std::max(0, nb - ny)};
  }
};

struct LabeledBox {
  BoundingBox box;
  ToolClass label = ToolClass::NoInstrument;
};

// One frame together with whatever annotation the dataset provides. A frame
// may carry a pixel mask, labeled boxes, or both.
struct AnnotatedFrame {
  Frame frame;
  std::optional<ImageBool> pixel_mask;               // 1 = instrument
  std::optional<std::vector<LabeledBox>> boxes;
};

struct Surgery {
  std::string id;
  std::vector<AnnotatedFrame> frames;
};

struct Dataset {
  std::vector<Surgery> surgeries;

  size_t frame_count() const {
    size_t n = 0;
    for (const auto& s : surgeries) n += s.frames.size();
    return n;
  }
};

}  // namespace lap
