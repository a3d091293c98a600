#pragma once

#include <string>

#include "lap/types.hpp"

namespace lap {

// Loads <root>/<surgery>/frames/<frame>.png with sibling masks/ (8-bit gray,
// 0 background / 255 instrument) and boxes/ ({"boxes":[{x,y,w,h,label}]}).
// Surgeries and frames come back sorted by id, so enumeration order does not
// matter. Throws MissingAnnotation, DimensionMismatch, UnknownLabelString.
Dataset load_dataset(const std::string& root);

}  // namespace lap
