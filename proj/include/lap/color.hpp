#pragma once

#include "lap/image.hpp"

namespace lap {

struct Hsv {
  double h = 0;  // [0, 360), 0 for achromatic pixels
  double s = 0;  // [0, 1]
  double v = 0;  // [0, 1]
};

Hsv rgb_to_hsv(const Rgb& p);

// CIE LAB via sRGB -> XYZ (D65). Returns (L, A, B); neutral grays give A = B = 0.
struct Lab {
  double l = 0;
  double a = 0;
  double b = 0;
};

Lab rgb_to_lab(const Rgb& p);

// Opponent axes o1 = (R-G)/sqrt(2), o2 = (R+G-2B)/sqrt(6) on 8-bit values.
struct Opponent {
  double o1 = 0;
  double o2 = 0;
};

Opponent rgb_to_opponent(const Rgb& p);

// Extremes of the opponent axes for 8-bit input, used to map them onto [0,1]
// with the neutral axis at exactly 0.5.
inline constexpr double kOpponent1Max = 255.0 / 1.4142135623730951;
inline constexpr double kOpponent2Max = 510.0 / 2.449489742783178;

}  // namespace lap
