#pragma once

#include <array>
#include <string>
#include <vector>

#include "irs/types.hpp"

namespace irs {

struct PentagonSeries {
  std::string label;
  RadiiVector radii;  // slot order
  std::string color;  // any SVG color
};

// Standalone SVG with one closed polygon per series. Vertices sit at angles
// 90 + k*72 degrees; axis_labels name the pentagon slots.
std::string render_pentagon_svg(const std::vector<PentagonSeries>& series,
                                const std::array<std::string, 5>& axis_labels);

}  // namespace irs
