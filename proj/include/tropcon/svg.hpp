#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "tropcon/plane_geometry.hpp"

namespace tropcon {

struct PlotBox {
  double xmin = -1, ymin = -1, xmax = 1, ymax = 1;
};

struct PlotScene {
  std::vector<std::pair<std::string, TropLine>> lines;
  std::vector<std::pair<std::string, TropPoint>> points;
};

/// Box around every line vertex and point with a 20% margin on each side.
PlotBox auto_fit(const PlotScene& scene);

/// SVG 1.1 drawing: each line as its vertex plus three rays clipped to the
/// box, each point as a marker. Exact data is rounded only when formatted.
std::string render_svg(const PlotScene& scene, const std::optional<PlotBox>& box = std::nullopt);

}  // namespace tropcon
