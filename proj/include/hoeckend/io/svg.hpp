#pragma once

#include <string>

#include "hoeckend/sweep.hpp"

namespace hoeckend::io {

struct HeatmapSpec {
  std::string title;
  int x_column;      // table column along the horizontal axis
  int y_column;      // table column along the vertical axis
  int value_column;
};

/// Minimal standalone SVG heatmap with axes and a colour legend. The table
/// must be a full two-variable grid.
std::string heatmap_svg(const Table& table, const HeatmapSpec& spec, const std::string& config_hash);

}  // namespace hoeckend::io
