#pragma once

#include <string>
#include <vector>

#include "stabber/core.hpp"

namespace stabber {

/// Standalone SVG 1.1: segments as lines, endpoints colored by the first
/// solution (red filled, blue hollow), every solution region shaded and
/// clipped to the instance bounding box grown by 10%.
std::string render_svg(const Instance& inst, const std::vector<Solution>& solutions);

}  // namespace stabber
