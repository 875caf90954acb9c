#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "stabber/core.hpp"

namespace stabber {

/// {"segments": [[[x1, y1], [x2, y2]], ...]}; coordinates are integers or "p/q" strings.
/// Throws Error(Parse) on malformed text, plus the Instance constructor's errors.
Instance parse_instance(std::string_view text);
std::string dump_instance(const Instance& inst);

/// Shape from its CLI words, e.g. ("quadrant", "br"). "3rect" is accepted for
/// "threerect"; rect takes an empty orientation or "none". Throws BadParameter.
Shape parse_shape(std::string_view type, std::string_view orientation);

/// Solutions of one shape, or of both halfplanes of an axis (then each
/// solution carries its own direction in its shape).
struct SolutionSet {
  Shape shape;
  std::optional<Axis> halfplane_axis;
  std::vector<Solution> solutions;
};

std::string dump_solutions(const SolutionSet& set);
/// Throws Error(Parse) or Error(MalformedSolution) when the file does not fit inst.
SolutionSet parse_solutions(std::string_view text, const Instance& inst);

}  // namespace stabber
