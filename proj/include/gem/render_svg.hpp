#pragma once

#include <string>

#include "gem/diagram_io.hpp"

namespace gem {

// Deterministic schematic rendering of a diagram: one row of labeled squares
// per bubble (side colors, corner vertex numbers, the removed disc marked
// with its tube line), curves as polylines — alpha red, beta green, gamma
// blue; selected solid, the rest dashed. Same input, same bytes.
std::string render_svg(const DiagramDoc& doc);

}  // namespace gem
