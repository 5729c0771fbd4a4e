#pragma once

#include <optional>
#include <string>

#include "ramsey/coloring.hpp"

namespace ramsey {

// Deterministic SVG figure of a coloring: Red edges solid, Blue edges
// dashed, witness edges thickened, points as labelled circles. Stable text
// for a fixed input, so outputs can be golden-filed.
std::string render_svg(const ColoredKP& kp,
                       const std::optional<Embedding>& witness = std::nullopt);

}  // namespace ramsey
