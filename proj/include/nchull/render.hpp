#pragma once

#include "nchull/partition.hpp"
#include "nchull/trees.hpp"

#include <optional>
#include <string>

namespace nchull {

/// SVG of the realized configuration on a fixed 600x600 canvas. Block hulls
/// are shaded when a partition is given; tree edges drawn when a forest is
/// given. Coordinates are printed to 6 decimal places (display only).
std::string render_svg(const HullConfig& config,
                       const std::optional<Partition>& partition,
                       const std::optional<Forest>& forest);

} // namespace nchull
