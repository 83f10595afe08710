#pragma once

#include <span>
#include <string>

#include "quadrange/model.hpp"
#include "quadrange/range_geometry.hpp"

namespace quadrange {

/// Standalone SVG of a region: one <path> for its outline, markers for the
/// foci (disks) and for a and b, and optionally a sample overlay. The
/// imaginary axis points up; the view is fitted with a 10% margin.
std::string render_svg(const RegionDescriptor& region, const GQOParams& params,
                       std::span<const Complex> samples = {});

}  // namespace quadrange
