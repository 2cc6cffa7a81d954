#pragma once

#include "qrlab/lattice.hpp"

#include <string>

namespace qrlab {

/// SVG 1.1 diagram of the rectangle: one circle per lattice point coloured
/// by side, the line qx = py, a ring on the C-fixed point when there is one,
/// and dashed links between same-side C-pairs. Output is byte-stable.
///
/// Layout: 24-unit grid, x to the right, y upward, 1-based axis labels.
std::string render_svg(const LatticeRect &rect, u64 cap = kDefaultEnumerationCap);

} // namespace qrlab
