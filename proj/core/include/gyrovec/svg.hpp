#pragma once

#include "gyrovec/io.hpp"

#include <string>

namespace gyrovec::io {

/// Render a two-dimensional point set as a Klein-disk SVG: the boundary
/// circle, full chords through consecutive anchor pairs with their boundary
/// and midpoint marks, labeled anchors, and the weighted point / query point
/// when present. Output is byte-stable for a fixed input.
std::string render_klein_svg(const PointSetFile& file);

}  // namespace gyrovec::io
