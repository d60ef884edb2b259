#pragma once

#include <string>

#include "harmtile/tiling.hpp"

namespace harmtile {

// Deterministic SVG: screen coordinates (y flipped), 32 px per unit, tile
// classes color-coded, dashed sides drawn with a dash pattern. Byte-for-byte
// stable for a fixed tiling.
std::string tiling_to_svg(const Tiling& t);

// Text rendering on a (2*width+1) x (2*height+1) character canvas; dashed
// sides use '.' and ':' instead of '-' and '|'.
std::string tiling_to_ascii(const Tiling& t);

}  // namespace harmtile
