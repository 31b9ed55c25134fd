#pragma once

#include <iosfwd>
#include <string>

#include "toricode/lattice.hpp"

namespace toricode {

// Text format: one "x y" vertex per line, '#' starts a comment, blank lines
// ignored. Throws ParseError.
LatticePolygon parse_polygon_text(std::istream& in);

// JSON format: an array of [x, y] pairs.
LatticePolygon parse_polygon_json(const std::string& text);

// Reads either format; content starting with '[' is treated as JSON.
LatticePolygon load_polygon_file(const std::string& path);

}  // namespace toricode
