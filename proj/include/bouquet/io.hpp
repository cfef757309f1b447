#pragma once

#include <string>
#include <string_view>

#include "bouquet/curvesys.hpp"
#include "bouquet/word.hpp"

namespace bouquet {

/// Reads the JSON curve-system format. A plain file carries the Gauss code
/// only; systems that went through moves may also carry a "scaffold" object
/// holding the full map. Throws ParseError for malformed text and
/// InvalidSystem for structural violations.
CurveSystem parse_system(std::string_view text);

/// Deterministic serialization; parse_system(serialize_system(s)) rebuilds s
/// and serializing again gives the same bytes.
std::string serialize_system(const CurveSystem& s);

/// Gauss code as JSON text (no scaffold).
std::string serialize_gauss(const GaussCode& code);
GaussCode parse_gauss(std::string_view text);

}  // namespace bouquet
