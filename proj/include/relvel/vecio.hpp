#pragma once

#include <optional>
#include <string>
#include <string_view>

#include "relvel/algebra3.hpp"

namespace relvel {

/// Parse "x,y,z" (real) or "x,y,z;ix,iy,iz" (complex). Whitespace around
/// components is ignored; non-finite components are rejected. Returns nullopt
/// on any malformed input.
std::optional<CVec3> parse_cvec3(std::string_view text);

/// Shortest decimal that round-trips to the same double.
std::string canonical(double value);

/// Canonical vector string: "x,y,z", with ";ix,iy,iz" appended only when an
/// imaginary part is nonzero. parse_cvec3(canonical(v)) reproduces v exactly.
std::string canonical(const CVec3& v);

/// Human-readable form with 9 significant digits: "(x, y, z)"; complex
/// components render as re+im*i pairs, e.g. "(0.5, 0.5, 0+0.25i)".
std::string pretty(const CVec3& v);
std::string pretty(CScalar s);
std::string pretty(double value);

}  // namespace relvel
