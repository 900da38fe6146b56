#pragma once

#include <string>

#include "polycat/freecat.hpp"

namespace polycat {

/// Layout constants, in SVG user units.
inline constexpr int kWirePitch = 40;
inline constexpr int kLayerHeight = 60;
inline constexpr int kMargin = 30;
inline constexpr int kNodeRadius = 12;

/// String diagram of a 2-cell, source at the bottom. Coordinates are
/// integers, so equal diagrams render to identical bytes. Boundary wires
/// carry class "source" and "target" labels; generators are circles of
/// class "node".
std::string render_svg(const FreeCategory& c, const Diagram& d);

std::string xml_escape(const std::string& text);

}  // namespace polycat
