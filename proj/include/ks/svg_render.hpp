#pragma once

// Deterministic SVG figures for the JSON artifacts: fixed viewbox, stable
// element order, type-indexed palette.  Circles through infinity render as
// clipped lines.

#include <string>

#include "ks/json_io.hpp"

namespace ks {

struct StyleConfig {
  double view_half = 2.2;  // world coordinates [-v, v]^2
  int pixels = 800;
  double stroke = 1.5;
};

// artifact kinds: disk-family, limit-set, gap-system, cantor-approx, orbit
std::string render_svg(const json& artifact, const StyleConfig& style = {});

}  // namespace ks
