#pragma once

#include <string>

#include "pingpong/realize.hpp"

namespace pingpong {

struct DiagramSummary {
  int arcs = 0;
  int gamma_edges = 0;
  std::vector<std::string> labels;  // arc labels in counterclockwise order
};

/// SVG drawing of the domain arcs on the circle, labelled D(s), with the
/// oriented graph of every generator drawn as chords between arc midpoints.
std::string render_svg(const Realization& r, DiagramSummary* summary = nullptr);

}  // namespace pingpong
