#pragma once

// Deterministic SVG output: petal diagrams as a daisy of chords and loops
// with height labels, multicrossing specs as a side-view strand schematic
// with arcs marking the virtual pairs.  Fixed decimal precision and stable
// element order make renders byte-identical for equal inputs.

#include <string>

#include "vmc/crossing.hpp"
#include "vmc/petal.hpp"

namespace vmc {

struct RenderOptions {
  double width = 1000.0;
  double height = 1000.0;
  double stroke_width = 2.0;
  double label_font_size = 24.0;
  bool legend = true;               // classical pairs listed in a legend line
  bool start_marker = true;         // dot on the petal before segment 1
  bool labels_at_both_ends = true;  // height rank at both chord ends
};

std::string render_petal_svg(const PetalDiagram& diagram, const RenderOptions& options = {});
std::string render_crossing_svg(const MulticrossingSpec& spec, const RenderOptions& options = {});

}  // namespace vmc
