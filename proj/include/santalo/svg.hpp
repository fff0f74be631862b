#pragma once

#include <string>
#include <vector>

#include "santalo/diagram.hpp"

namespace santalo {

struct DiagramPlotOptions {
  /// Scatter points drawn beneath the boundary curves.
  std::vector<DiagramPoint> overlay;
  /// Segments per boundary curve polyline.
  int curve_segments = 1024;
};

/// Self-contained SVG of the diagram: boundary curves phi_plus / phi_minus,
/// the flat-triangle segment y = 0 on [1/8, 1/2], and the two linear bounds
/// y = 1 - 2x, y = 1 - 8x. Every curve element carries the plotted values in
/// a `data-points` attribute ("x0,y0 x1,y1 ..."), and the root element
/// records the affine data->pixel transform in data-* attributes.
std::string render_diagram_svg(const DiagramPlotOptions& options = {});

/// SVG of the slice cubic z -> h(z) at fixed abscissa x, with the admissible
/// z-intervals overlaid and the critical points marked. Same data-*
/// conventions as render_diagram_svg.
std::string render_slice_svg(double x);

}  // namespace santalo
