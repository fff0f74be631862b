#include "santalo/svg.hpp"

#include <algorithm>
#include <cmath>
#include <utility>

#include "santalo/csv.hpp"

namespace santalo {
namespace {

// Pixel mapping px = x_offset + x_scale * x, py = y_offset + y_scale * y
// (y_scale negative: SVG y grows downward). The transform is recorded on the
// root element so plotted values can be recovered from pixels, though every
// curve also carries its raw values in data-points.
struct Frame {
  double x_min, x_max, y_min, y_max;
  double left, top, width, height;

  double sx() const { return width / (x_max - x_min); }
  double sy() const { return -height / (y_max - y_min); }
  double ox() const { return left - x_min * sx(); }
  double oy() const { return top - y_max * sy(); }
  double px(double x) const { return ox() + sx() * x; }
  double py(double y) const { return oy() + sy() * y; }
};

std::string pix(double v) { return format_double(v, 8); }

// Metadata attributes use 15 digits (clean decimals for round constants);
// polyline data-points keep full 17-digit precision for exact assertions.
std::string meta(double v) { return format_double(v, 15); }

void open_svg(std::string& out, const Frame& f, double canvas_w,
              double canvas_h, const std::string& extra_attrs) {
  out += "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" + pix(canvas_w) +
         "\" height=\"" + pix(canvas_h) + "\" viewBox=\"0 0 " + pix(canvas_w) +
         " " + pix(canvas_h) + "\"";
  out += " data-x-min=\"" + meta(f.x_min) + "\" data-x-max=\"" +
         meta(f.x_max) + "\" data-y-min=\"" + meta(f.y_min) +
         "\" data-y-max=\"" + meta(f.y_max) + "\"";
  out += " data-x-scale=\"" + meta(f.sx()) + "\" data-x-offset=\"" +
         meta(f.ox()) + "\" data-y-scale=\"" + meta(f.sy()) +
         "\" data-y-offset=\"" + meta(f.oy()) + "\"";
  out += extra_attrs;
  out += ">\n";
  out += "<rect x=\"0\" y=\"0\" width=\"" + pix(canvas_w) + "\" height=\"" +
         pix(canvas_h) + "\" fill=\"white\"/>\n";
  out += "<rect x=\"" + pix(f.left) + "\" y=\"" + pix(f.top) + "\" width=\"" +
         pix(f.width) + "\" height=\"" + pix(f.height) +
         "\" fill=\"none\" stroke=\"#444444\" stroke-width=\"1\"/>\n";
}

void polyline(std::string& out, const Frame& f,
              const std::vector<DiagramPoint>& pts, const std::string& cls,
              const std::string& style) {
  out += "<polyline class=\"" + cls + "\" data-points=\"";
  for (std::size_t i = 0; i < pts.size(); ++i) {
    if (i) out += ' ';
    out += format_double(pts[i].x) + "," + format_double(pts[i].y);
  }
  out += "\" points=\"";
  for (std::size_t i = 0; i < pts.size(); ++i) {
    if (i) out += ' ';
    out += pix(f.px(pts[i].x)) + "," + pix(f.py(pts[i].y));
  }
  out += "\" fill=\"none\" " + style + "/>\n";
}

void text_label(std::string& out, double px, double py,
                const std::string& body, const std::string& anchor) {
  out += "<text x=\"" + pix(px) + "\" y=\"" + pix(py) +
         "\" font-family=\"sans-serif\" font-size=\"12\" fill=\"#333333\" "
         "text-anchor=\"" +
         anchor + "\">" + body + "</text>\n";
}

void x_tick(std::string& out, const Frame& f, double x) {
  const double px = f.px(x);
  const double base = f.top + f.height;
  out += "<line x1=\"" + pix(px) + "\" y1=\"" + pix(base) + "\" x2=\"" +
         pix(px) + "\" y2=\"" + pix(base + 5) +
         "\" stroke=\"#444444\" stroke-width=\"1\"/>\n";
  text_label(out, px, base + 18, format_double(x, 6), "middle");
}

void y_tick(std::string& out, const Frame& f, double y) {
  const double py = f.py(y);
  out += "<line x1=\"" + pix(f.left - 5) + "\" y1=\"" + pix(py) + "\" x2=\"" +
         pix(f.left) + "\" y2=\"" + pix(py) +
         "\" stroke=\"#444444\" stroke-width=\"1\"/>\n";
  text_label(out, f.left - 8, py + 4, format_double(y, 6), "end");
}

}  // namespace

std::string render_diagram_svg(const DiagramPlotOptions& options) {
  const double canvas_w = 860;
  const double canvas_h = 620;
  const Frame f{0.0, 0.55, -0.05, 1.05, 70, 24, canvas_w - 70 - 24,
                canvas_h - 24 - 56};

  std::string out;
  open_svg(out, f, canvas_w, canvas_h, "");

  for (double x : {0.0, 0.1, 0.2, 0.3, 0.4, 0.5}) x_tick(out, f, x);
  for (double y : {0.0, 0.2, 0.4, 0.6, 0.8, 1.0}) y_tick(out, f, y);
  text_label(out, f.left + 0.5 * f.width, canvas_h - 14, "X", "middle");
  text_label(out, 22, f.top + 0.5 * f.height, "Y", "middle");

  // scatter first so the boundary curves stay visible on top
  for (const DiagramPoint& p : options.overlay) {
    out += "<circle class=\"sample\" cx=\"" + pix(f.px(p.x)) + "\" cy=\"" +
           pix(f.py(p.y)) + "\" r=\"1.5\" fill=\"#7799cc\" fill-opacity=\"0.5\""
           " data-x=\"" + meta(p.x) + "\" data-y=\"" + meta(p.y) + "\"/>\n";
  }

  polyline(out, f, {{0, 1}, {0.5, 0}}, "fh-upper",
           "stroke=\"#888888\" stroke-width=\"1\" stroke-dasharray=\"6,4\"");
  polyline(out, f, {{0, 1}, {0.125, 0}}, "fh-lower",
           "stroke=\"#888888\" stroke-width=\"1\" stroke-dasharray=\"6,4\"");
  polyline(out, f, {{0.125, 0}, {0.5, 0}}, "flat-segment",
           "stroke=\"#bb4444\" stroke-width=\"2\"");

  const int n = std::max(options.curve_segments, 2);
  std::vector<DiagramPoint> upper(static_cast<std::size_t>(n) + 1);
  for (int i = 0; i <= n; ++i) {
    const double x = 0.5 * i / n;
    upper[static_cast<std::size_t>(i)] = {x, phi_plus(x)};
  }
  polyline(out, f, upper, "phi-plus",
           "stroke=\"#2255aa\" stroke-width=\"2\"");

  std::vector<DiagramPoint> lower(static_cast<std::size_t>(n) + 1);
  for (int i = 0; i <= n; ++i) {
    const double x = 0.125 * i / n;
    lower[static_cast<std::size_t>(i)] = {x, phi_minus(x)};
  }
  polyline(out, f, lower, "phi-minus",
           "stroke=\"#bb4444\" stroke-width=\"2\"");

  out += "</svg>\n";
  return out;
}

std::string render_slice_svg(double x) {
  const SliceBounds s = slice(x);

  double z_start = std::max(0.0, s.z_lo);
  double z_end = s.z_hi;
  if (z_end - z_start < 1e-6) {  // single-point slice: widen for visibility
    z_start -= 0.05;
    z_end += 0.05;
  }

  const int n = 512;
  std::vector<DiagramPoint> curve(n + 1);
  double h_min = 0;
  double h_max = 0;
  for (int i = 0; i <= n; ++i) {
    const double z = z_start + (z_end - z_start) * i / n;
    const double h = cubic_h(z, x);
    curve[static_cast<std::size_t>(i)] = {z, h};
    h_min = std::min(h_min, h);
    h_max = std::max(h_max, h);
  }
  const double pad = 0.08 * (h_max - h_min) + 1e-12;

  const double canvas_w = 720;
  const double canvas_h = 480;
  const Frame f{z_start, z_end, h_min - pad, h_max + pad, 84, 28,
                canvas_w - 84 - 24, canvas_h - 28 - 52};

  std::string out;
  open_svg(out, f, canvas_w, canvas_h, " data-slice-x=\"" + meta(x) + "\"");

  // zero line, the cubic, then the admissible intervals emphasized on top
  polyline(out, f, {{z_start, 0.0}, {z_end, 0.0}}, "zero-axis",
           "stroke=\"#999999\" stroke-width=\"1\"");
  polyline(out, f, curve, "h-curve", "stroke=\"#2255aa\" stroke-width=\"1.5\"");

  for (std::size_t k = 0; k < s.z_intervals.size(); ++k) {
    const Interval& iv = s.z_intervals[k];
    const std::string cls = "h-admissible-" + std::to_string(k + 1);
    if (iv.hi - iv.lo <= 0) {
      out += "<circle class=\"" + cls + "\" cx=\"" + pix(f.px(iv.lo)) +
             "\" cy=\"" + pix(f.py(cubic_h(iv.lo, x))) +
             "\" r=\"4\" fill=\"#bb4444\" data-x=\"" + meta(iv.lo) +
             "\" data-y=\"" + meta(cubic_h(iv.lo, x)) + "\"/>\n";
      continue;
    }
    const int m = 128;
    std::vector<DiagramPoint> seg(m + 1);
    for (int i = 0; i <= m; ++i) {
      const double z = iv.lo + (iv.hi - iv.lo) * i / m;
      seg[static_cast<std::size_t>(i)] = {z, cubic_h(z, x)};
    }
    polyline(out, f, seg, cls, "stroke=\"#bb4444\" stroke-width=\"3\"");
  }

  for (double zc : {s.z_crit_1, s.z_crit_2}) {
    out += "<line class=\"z-crit\" x1=\"" + pix(f.px(zc)) + "\" y1=\"" +
           pix(f.top) + "\" x2=\"" + pix(f.px(zc)) + "\" y2=\"" +
           pix(f.top + f.height) +
           "\" stroke=\"#888888\" stroke-width=\"1\" "
           "stroke-dasharray=\"4,4\" data-z=\"" +
           meta(zc) + "\"/>\n";
  }

  for (double zt : {z_start, 0.5 * (z_start + z_end), z_end}) {
    x_tick(out, f, zt);
  }
  for (double ht : {h_min, 0.0, h_max}) y_tick(out, f, ht);
  text_label(out, f.left + 0.5 * f.width, canvas_h - 14, "z", "middle");
  text_label(out, 24, f.top + 0.5 * f.height, "h(z)", "middle");
  text_label(out, f.left + 0.5 * f.width, 18,
             "slice at X = " + format_double(x, 15), "middle");

  out += "</svg>\n";
  return out;
}

}  // namespace santalo
