#pragma once

#include <stdexcept>

namespace santalo {

// Relative tolerance for the weak triangle inequality. Flat triangles
// (b + c == a up to rounding) are valid inputs; violations within
// kTriangleTol * perimeter are treated as float noise and clamped.
inline constexpr double kTriangleTol = 1e-12;

/// Parameters of the characterization a = y+z, b = z+x, c = x+y with
/// x, y, z >= 0, which describes exactly the (possibly flat) triangles.
struct RaviParams {
  double x{0};
  double y{0};
  double z{0};
};

/// Side lengths of a possibly flat triangle: a, b, c >= 0, each side at most
/// the sum of the other two, positive perimeter.
class Triangle {
 public:
  Triangle(double a, double b, double c);  // throws std::domain_error

  double a() const { return a_; }
  double b() const { return b_; }
  double c() const { return c_; }

  double perimeter() const { return a_ + b_ + c_; }

  /// Heron's formula in the form sqrt(xyz(x+y+z)), which is exactly zero for
  /// flat triangles instead of suffering cancellation.
  double area() const;

  /// Isoperimetric deficit Q = (a-b)^2 + (b-c)^2 + (c-a)^2.
  double deficit() const;

  /// True when some side equals the sum of the other two (zero area).
  bool is_degenerate() const;

  /// Strictly acute test; throws std::domain_error for degenerate input.
  bool is_acute() const;

  Triangle scaled(double k) const { return Triangle(k * a_, k * b_, k * c_); }

 private:
  double a_, b_, c_;
};

Triangle ravi_to_sides(const RaviParams& p);
RaviParams sides_to_ravi(const Triangle& t);

}  // namespace santalo
