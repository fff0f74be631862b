#pragma once

#include <stdexcept>
#include <vector>

#include "santalo/geometry.hpp"

namespace santalo {

/// Scale-invariant coordinates of a triangle:
///   x = Q / p^2,  y = 12*sqrt(3)*S / p^2
/// with p the perimeter, S the area and Q the isoperimetric deficit.
/// The attainable set is { 0 <= x <= 1/2, phi_lower(x) <= y <= phi_plus(x) }.
struct DiagramPoint {
  double x{0};
  double y{0};
};

struct Interval {
  double lo{0};
  double hi{0};
};

/// Vertical extent of the diagram above a fixed abscissa, together with the
/// admissible range of the normalized coordinate z (perimeter scaled to
/// x + y + z = 1, z any of the three coordinates).
struct SliceBounds {
  double x{0};
  double y_min{0};
  double y_max{0};
  /// One interval for x <= 1/8, two (a middle band is excluded) otherwise.
  std::vector<Interval> z_intervals;
  double z_lo{0};      ///< smaller root of the z-discriminant, (1 - 2*sqrt(2x))/3
  double z_hi{0};      ///< larger root, (1 + 2*sqrt(2x))/3
  double z_crit_1{0};  ///< local max of the slice cubic, (1 - sqrt(2x))/3
  double z_crit_2{0};  ///< local min, (1 + sqrt(2x))/3
};

class NotInDiagramError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

class ConvergenceError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

DiagramPoint map_point(const Triangle& t);

/// Lower boundary curve on [0, 1/8]; equals sqrt(1 - 6x - 4*sqrt(2)*x^(3/2)),
/// evaluated in factored form so it vanishes exactly at x = 1/8.
double phi_minus(double x);

/// Upper boundary curve on [0, 1/2]; equals sqrt(1 - 6x + 4*sqrt(2)*x^(3/2)),
/// evaluated in factored form so it vanishes exactly at x = 1/2.
double phi_plus(double x);

/// Product of the normalized coordinates as a cubic in z:
///   h(z) = z^3 - z^2 + ((1 - 2x)/3) z,  so that y = 3*sqrt(3)*sqrt(h(z)).
double cubic_h(double z, double x);

SliceBounds slice(double x);

bool contains(const DiagramPoint& p, double tol = 1e-9);

/// Reconstructs a perimeter-1 witness triangle (sides sorted descending)
/// whose image is p, bisecting the slice cubic on its monotone pieces and
/// taking the solution with the smallest z. Throws NotInDiagramError when
/// contains(p, tol) fails and ConvergenceError if bisection stalls.
Triangle invert(const DiagramPoint& p, double tol = 1e-9);

}  // namespace santalo
