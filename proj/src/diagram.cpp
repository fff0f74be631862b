#include "santalo/diagram.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <string>

namespace santalo {
namespace {

constexpr double kRadicandTol = 1e-14;
constexpr double kBisectWidth = 1e-14;
constexpr int kBisectMaxIter = 200;
constexpr double kBracketTol = 1e-12;

// Radicands here are nonnegative by construction; tiny negative values are
// rounding noise, anything worse is a bug.
double clamp_radicand(double r) {
  if (r >= 0) return r;
  if (r >= -kRadicandTol) return 0;
  throw std::logic_error("radicand " + std::to_string(r) +
                         " is negative beyond rounding tolerance");
}

void require_abscissa(double x, double hi, const char* what) {
  if (!(x >= 0 && x <= hi)) {
    throw std::domain_error(std::string(what) + ": abscissa " +
                            std::to_string(x) + " outside [0, " +
                            std::to_string(hi) + "]");
  }
}

// d/dz of cubic_h.
double cubic_h_prime(double z, double x) {
  return (3 * z - 2) * z + (1 - 2 * x) / 3;
}

// Monotone pieces of the slice cubic inside the admissible intervals,
// ascending in z: the critical points z_crit_1 < z_crit_2 split them.
std::vector<Interval> monotone_pieces(const SliceBounds& s) {
  std::vector<Interval> pieces;
  for (const Interval& iv : s.z_intervals) {
    double lo = iv.lo;
    for (double cut : {s.z_crit_1, s.z_crit_2}) {
      if (cut > lo && cut < iv.hi) {
        pieces.push_back({lo, cut});
        lo = cut;
      }
    }
    pieces.push_back({lo, iv.hi});
  }
  return pieces;
}

// Solves cubic_h(z, x) == target on one monotone piece by bisection, then a
// few guarded Newton steps. Bisection alone leaves an O(1e-14) error in z,
// which the square root in y -> sqrt(27 h) magnifies unacceptably near the
// flat edge; Newton collapses it to rounding level while staying inside the
// piece, keeping the whole procedure deterministic.
double solve_on_piece(const Interval& piece, double x, double target) {
  double lo = piece.lo;
  double hi = piece.hi;
  const double h_lo = cubic_h(lo, x);
  const double h_hi = cubic_h(hi, x);
  if (h_lo == target) return lo;
  if (h_hi == target) return hi;

  const bool increasing = h_hi >= h_lo;
  int iter = 0;
  while (hi - lo > kBisectWidth) {
    if (++iter > kBisectMaxIter) {
      throw ConvergenceError("slice cubic bisection exceeded iteration cap");
    }
    const double mid = 0.5 * (lo + hi);
    const bool root_left = increasing ? cubic_h(mid, x) >= target
                                      : cubic_h(mid, x) <= target;
    (root_left ? hi : lo) = mid;
  }

  double z = 0.5 * (lo + hi);
  for (int i = 0; i < 4; ++i) {
    const double df = cubic_h_prime(z, x);
    if (df == 0) break;
    const double next = z - (cubic_h(z, x) - target) / df;
    if (!(next >= piece.lo && next <= piece.hi)) break;
    z = next;
  }
  return z;
}

std::string point_string(const DiagramPoint& p) {
  return "(" + std::to_string(p.x) + ", " + std::to_string(p.y) + ")";
}

}  // namespace

DiagramPoint map_point(const Triangle& t) {
  const double p2 = t.perimeter() * t.perimeter();
  return {t.deficit() / p2, 12 * std::numbers::sqrt3 * t.area() / p2};
}

// Both boundary curves come from the radicand 1 - 6x -+ 4*sqrt(2)*x^(3/2),
// which factors over u = sqrt(2x) as (1 +- u)^2 (1 -+ 2u). The factored form
// is exact at the endpoints where the radicand vanishes.
double phi_minus(double x) {
  require_abscissa(x, 0.125, "phi_minus");
  const double u = std::sqrt(2 * x);
  return (1 + u) * std::sqrt(clamp_radicand(1 - 2 * u));
}

double phi_plus(double x) {
  require_abscissa(x, 0.5, "phi_plus");
  const double u = std::sqrt(2 * x);
  return std::abs(1 - u) * std::sqrt(1 + 2 * u);
}

double cubic_h(double z, double x) {
  return ((z - 1) * z + (1 - 2 * x) / 3) * z;
}

SliceBounds slice(double x) {
  require_abscissa(x, 0.5, "slice");
  SliceBounds s;
  s.x = x;
  const double u = std::sqrt(2 * x);
  s.z_lo = (1 - 2 * u) / 3;
  s.z_hi = (1 + 2 * u) / 3;
  s.z_crit_1 = (1 - u) / 3;
  s.z_crit_2 = (1 + u) / 3;
  s.y_max = phi_plus(x);
  if (x <= 0.125) {
    s.y_min = phi_minus(x);
    s.z_intervals = {{s.z_lo, s.z_hi}};
  } else {
    // the band where two parameters would go complex is excluded, and flat
    // triangles (z at an interval end touching h == 0) bring the minimum to 0
    s.y_min = 0;
    const double r = std::sqrt(clamp_radicand((8 * x - 1) / 3));
    s.z_intervals = {{0, 0.5 * (1 - r)}, {0.5 * (1 + r), s.z_hi}};
  }
  return s;
}

bool contains(const DiagramPoint& p, double tol) {
  if (!(tol >= 0)) {
    throw std::invalid_argument("containment tolerance must be nonnegative");
  }
  if (!(p.x >= -tol && p.x <= 0.5 + tol)) return false;
  if (!std::isfinite(p.y)) return false;
  const SliceBounds s = slice(std::clamp(p.x, 0.0, 0.5));
  return p.y >= s.y_min - tol && p.y <= s.y_max + tol;
}

Triangle invert(const DiagramPoint& p, double tol) {
  if (!contains(p, tol)) {
    throw NotInDiagramError("point " + point_string(p) +
                            " is not in the diagram");
  }
  const double x = std::clamp(p.x, 0.0, 0.5);
  const SliceBounds s = slice(x);
  const double y = std::clamp(p.y, s.y_min, s.y_max);
  const double target = y * y / 27;

  // First monotone piece whose value bracket contains the target; pieces are
  // ascending in z, so this realizes the smallest-z solution.
  double z = -1;
  for (const Interval& piece : monotone_pieces(s)) {
    const double h_lo = cubic_h(piece.lo, x);
    const double h_hi = cubic_h(piece.hi, x);
    const double lo_val = std::min(h_lo, h_hi);
    const double hi_val = std::max(h_lo, h_hi);
    if (target < lo_val - kBracketTol || target > hi_val + kBracketTol) {
      continue;
    }
    z = solve_on_piece(piece, x, std::clamp(target, lo_val, hi_val));
    break;
  }
  if (z < 0) {
    throw NotInDiagramError("no admissible parameter realizes " +
                            point_string(p));
  }

  // z determines the other two normalized parameters through their sum 1-z
  // and product (1-2x)/3 - z(1-z). Their quadratic discriminant factors as
  // 3(z - z_lo)(z_hi - z), which avoids the cancellation of the expanded
  // form and is exactly zero at the corner configurations.
  const double w = 1 - z;
  const double d = std::sqrt(3 * std::max(z - s.z_lo, 0.0) *
                             std::max(s.z_hi - z, 0.0));
  const double big = 0.5 * (w + d);
  const double small = std::max(0.5 * (w - d), 0.0);

  double sides[3] = {0.5 * (small + z), 0.5 * (z + big), 0.5 * (big + small)};
  std::sort(std::begin(sides), std::end(sides), std::greater<>());
  return Triangle(sides[0], sides[1], sides[2]);
}

}  // namespace santalo
