#include "santalo/geometry.hpp"

#include <algorithm>
#include <cmath>
#include <string>

namespace santalo {
namespace {

std::string triple(double a, double b, double c) {
  return "(" + std::to_string(a) + ", " + std::to_string(b) + ", " +
         std::to_string(c) + ")";
}

}  // namespace

Triangle::Triangle(double a, double b, double c) : a_(a), b_(b), c_(c) {
  if (!(std::isfinite(a) && std::isfinite(b) && std::isfinite(c))) {
    throw std::domain_error("triangle sides must be finite: " + triple(a, b, c));
  }
  if (a < 0 || b < 0 || c < 0) {
    throw std::domain_error("triangle sides must be nonnegative: " +
                            triple(a, b, c));
  }
  const double p = a + b + c;
  if (p <= 0) {
    throw std::domain_error("triangle must have positive perimeter");
  }
  const double tol = kTriangleTol * p;
  if (b + c - a < -tol || c + a - b < -tol || a + b - c < -tol) {
    throw std::domain_error("triangle inequality violated: " + triple(a, b, c));
  }
}

double Triangle::area() const {
  const RaviParams r = sides_to_ravi(*this);
  const double radicand = r.x * r.y * r.z * (r.x + r.y + r.z);
  return std::sqrt(std::max(radicand, 0.0));
}

double Triangle::deficit() const {
  const double ab = a_ - b_;
  const double bc = b_ - c_;
  const double ca = c_ - a_;
  return ab * ab + bc * bc + ca * ca;
}

bool Triangle::is_degenerate() const {
  const RaviParams r = sides_to_ravi(*this);
  return r.x == 0 || r.y == 0 || r.z == 0;
}

bool Triangle::is_acute() const {
  if (is_degenerate()) {
    throw std::domain_error("acuteness is undefined for degenerate triangles");
  }
  // strictly acute <=> twice the largest squared side is below a^2+b^2+c^2
  const double longest = std::max({a_, b_, c_});
  return 2 * longest * longest < a_ * a_ + b_ * b_ + c_ * c_;
}

Triangle ravi_to_sides(const RaviParams& p) {
  if (!(p.x >= 0 && p.y >= 0 && p.z >= 0)) {
    throw std::domain_error("characterization parameters must be nonnegative");
  }
  if (p.x + p.y + p.z <= 0) {
    throw std::domain_error("characterization parameters must not all vanish");
  }
  return Triangle(p.y + p.z, p.z + p.x, p.x + p.y);
}

RaviParams sides_to_ravi(const Triangle& t) {
  // The constructor admits violations up to kTriangleTol * perimeter; clamp
  // that noise to the boundary of the parameter cone.
  RaviParams r;
  r.x = std::max(0.5 * (t.b() + t.c() - t.a()), 0.0);
  r.y = std::max(0.5 * (t.c() + t.a() - t.b()), 0.0);
  r.z = std::max(0.5 * (t.a() + t.b() - t.c()), 0.0);
  return r;
}

}  // namespace santalo
