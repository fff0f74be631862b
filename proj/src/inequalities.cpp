#include "santalo/inequalities.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <stdexcept>

#include "santalo/diagram.hpp"

namespace santalo {
namespace {

constexpr double kRelTol = 1e-9;

// slack >= 0 means the inequality holds; judged relative to the larger side
// (floored at 1 so homogeneous near-zero cases stay meaningful).
InequalityRecord finish(std::string name, double lhs, double rhs,
                        double slack) {
  InequalityRecord r;
  r.name = std::move(name);
  r.lhs = lhs;
  r.rhs = rhs;
  r.slack = slack;
  const double scale = std::max({std::abs(lhs), std::abs(rhs), 1.0});
  r.holds = slack >= -kRelTol * scale;
  r.near_equality = std::abs(slack) <= kRelTol * scale;
  return r;
}

InequalityRecord check_ge(std::string name, double lhs, double rhs) {
  return finish(std::move(name), lhs, rhs, lhs - rhs);
}

InequalityRecord check_le(std::string name, double lhs, double rhs) {
  return finish(std::move(name), lhs, rhs, rhs - lhs);
}

InequalityRecord not_applicable(std::string name, double lhs, double rhs) {
  InequalityRecord r;
  r.name = std::move(name);
  r.lhs = lhs;
  r.rhs = rhs;
  r.slack = 0;
  r.applicable = false;
  r.holds = true;
  r.near_equality = false;
  return r;
}

double sum_of_squares(const Triangle& t) {
  return t.a() * t.a() + t.b() * t.b() + t.c() * t.c();
}

}  // namespace

bool InequalityReport::all_hold() const {
  return std::all_of(records.begin(), records.end(), [](const auto& r) {
    return !r.applicable || r.holds;
  });
}

std::size_t InequalityReport::violations() const {
  return static_cast<std::size_t>(
      std::count_if(records.begin(), records.end(), [](const auto& r) {
        return r.applicable && !r.holds;
      }));
}

const InequalityRecord* InequalityReport::find(const std::string& name) const {
  const auto it = std::find_if(records.begin(), records.end(),
                               [&](const auto& r) { return r.name == name; });
  return it == records.end() ? nullptr : &*it;
}

InequalityRecord check_weitzenbock(const Triangle& t) {
  return check_ge("weitzenbock", sum_of_squares(t),
                  4 * std::numbers::sqrt3 * t.area());
}

InequalityRecord check_finsler_hadwiger(const Triangle& t) {
  return check_ge("finsler_hadwiger", sum_of_squares(t),
                  t.deficit() + 4 * std::numbers::sqrt3 * t.area());
}

InequalityRecord check_reverse_finsler_hadwiger(const Triangle& t) {
  return check_le("reverse_finsler_hadwiger", sum_of_squares(t),
                  3 * t.deficit() + 4 * std::numbers::sqrt3 * t.area());
}

std::vector<InequalityRecord> check_perimeter_forms(const Triangle& t) {
  const double p2 = t.perimeter() * t.perimeter();
  const double area_term = 12 * std::numbers::sqrt3 * t.area();
  return {
      check_ge("fh_perimeter", p2, 2 * t.deficit() + area_term),
      check_le("reverse_fh_perimeter", p2, 8 * t.deficit() + area_term),
  };
}

std::vector<InequalityRecord> check_optimal_bounds(const Triangle& t) {
  const double p = t.perimeter();
  const double p2 = p * p;
  const double q = t.deficit();
  const double lhs = 432 * t.area() * t.area();
  const double common = p2 * p2 - 6 * q * p2;
  const double tail = 4 * std::numbers::sqrt2 * std::pow(q, 1.5) * p;

  std::vector<InequalityRecord> out;
  out.push_back(check_le("optimal_area_upper", lhs, common + tail));
  // the lower bound is sharp only while the deficit stays below p^2 / 8
  if (q <= 0.125 * p2) {
    out.push_back(check_ge("optimal_area_lower", lhs, common - tail));
  } else {
    out.push_back(not_applicable("optimal_area_lower", lhs, common - tail));
  }
  return out;
}

InequalityRecord check_acute_refinement(const Triangle& t) {
  const double rhs = 0.5 * (6 - std::sqrt(6.0)) * t.deficit() +
                     4 * std::numbers::sqrt3 * t.area();
  const double lhs = sum_of_squares(t);
  if (t.is_degenerate() || !t.is_acute()) {
    return not_applicable("acute_reverse_fh", lhs, rhs);
  }
  return check_le("acute_reverse_fh", lhs, rhs);
}

InequalityReport full_report(const Triangle& t) {
  InequalityReport report;
  report.records.push_back(check_weitzenbock(t));
  report.records.push_back(check_finsler_hadwiger(t));
  report.records.push_back(check_reverse_finsler_hadwiger(t));
  for (auto& r : check_perimeter_forms(t)) report.records.push_back(std::move(r));
  for (auto& r : check_optimal_bounds(t)) report.records.push_back(std::move(r));
  report.records.push_back(check_acute_refinement(t));
  const DiagramPoint pt = map_point(t);
  report.records.push_back(check_le("linear_xy_upper", pt.y, 1 - 2 * pt.x));
  report.records.push_back(check_ge("linear_xy_lower", pt.y, 1 - 8 * pt.x));
  return report;
}

SharpConstants empirical_sharp_constants(std::size_t n) {
  if (n < 10) {
    throw std::invalid_argument(
        "empirical_sharp_constants needs at least 10 grid points");
  }
  // Grids run per boundary piece so the sharp abscissas 1/8 and 1/2 land on
  // grid nodes exactly; abscissas below 1e-9 are excluded (the ratio
  // degenerates to 0/0 at the equilateral corner).
  constexpr double kCutoff = 1e-9;
  const double steps = static_cast<double>(n - 1);
  SharpConstants c{std::numeric_limits<double>::infinity(),
                   -std::numeric_limits<double>::infinity()};
  for (std::size_t i = 0; i < n; ++i) {
    const double x = 0.5 * static_cast<double>(i) / steps;
    if (x < kCutoff) continue;
    c.c_min = std::min(c.c_min, (1 - phi_plus(x)) / x);
  }
  for (std::size_t i = 0; i < n; ++i) {
    const double x = 0.125 * static_cast<double>(i) / steps;
    if (x < kCutoff) continue;
    c.c_max = std::max(c.c_max, (1 - phi_minus(x)) / x);
  }
  for (std::size_t i = 0; i < n; ++i) {
    // flat edge: the lower boundary is y = 0, so the ratio is just 1/x
    const double x = 0.125 + 0.375 * static_cast<double>(i) / steps;
    c.c_max = std::max(c.c_max, 1 / x);
  }
  return c;
}

}  // namespace santalo
