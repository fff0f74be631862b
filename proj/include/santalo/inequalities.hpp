#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "santalo/geometry.hpp"

namespace santalo {

/// One evaluated inequality. `slack` is oriented so that slack >= 0 means the
/// inequality holds; holds/near_equality are judged at 1e-9 relative to
/// max(|lhs|, |rhs|, 1).
struct InequalityRecord {
  std::string name;
  double lhs{0};
  double rhs{0};
  double slack{0};
  bool applicable{true};
  bool holds{true};
  bool near_equality{false};
};

struct InequalityReport {
  std::vector<InequalityRecord> records;

  bool all_hold() const;
  std::size_t violations() const;
  const InequalityRecord* find(const std::string& name) const;
};

/// a^2 + b^2 + c^2 >= 4*sqrt(3)*S.
InequalityRecord check_weitzenbock(const Triangle& t);

/// a^2 + b^2 + c^2 >= Q + 4*sqrt(3)*S.
InequalityRecord check_finsler_hadwiger(const Triangle& t);

/// a^2 + b^2 + c^2 <= 3*Q + 4*sqrt(3)*S.
InequalityRecord check_reverse_finsler_hadwiger(const Triangle& t);

/// Perimeter forms: p^2 >= 2*Q + 12*sqrt(3)*S and p^2 <= 8*Q + 12*sqrt(3)*S.
std::vector<InequalityRecord> check_perimeter_forms(const Triangle& t);

/// Sharp bounds on 432*S^2 by p^4 - 6*Q*p^2 +- 4*sqrt(2)*Q^(3/2)*p; the lower
/// bound applies only when Q <= p^2 / 8.
std::vector<InequalityRecord> check_optimal_bounds(const Triangle& t);

/// a^2 + b^2 + c^2 <= ((6 - sqrt(6))/2)*Q + 4*sqrt(3)*S for acute triangles;
/// marked not applicable otherwise.
InequalityRecord check_acute_refinement(const Triangle& t);

/// All checks above plus the linear diagram bounds y <= 1 - 2x and
/// y >= 1 - 8x.
InequalityReport full_report(const Triangle& t);

struct SharpConstants {
  double c_min{0};
  double c_max{0};
};

/// Best constants in 1 - c*x bounds for the diagram: minimizes (1 - phi_plus)/x
/// over the upper boundary and maximizes (1 - y_lower)/x over the lower one,
/// on grids of n points per boundary piece (x below 1e-9 excluded).
/// Converges to (2, 8).
SharpConstants empirical_sharp_constants(std::size_t n);

}  // namespace santalo
