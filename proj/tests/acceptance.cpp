// Acceptance gate: every release-blocking behavior asserted in one binary.
// Prints one PASS/FAIL line per criterion and exits nonzero on any failure.
#include <chrono>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "santalo/cli.hpp"
#include "santalo/csv.hpp"
#include "santalo/diagram.hpp"
#include "santalo/geometry.hpp"
#include "santalo/inequalities.hpp"
#include "santalo/sampling.hpp"
#include "santalo/svg.hpp"

using namespace santalo;
using Clock = std::chrono::steady_clock;

namespace {

int failures = 0;

void report(int criterion, const char* name, bool ok, const std::string& detail) {
  std::printf("[%s] criterion %d: %s%s%s\n", ok ? "PASS" : "FAIL", criterion,
              name, detail.empty() ? "" : " -- ", detail.c_str());
  if (!ok) ++failures;
}

double seconds_since(Clock::time_point start) {
  return std::chrono::duration<double>(Clock::now() - start).count();
}

double uniform(std::mt19937_64& gen, double lo, double hi) {
  return lo + (hi - lo) * (static_cast<double>(gen() >> 11) * 0x1.0p-53);
}

// --- 1. brute-force z-grid extremization against the closed-form curves ----
void criterion_1() {
  const auto start = Clock::now();
  double worst = 0;
  bool ok = true;
  for (int k = 0; k < 50; ++k) {
    const double x = 0.5 * k / 49;
    const SliceBounds s = slice(x);
    double h_min = std::numeric_limits<double>::infinity();
    double h_max = -h_min;
    const double total_len = std::max(s.z_hi - std::min(s.z_lo, 0.0), 1e-12);
    for (const Interval& iv : s.z_intervals) {
      const long n =
          std::max<long>(1, std::lround(1e6 * (iv.hi - iv.lo) / total_len));
      for (long i = 0; i <= n; ++i) {
        const double z = iv.lo + (iv.hi - iv.lo) * i / n;
        const double h = cubic_h(z, x);
        h_min = std::min(h_min, h);
        h_max = std::max(h_max, h);
      }
    }
    const double scale = 3 * std::sqrt(3.0);
    const double y_max = scale * std::sqrt(std::max(h_max, 0.0));
    const double y_min = scale * std::sqrt(std::max(h_min, 0.0));
    worst = std::max(worst, std::abs(y_max - phi_plus(x)));
    if (x <= 0.125) {
      worst = std::max(worst, std::abs(y_min - phi_minus(x)));
    } else {
      worst = std::max(worst, y_min);
    }
  }
  const double elapsed = seconds_since(start);
  ok = worst <= 1e-6 && elapsed < 10.0;
  report(1, "boundary oracle equivalence", ok,
         "max |grid - closed form| = " + format_double(worst, 3) + ", " +
             format_double(elapsed, 3) + " s");
}

// --- 2. full inequality suite over seeded random triangles ----------------
void criterion_2() {
  const auto start = Clock::now();
  const SampleSet set = sample_random(100000, 20250817);
  std::size_t violations = 0;
  std::size_t acute_checked = 0;
  for (const SampleEntry& e : set.entries) {
    const InequalityReport rep = full_report(e.triangle);
    violations += rep.violations();
    if (rep.find("acute_reverse_fh")->applicable) ++acute_checked;
  }
  const double elapsed = seconds_since(start);
  const bool ok = violations == 0 && acute_checked > 0 && elapsed < 5.0;
  report(2, "inequality suite on 1e5 random triangles", ok,
         std::to_string(violations) + " violations, " +
             std::to_string(acute_checked) + " acute, " +
             format_double(elapsed, 3) + " s");
}

// --- 3. equality taxonomy --------------------------------------------------
void criterion_3() {
  bool ok = true;
  std::string detail;

  const auto expect_point = [&](const Triangle& t, double x, double y,
                                const char* label) {
    const DiagramPoint p = map_point(t);
    if (std::abs(p.x - x) > 1e-12 || std::abs(p.y - y) > 1e-12) {
      ok = false;
      detail += std::string(label) + " off-target; ";
    }
  };
  expect_point(Triangle(1, 1, 1), 0.0, 1.0, "equilateral");
  expect_point(Triangle(1, 1, 0), 0.5, 0.0, "needle");
  expect_point(Triangle(1, 0.5, 0.5), 0.125, 0.0, "flat isosceles");

  const auto expect_near = [&](const Triangle& t, const char* name,
                               const char* label) {
    const InequalityReport rep = full_report(t);
    const InequalityRecord* r = rep.find(name);
    if (!r || !r->applicable || !r->near_equality || !rep.all_hold()) {
      ok = false;
      detail += std::string(label) + " missing " + name + "; ";
    }
  };
  expect_near(Triangle(1, 1, 1), "finsler_hadwiger", "equilateral");
  expect_near(Triangle(1, 1, 1), "reverse_finsler_hadwiger", "equilateral");
  expect_near(Triangle(1, 1, 1), "weitzenbock", "equilateral");
  expect_near(Triangle(1, 1, 0), "finsler_hadwiger", "needle");
  expect_near(Triangle(1, 1, 0), "fh_perimeter", "needle");
  expect_near(Triangle(1, 0.5, 0.5), "reverse_finsler_hadwiger",
              "flat isosceles");
  expect_near(Triangle(1, 0.5, 0.5), "reverse_fh_perimeter", "flat isosceles");

  report(3, "equality taxonomy", ok, detail);
}

// --- 4. empirical sharp constants ------------------------------------------
void criterion_4() {
  const SharpConstants c = empirical_sharp_constants(10000);
  const bool ok = std::abs(c.c_min - 2.0) <= 1e-6 && std::abs(c.c_max - 8.0) <= 1e-6;
  report(4, "sharp constants 2 and 8", ok,
         "c_min = " + format_double(c.c_min, 12) +
             ", c_max = " + format_double(c.c_max, 12));
}

// --- 5. inversion round trip on a 50x50 grid -------------------------------
void criterion_5() {
  const auto start = Clock::now();
  std::size_t total = 0;
  std::size_t good = 0;
  double worst = 0;
  for (int i = 0; i < 50; ++i) {
    const double x = 0.5 * i / 49;
    const SliceBounds s = slice(x);
    const int rows = s.y_min == s.y_max ? 1 : 50;
    for (int j = 0; j < rows; ++j) {
      const double y = rows == 1
                           ? s.y_min
                           : s.y_min + (s.y_max - s.y_min) * j / 49;
      const DiagramPoint q = map_point(invert({x, y}));
      const double err = std::max(std::abs(q.x - x), std::abs(q.y - y));
      worst = std::max(worst, err);
      ++total;
      if (err <= 1e-9) ++good;
    }
  }
  const double elapsed = seconds_since(start);
  const bool ok = good == total && elapsed < 5.0;
  report(5, "50x50 round-trip inversion", ok,
         std::to_string(good) + "/" + std::to_string(total) +
             " within 1e-9, worst " + format_double(worst, 3) + ", " +
             format_double(elapsed, 3) + " s");
}

// --- 6. curved bounds dominate the linear ones ------------------------------
void criterion_6() {
  bool ok = true;
  std::string detail;
  const int n = 1000;

  for (int i = 0; i < n; ++i) {
    const double x = 0.5 * i / (n - 1);
    const double gap = (1 - 2 * x) - phi_plus(x);
    if (gap < -1e-9) {
      ok = false;
      detail += "upper dominance broken; ";
      break;
    }
    const bool boundary = i == 0 || i == n - 1;
    if (std::abs(gap) <= 1e-9 && !boundary) {
      ok = false;
      detail += "upper equality at interior x = " + format_double(x, 6) + "; ";
      break;
    }
    if (boundary && std::abs(gap) > 1e-9) {
      ok = false;
      detail += "upper bound not attained at x = " + format_double(x, 6) + "; ";
      break;
    }
  }
  for (int i = 0; i < n; ++i) {
    const double x = 0.125 * i / (n - 1);
    const double gap = phi_minus(x) - (1 - 8 * x);
    if (gap < -1e-9) {
      ok = false;
      detail += "lower dominance broken; ";
      break;
    }
    const bool boundary = i == 0 || i == n - 1;
    if (std::abs(gap) <= 1e-9 && !boundary) {
      ok = false;
      detail += "lower equality at interior x = " + format_double(x, 6) + "; ";
      break;
    }
    if (boundary && std::abs(gap) > 1e-9) {
      ok = false;
      detail += "lower bound not attained at x = " + format_double(x, 6) + "; ";
      break;
    }
  }
  report(6, "optimal bounds dominate linear bounds", ok, detail);
}

// --- 7. flat triangles occupy exactly the y = 0 edge ------------------------
void criterion_7() {
  bool ok = true;
  std::string detail;
  std::mt19937_64 gen(7);
  for (int i = 0; i < 100; ++i) {
    const double b = uniform(gen, 1e-3, 1.0);
    const double c = uniform(gen, 0.0, b);
    const DiagramPoint p = map_point(Triangle(b + c, b, c));
    if (p.y != 0.0 || p.x < 0.125 - 1e-12 || p.x > 0.5 + 1e-12) {
      ok = false;
      detail = "flat sample escaped the edge at x = " + format_double(p.x, 8);
      break;
    }
  }
  if (map_point(Triangle(1, 0.5, 0.5)).x != 0.125) {
    ok = false;
    detail += " 1/8 endpoint not exact;";
  }
  if (map_point(Triangle(1, 1, 0)).x != 0.5) {
    ok = false;
    detail += " 1/2 endpoint not exact;";
  }
  report(7, "flat triangles on the y = 0 edge", ok, detail);
}

// --- 8. figure reproduction + escape-free scatter ---------------------------
std::vector<DiagramPoint> parse_data_points(const std::string& svg,
                                            const std::string& cls,
                                            bool& found) {
  std::vector<DiagramPoint> pts;
  const std::string key = "class=\"" + cls + "\" data-points=\"";
  const std::size_t at = svg.find(key);
  if (at == std::string::npos) {
    found = false;
    return pts;
  }
  found = true;
  const std::size_t from = at + key.size();
  std::stringstream ss(svg.substr(from, svg.find('"', from) - from));
  std::string pair;
  while (ss >> pair) {
    const std::size_t comma = pair.find(',');
    pts.push_back({std::stod(pair.substr(0, comma)),
                   std::stod(pair.substr(comma + 1))});
  }
  return pts;
}

void criterion_8() {
  bool ok = true;
  std::string detail;

  // render through the CLI path, exactly as a user would
  const auto tmp = std::filesystem::temp_directory_path() / "santalo_accept.svg";
  cli::RunConfig cfg;
  cfg.subcommand = cli::Subcommand::plot;
  cfg.output = tmp.string();
  std::ostringstream null_out, null_err;
  if (cli::run(cfg, null_out, null_err) != cli::kExitOk) {
    report(8, "figure reproduction", false, "plot command failed");
    return;
  }
  std::ifstream f(tmp);
  std::stringstream buf;
  buf << f.rdbuf();
  const std::string svg = buf.str();

  bool found_upper = false;
  bool found_lower = false;
  const auto upper = parse_data_points(svg, "phi-plus", found_upper);
  const auto lower = parse_data_points(svg, "phi-minus", found_lower);
  if (!found_upper || !found_lower || upper.size() < 513 ||
      lower.size() < 513) {
    ok = false;
    detail += "boundary polylines missing or too coarse; ";
  }
  for (const DiagramPoint& p : upper) {
    if (p.y > 1 - 2 * p.x + 1e-9) {
      ok = false;
      detail += "phi_plus above the direct FH line; ";
      break;
    }
  }
  for (const DiagramPoint& p : lower) {
    if (p.y < 1 - 8 * p.x - 1e-9) {
      ok = false;
      detail += "phi_minus below the reverse FH line; ";
      break;
    }
  }

  const SampleSet samples = sample_random(1000000, 1);
  std::size_t escapees = 0;
  for (const SampleEntry& e : samples.entries) {
    if (!contains(e.point, 1e-9)) ++escapees;
  }
  if (escapees != 0) {
    ok = false;
    detail += std::to_string(escapees) + " overlay escapees; ";
  }
  report(8, "figure reproduction and 1e6-sample overlay", ok, detail);
}

// --- 9. monotone pattern of the slice cubic ---------------------------------
void criterion_9() {
  bool ok = true;
  std::string detail;
  std::mt19937_64 gen(9);
  for (int trial = 0; trial < 100 && ok; ++trial) {
    const double x = uniform(gen, 0.0, 0.5);
    const SliceBounds s = slice(x);
    const auto monotone = [&](double lo, double hi, bool increasing) {
      const int n = 512;
      for (int i = 0; i < n; ++i) {
        const double z0 = lo + (hi - lo) * i / n;
        const double z1 = lo + (hi - lo) * (i + 1) / n;
        const double d = cubic_h(z1, x) - cubic_h(z0, x);
        if (increasing ? d < -1e-15 : d > 1e-15) return false;
      }
      return true;
    };
    if (!monotone(s.z_lo, s.z_crit_1, true) ||
        !monotone(s.z_crit_1, s.z_crit_2, false) ||
        !monotone(s.z_crit_2, s.z_hi, true)) {
      ok = false;
      detail = "pattern violated at x = " + format_double(x, 8);
    }
  }
  report(9, "monotone pattern of the slice cubic", ok, detail);
}

}  // namespace

int main() {
  criterion_1();
  criterion_2();
  criterion_3();
  criterion_4();
  criterion_5();
  criterion_6();
  criterion_7();
  criterion_8();
  criterion_9();
  if (failures == 0) {
    std::printf("all acceptance criteria passed\n");
  } else {
    std::printf("%d criteria FAILED\n", failures);
  }
  return failures == 0 ? 0 : 1;
}
