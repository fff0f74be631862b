#include "santalo/cli.hpp"

#include <cmath>
#include <fstream>
#include <ostream>
#include <sstream>
#include <vector>

#include "santalo/csv.hpp"
#include "santalo/diagram.hpp"
#include "santalo/inequalities.hpp"
#include "santalo/sampling.hpp"
#include "santalo/svg.hpp"

namespace santalo::cli {
namespace {

std::string g15(double v) { return format_double(v, 15); }

// Payloads are assembled in memory and written in one shot; outputs are small
// (the largest, a 10^6-row CSV, is ~100 MB, well within scope for this tool).
int deliver(const RunConfig& cfg, std::ostream& out, std::ostream& err,
            const std::string& payload) {
  if (cfg.output.empty()) {
    out << payload;
    return kExitOk;
  }
  std::ofstream file(cfg.output, std::ios::binary);
  if (!file) {
    err << "cannot open output file: " << cfg.output << "\n";
    return kExitIo;
  }
  file << payload;
  file.flush();
  if (!file.good()) {
    err << "write failed: " << cfg.output << "\n";
    return kExitIo;
  }
  return kExitOk;
}

OutputFormat format_or(const RunConfig& cfg, OutputFormat fallback) {
  return cfg.format.value_or(fallback);
}

std::vector<CsvRow> load_rows(const std::string& path) {
  std::ifstream file(path);
  if (!file) {
    throw ParseError("cannot open input file: " + path);
  }
  return read_triangles_csv(file);
}

std::string bool_str(bool v) { return v ? "true" : "false"; }

}  // namespace

int cmd_sample(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
  if (cfg.random && cfg.grid) {
    err << "sample: choose exactly one of --random or --grid\n";
    return kExitUsage;
  }
  const OutputFormat fmt = format_or(cfg, OutputFormat::csv);
  if (fmt == OutputFormat::text) {
    err << "sample: supported formats are csv and svg\n";
    return kExitUsage;
  }

  SampleSet set;
  if (cfg.grid) {
    if (cfg.nx < 2 || cfg.ny < 1) {
      err << "sample: --grid needs --nx >= 2 and --ny >= 1\n";
      return kExitUsage;
    }
    set = sample_grid(cfg.nx, cfg.ny);
  } else {
    if (cfg.n < 1) {
      err << "sample: -n must be at least 1\n";
      return kExitUsage;
    }
    set = sample_random(cfg.n, cfg.seed);
  }

  std::string payload;
  if (fmt == OutputFormat::csv) {
    std::ostringstream ss;
    write_samples_csv(ss, set);
    payload = ss.str();
  } else {
    DiagramPlotOptions opt;
    opt.overlay.reserve(set.entries.size());
    for (const SampleEntry& e : set.entries) opt.overlay.push_back(e.point);
    payload = render_diagram_svg(opt);
  }
  return deliver(cfg, out, err, payload);
}

int cmd_slice(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
  if (!cfg.x) {
    err << "slice: --x is required\n";
    return kExitUsage;
  }
  if (!(*cfg.x >= 0 && *cfg.x <= 0.5)) {
    err << "slice: --x must lie in [0, 0.5], got " << g15(*cfg.x) << "\n";
    return kExitUsage;
  }
  const SliceBounds s = slice(*cfg.x);

  std::string payload;
  if (format_or(cfg, OutputFormat::text) == OutputFormat::csv) {
    payload =
        "x,y_min,y_max,z_minus,z_plus,z_crit_1,z_crit_2,z1_lo,z1_hi,z2_lo,"
        "z2_hi\n" +
        g15(s.x) + ',' + g15(s.y_min) + ',' + g15(s.y_max) + ',' +
        g15(s.z_lo) + ',' + g15(s.z_hi) + ',' + g15(s.z_crit_1) + ',' +
        g15(s.z_crit_2);
    for (std::size_t k = 0; k < 2; ++k) {
      if (k < s.z_intervals.size()) {
        payload += ',' + g15(s.z_intervals[k].lo) + ',' +
                   g15(s.z_intervals[k].hi);
      } else {
        payload += ",,";
      }
    }
    payload += '\n';
  } else {
    payload = "X = " + g15(s.x) + "\n";
    payload += "y_min = " + g15(s.y_min) + "\n";
    payload += "y_max = " + g15(s.y_max) + "\n";
    payload += "z_minus = " + g15(s.z_lo) + "\n";
    payload += "z_plus = " + g15(s.z_hi) + "\n";
    payload += "z_crit_1 = " + g15(s.z_crit_1) + "\n";
    payload += "z_crit_2 = " + g15(s.z_crit_2) + "\n";
    for (std::size_t k = 0; k < s.z_intervals.size(); ++k) {
      payload += "z_interval_" + std::to_string(k + 1) + " = [" +
                 g15(s.z_intervals[k].lo) + ", " + g15(s.z_intervals[k].hi) +
                 "]\n";
    }
  }
  return deliver(cfg, out, err, payload);
}

int cmd_invert(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
  if (!cfg.x || !cfg.y) {
    err << "invert: --x and --y are required\n";
    return kExitUsage;
  }
  const DiagramPoint p{*cfg.x, *cfg.y};
  const Triangle witness = invert(p, cfg.tol);  // run() maps failures to exit 2
  const DiagramPoint q = map_point(witness);

  std::string payload;
  payload += "a = " + g15(witness.a()) + "\n";
  payload += "b = " + g15(witness.b()) + "\n";
  payload += "c = " + g15(witness.c()) + "\n";
  payload += "X_residual = " + format_double(std::abs(q.x - p.x)) + "\n";
  payload += "Y_residual = " + format_double(std::abs(q.y - p.y)) + "\n";
  return deliver(cfg, out, err, payload);
}

int cmd_verify(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
  const bool from_file = !cfg.input.empty();
  if (from_file == cfg.random) {
    err << "verify: choose exactly one of --random or --input FILE\n";
    return kExitUsage;
  }

  std::vector<Triangle> triangles;
  if (from_file) {
    for (const CsvRow& row : load_rows(cfg.input)) {
      triangles.push_back(row.triangle);
    }
  } else {
    if (cfg.n < 1) {
      err << "verify: -n must be at least 1\n";
      return kExitUsage;
    }
    SampleSet set = sample_random(cfg.n, cfg.seed);
    triangles.reserve(set.entries.size());
    for (const SampleEntry& e : set.entries) {
      triangles.push_back(e.triangle);
    }
  }

  const bool as_csv = format_or(cfg, OutputFormat::text) == OutputFormat::csv;
  std::string payload;
  if (as_csv) {
    payload = "triangle,a,b,c,name,lhs,rhs,slack,applicable,holds,near_equality\n";
  }

  std::size_t violation_count = 0;
  std::size_t record_count = 0;
  for (std::size_t i = 0; i < triangles.size(); ++i) {
    const Triangle& t = triangles[i];
    const InequalityReport report = full_report(t);
    record_count += report.records.size();
    for (const InequalityRecord& r : report.records) {
      const bool violated = r.applicable && !r.holds;
      if (violated) ++violation_count;
      if (as_csv) {
        payload += std::to_string(i + 1) + ',' + format_double(t.a()) + ',' +
                   format_double(t.b()) + ',' + format_double(t.c()) + ',' +
                   r.name + ',' + format_double(r.lhs) + ',' +
                   format_double(r.rhs) + ',' + format_double(r.slack) + ',' +
                   bool_str(r.applicable) + ',' + bool_str(r.holds) + ',' +
                   bool_str(r.near_equality) + '\n';
      } else if (violated) {
        payload += "violation: triangle " + std::to_string(i + 1) + " (" +
                   format_double(t.a()) + ", " + format_double(t.b()) + ", " +
                   format_double(t.c()) + "): " + r.name +
                   " slack = " + format_double(r.slack) + "\n";
      } else if (r.applicable && r.near_equality) {
        payload += "near-equality: triangle " + std::to_string(i + 1) + " (" +
                   format_double(t.a()) + ", " + format_double(t.b()) + ", " +
                   format_double(t.c()) + "): " + r.name + "\n";
      }
    }
  }

  const std::string summary =
      "checked " + std::to_string(triangles.size()) + " triangles (" +
      std::to_string(record_count) + " records): " +
      std::to_string(violation_count) + " violations\n";

  if (as_csv) {
    const int code = deliver(cfg, out, err, payload);
    if (code != kExitOk) return code;
    // keep the summary off the CSV stream: stdout when the report went to a
    // file, stderr when the report itself occupies stdout
    (cfg.output.empty() ? err : out) << summary;
  } else {
    const int code = deliver(cfg, out, err, payload + summary);
    if (code != kExitOk) return code;
  }
  return violation_count == 0 ? kExitOk : kExitViolation;
}

int cmd_bounds(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
  if (cfg.n < 10) {
    err << "bounds: -n must be at least 10\n";
    return kExitUsage;
  }
  const SharpConstants c = empirical_sharp_constants(cfg.n);
  return deliver(cfg, out, err,
                 "c_min = " + g15(c.c_min) + "\nc_max = " + g15(c.c_max) +
                     "\n");
}

int cmd_plot(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
  if (format_or(cfg, OutputFormat::svg) != OutputFormat::svg) {
    err << "plot: only svg output is supported\n";
    return kExitUsage;
  }
  std::string payload;
  if (cfg.slice_x) {
    if (!(*cfg.slice_x >= 0 && *cfg.slice_x <= 0.5)) {
      err << "plot: --slice must lie in [0, 0.5], got " << g15(*cfg.slice_x)
          << "\n";
      return kExitUsage;
    }
    payload = render_slice_svg(*cfg.slice_x);
  } else {
    DiagramPlotOptions opt;
    if (!cfg.input.empty()) {
      for (const CsvRow& row : load_rows(cfg.input)) {
        opt.overlay.push_back(row.point ? *row.point
                                        : map_point(row.triangle));
      }
    }
    payload = render_diagram_svg(opt);
  }
  return deliver(cfg, out, err, payload);
}

int run(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
  try {
    switch (cfg.subcommand) {
      case Subcommand::sample:
        return cmd_sample(cfg, out, err);
      case Subcommand::slice:
        return cmd_slice(cfg, out, err);
      case Subcommand::invert:
        return cmd_invert(cfg, out, err);
      case Subcommand::verify:
        return cmd_verify(cfg, out, err);
      case Subcommand::bounds:
        return cmd_bounds(cfg, out, err);
      case Subcommand::plot:
        return cmd_plot(cfg, out, err);
    }
    err << "unknown subcommand\n";
    return kExitUsage;
  } catch (const ParseError& e) {
    err << "error: " << e.what() << "\n";
    return kExitIo;
  } catch (const std::ios_base::failure& e) {
    err << "I/O error: " << e.what() << "\n";
    return kExitIo;
  } catch (const std::exception& e) {
    // domain errors, invalid arguments, convergence failures
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  }
}

}  // namespace santalo::cli
