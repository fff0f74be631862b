#pragma once

#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>

namespace santalo::cli {

inline constexpr int kExitOk = 0;         // success / no violations
inline constexpr int kExitViolation = 1;  // verify found violations
inline constexpr int kExitUsage = 2;      // usage or domain error
inline constexpr int kExitIo = 3;         // I/O or parse error

enum class Subcommand { sample, slice, invert, verify, bounds, plot };
enum class OutputFormat { csv, svg, text };

struct RunConfig {
  Subcommand subcommand{Subcommand::sample};
  std::optional<OutputFormat> format;  // unset -> subcommand default

  bool random = false;
  bool grid = false;
  std::size_t n = 10000;
  std::uint64_t seed = 0;
  std::size_t nx = 0;
  std::size_t ny = 0;

  std::optional<double> x;  // slice / invert abscissa
  std::optional<double> y;  // invert ordinate
  double tol = 1e-9;

  std::string input;              // verify --input / plot --samples
  std::string output;             // empty -> stdout
  std::optional<double> slice_x;  // plot --slice
};

/// Dispatches one parsed invocation; returns a kExit* code. All user-facing
/// text goes to `out`, diagnostics to `err`.
int run(const RunConfig& cfg, std::ostream& out, std::ostream& err);

int cmd_sample(const RunConfig& cfg, std::ostream& out, std::ostream& err);
int cmd_slice(const RunConfig& cfg, std::ostream& out, std::ostream& err);
int cmd_invert(const RunConfig& cfg, std::ostream& out, std::ostream& err);
int cmd_verify(const RunConfig& cfg, std::ostream& out, std::ostream& err);
int cmd_bounds(const RunConfig& cfg, std::ostream& out, std::ostream& err);
int cmd_plot(const RunConfig& cfg, std::ostream& out, std::ostream& err);

}  // namespace santalo::cli
