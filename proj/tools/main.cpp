#include <iostream>
#include <map>
#include <string>

#include <CLI11.hpp>

#include "santalo/cli.hpp"

namespace {

using santalo::cli::OutputFormat;
using santalo::cli::RunConfig;
using santalo::cli::Subcommand;

void add_output_flags(CLI::App* cmd, RunConfig& cfg, std::string& format) {
  cmd->add_option("-o,--output", cfg.output, "output file (default: stdout)");
  cmd->add_option("--format", format, "output format")
      ->check(CLI::IsMember({"csv", "svg", "text"}));
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{
      "Blaschke-Santalo diagram of triangles: perimeter, area and "
      "isoperimetric deficit"};
  app.require_subcommand(1);

  RunConfig cfg;
  std::string format;
  double x = 0, y = 0, slice_x = 0;

  CLI::App* sample =
      app.add_subcommand("sample", "generate triangles and diagram points");
  sample->add_flag("--random", cfg.random,
                   "draw parameters uniformly on the unit simplex");
  sample->add_flag("--grid", cfg.grid, "deterministic diagram grid");
  sample->add_option("-n", cfg.n, "number of random samples");
  sample->add_option("--seed", cfg.seed, "random seed");
  sample->add_option("--nx", cfg.nx, "grid abscissa count");
  sample->add_option("--ny", cfg.ny, "grid ordinates per slice");
  add_output_flags(sample, cfg, format);

  CLI::App* slice =
      app.add_subcommand("slice", "vertical extent of the diagram at fixed X");
  slice->add_option("--x", x, "abscissa in [0, 0.5]")->required();
  add_output_flags(slice, cfg, format);

  CLI::App* invert =
      app.add_subcommand("invert", "witness triangle for a diagram point");
  invert->add_option("--x", x, "abscissa")->required();
  invert->add_option("--y", y, "ordinate")->required();
  invert->add_option("--tol", cfg.tol, "containment tolerance");
  add_output_flags(invert, cfg, format);

  CLI::App* verify =
      app.add_subcommand("verify", "evaluate the inequality suite");
  verify->add_flag("--random", cfg.random, "verify seeded random triangles");
  verify->add_option("-n", cfg.n, "number of random triangles");
  verify->add_option("--seed", cfg.seed, "random seed");
  verify->add_option("--input", cfg.input, "CSV of a,b,c rows to verify");
  add_output_flags(verify, cfg, format);

  CLI::App* bounds =
      app.add_subcommand("bounds", "empirical sharp linear-bound constants");
  bounds->add_option("-n", cfg.n, "boundary grid points per piece");
  add_output_flags(bounds, cfg, format);

  CLI::App* plot = app.add_subcommand("plot", "emit diagram or slice SVG");
  plot->add_option("--samples", cfg.input, "CSV samples to overlay");
  plot->add_option("--slice", slice_x, "plot the slice cubic at this X");
  add_output_flags(plot, cfg, format);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return santalo::cli::kExitUsage;
  }

  if (sample->parsed()) cfg.subcommand = Subcommand::sample;
  if (slice->parsed()) {
    cfg.subcommand = Subcommand::slice;
    cfg.x = x;
  }
  if (invert->parsed()) {
    cfg.subcommand = Subcommand::invert;
    cfg.x = x;
    cfg.y = y;
  }
  if (verify->parsed()) cfg.subcommand = Subcommand::verify;
  if (bounds->parsed()) cfg.subcommand = Subcommand::bounds;
  if (plot->parsed()) {
    cfg.subcommand = Subcommand::plot;
    if (plot->count("--slice") > 0) cfg.slice_x = slice_x;
  }

  if (!format.empty()) {
    static const std::map<std::string, OutputFormat> kFormats = {
        {"csv", OutputFormat::csv},
        {"svg", OutputFormat::svg},
        {"text", OutputFormat::text}};
    cfg.format = kFormats.at(format);
  }

  return santalo::cli::run(cfg, std::cout, std::cerr);
}
