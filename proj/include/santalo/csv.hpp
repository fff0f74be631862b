#pragma once

#include <iosfwd>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "santalo/diagram.hpp"
#include "santalo/geometry.hpp"
#include "santalo/sampling.hpp"

namespace santalo {

class ParseError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Shortest decimal round-tripping representation ("%.17g" style).
std::string format_double(double v, int digits = 17);

/// One parsed input row: the triangle, plus its diagram point when the file
/// carried the optional X,Y columns.
struct CsvRow {
  Triangle triangle;
  std::optional<DiagramPoint> point;
};

/// Writes header `a,b,c,X,Y` and one row per entry, 17 significant digits.
void write_samples_csv(std::ostream& os, const SampleSet& set);

/// Reads a `a,b,c` or `a,b,c,X,Y` file. Malformed headers, rows or side
/// triples raise ParseError with a 1-based row number.
std::vector<CsvRow> read_triangles_csv(std::istream& is);

}  // namespace santalo
