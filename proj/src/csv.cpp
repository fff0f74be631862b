#include "santalo/csv.hpp"

#include <array>
#include <charconv>
#include <cstdio>
#include <istream>
#include <ostream>

namespace santalo {
namespace {

std::string strip(std::string s) {
  const auto from = s.find_first_not_of(" \t\r");
  if (from == std::string::npos) return "";
  const auto to = s.find_last_not_of(" \t\r");
  return s.substr(from, to - from + 1);
}

std::vector<std::string> split_fields(const std::string& line) {
  std::vector<std::string> fields;
  std::size_t start = 0;
  for (;;) {
    const std::size_t comma = line.find(',', start);
    if (comma == std::string::npos) {
      fields.push_back(strip(line.substr(start)));
      return fields;
    }
    fields.push_back(strip(line.substr(start, comma - start)));
    start = comma + 1;
  }
}

double parse_field(const std::string& field, std::size_t row,
                   const char* column) {
  double value = 0;
  const char* first = field.data();
  const char* last = first + field.size();
  const auto [ptr, ec] = std::from_chars(first, last, value);
  if (ec != std::errc{} || ptr != last || field.empty()) {
    throw ParseError("row " + std::to_string(row) + ": column " + column +
                     " is not a number: '" + field + "'");
  }
  return value;
}

}  // namespace

std::string format_double(double v, int digits) {
  std::array<char, 64> buf{};
  const int len =
      std::snprintf(buf.data(), buf.size(), "%.*g", digits, v);
  return std::string(buf.data(), static_cast<std::size_t>(len));
}

void write_samples_csv(std::ostream& os, const SampleSet& set) {
  os << "a,b,c,X,Y\n";
  for (const SampleEntry& e : set.entries) {
    os << format_double(e.triangle.a()) << ',' << format_double(e.triangle.b())
       << ',' << format_double(e.triangle.c()) << ','
       << format_double(e.point.x) << ',' << format_double(e.point.y) << '\n';
  }
}

std::vector<CsvRow> read_triangles_csv(std::istream& is) {
  std::string line;
  if (!std::getline(is, line)) {
    throw ParseError("empty input: expected a header row");
  }
  const std::string header = strip(line);
  std::size_t columns = 0;
  if (header == "a,b,c") {
    columns = 3;
  } else if (header == "a,b,c,X,Y") {
    columns = 5;
  } else {
    throw ParseError("unrecognized header '" + header +
                     "' (expected 'a,b,c' or 'a,b,c,X,Y')");
  }

  static const char* kColumns[] = {"a", "b", "c", "X", "Y"};
  std::vector<CsvRow> rows;
  std::size_t row = 0;
  while (std::getline(is, line)) {
    ++row;
    if (strip(line).empty()) continue;  // tolerate trailing blank lines
    const std::vector<std::string> fields = split_fields(line);
    if (fields.size() != columns) {
      throw ParseError("row " + std::to_string(row) + ": expected " +
                       std::to_string(columns) + " fields, got " +
                       std::to_string(fields.size()));
    }
    double values[5] = {0, 0, 0, 0, 0};
    for (std::size_t i = 0; i < columns; ++i) {
      values[i] = parse_field(fields[i], row, kColumns[i]);
    }
    try {
      Triangle t(values[0], values[1], values[2]);
      std::optional<DiagramPoint> pt;
      if (columns == 5) pt = DiagramPoint{values[3], values[4]};
      rows.push_back({t, pt});
    } catch (const std::domain_error& e) {
      throw ParseError("row " + std::to_string(row) + ": " + e.what());
    }
  }
  return rows;
}

}  // namespace santalo
