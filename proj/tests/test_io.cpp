#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <sstream>

#include "santalo/csv.hpp"
#include "santalo/sampling.hpp"
#include "santalo/svg.hpp"

using namespace santalo;

TEST_CASE("format_double survives binary64 round trips") {
  for (const double v : {1.0 / 3, 0.1, 12 * 1.7320508075688772, 1e-300,
                         -0.76084521303612286, 42.0, 0.0}) {
    CHECK(std::stod(format_double(v)) == v);
  }
  CHECK(format_double(0.5, 15) == "0.5");
  CHECK(format_double(2.0, 15) == "2");
}

TEST_CASE("sample CSV round trip preserves every bit") {
  const SampleSet set = sample_random(500, 99);
  std::stringstream ss;
  write_samples_csv(ss, set);

  std::string header;
  std::getline(ss, header);
  CHECK(header == "a,b,c,X,Y");
  ss.seekg(0);

  const std::vector<CsvRow> rows = read_triangles_csv(ss);
  REQUIRE(rows.size() == set.entries.size());
  for (std::size_t i = 0; i < rows.size(); ++i) {
    CHECK(rows[i].triangle.a() == set.entries[i].triangle.a());
    CHECK(rows[i].triangle.b() == set.entries[i].triangle.b());
    CHECK(rows[i].triangle.c() == set.entries[i].triangle.c());
    REQUIRE(rows[i].point.has_value());
    CHECK(rows[i].point->x == set.entries[i].point.x);
    CHECK(rows[i].point->y == set.entries[i].point.y);
  }
}

TEST_CASE("three-column input is accepted without points") {
  std::stringstream ss("a,b,c\n3,4,5\n1,0.5,0.5\n");
  const std::vector<CsvRow> rows = read_triangles_csv(ss);
  REQUIRE(rows.size() == 2);
  CHECK(rows[0].triangle.c() == 5.0);
  CHECK_FALSE(rows[0].point.has_value());
  CHECK(rows[1].triangle.a() == 1.0);
}

TEST_CASE("reader tolerates CRLF and blank trailing lines") {
  std::stringstream ss("a,b,c\r\n3, 4 ,5\r\n\n");
  const std::vector<CsvRow> rows = read_triangles_csv(ss);
  REQUIRE(rows.size() == 1);
  CHECK(rows[0].triangle.b() == 4.0);
}

TEST_CASE("reader reports malformed input with row numbers") {
  std::stringstream empty("");
  CHECK_THROWS_AS(read_triangles_csv(empty), ParseError);

  std::stringstream bad_header("u,v,w\n1,1,1\n");
  CHECK_THROWS_WITH_AS(read_triangles_csv(bad_header),
                       doctest::Contains("unrecognized header"), ParseError);

  std::stringstream bad_count("a,b,c\n1,1\n");
  CHECK_THROWS_WITH_AS(read_triangles_csv(bad_count),
                       doctest::Contains("row 1"), ParseError);

  std::stringstream bad_number("a,b,c\n1,1,1\n1,oops,1\n");
  CHECK_THROWS_WITH_AS(read_triangles_csv(bad_number),
                       doctest::Contains("row 2"), ParseError);

  std::stringstream bad_triangle("a,b,c\n1,1,5\n");
  CHECK_THROWS_WITH_AS(read_triangles_csv(bad_triangle),
                       doctest::Contains("row 1"), ParseError);
}

TEST_CASE("diagram SVG carries data coordinates and transform metadata") {
  const std::string svg = render_diagram_svg();
  CHECK(svg.rfind("<svg", 0) == 0);
  CHECK(svg.find("</svg>") != std::string::npos);
  CHECK(svg.find("class=\"phi-plus\"") != std::string::npos);
  CHECK(svg.find("class=\"phi-minus\"") != std::string::npos);
  CHECK(svg.find("class=\"fh-upper\"") != std::string::npos);
  CHECK(svg.find("class=\"fh-lower\"") != std::string::npos);
  CHECK(svg.find("class=\"flat-segment\"") != std::string::npos);
  CHECK(svg.find("data-points=") != std::string::npos);
  CHECK(svg.find("data-x-scale=") != std::string::npos);
  CHECK(svg.find("data-y-offset=") != std::string::npos);
  CHECK(svg.find("data-x-min=\"0\"") != std::string::npos);
  CHECK(svg.find("data-x-max=\"0.55\"") != std::string::npos);
  CHECK(svg.find("data-y-min=\"-0.05\"") != std::string::npos);
  CHECK(svg.find("data-y-max=\"1.05\"") != std::string::npos);
}

TEST_CASE("diagram SVG renders overlay scatter") {
  DiagramPlotOptions opt;
  opt.overlay = {{0.1, 0.6}, {0.2, 0.3}};
  const std::string svg = render_diagram_svg(opt);
  CHECK(svg.find("class=\"sample\"") != std::string::npos);
  CHECK(svg.find("data-x=\"0.1\"") != std::string::npos);
}

TEST_CASE("slice SVG marks the admissible intervals") {
  const std::string one = render_slice_svg(0.1);
  CHECK(one.find("data-slice-x=\"0.1\"") != std::string::npos);
  CHECK(one.find("class=\"h-curve\"") != std::string::npos);
  CHECK(one.find("class=\"h-admissible-1\"") != std::string::npos);
  CHECK(one.find("class=\"h-admissible-2\"") == std::string::npos);
  CHECK(one.find("class=\"z-crit\"") != std::string::npos);

  const std::string two = render_slice_svg(0.25);
  CHECK(two.find("class=\"h-admissible-1\"") != std::string::npos);
  CHECK(two.find("class=\"h-admissible-2\"") != std::string::npos);
}

TEST_CASE("SVG output is deterministic") {
  CHECK(render_diagram_svg() == render_diagram_svg());
  CHECK(render_slice_svg(0.3) == render_slice_svg(0.3));
}
