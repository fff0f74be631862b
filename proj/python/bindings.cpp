#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <sstream>

#include "santalo/csv.hpp"
#include "santalo/diagram.hpp"
#include "santalo/geometry.hpp"
#include "santalo/inequalities.hpp"
#include "santalo/sampling.hpp"
#include "santalo/svg.hpp"

namespace py = pybind11;
using namespace santalo;

PYBIND11_MODULE(_santalo, m) {
  m.doc() =
      "Blaschke-Santalo diagram of triangles: perimeter, area and "
      "isoperimetric deficit";
  m.attr("__version__") = "0.1.0";

  py::register_exception<NotInDiagramError>(m, "NotInDiagramError",
                                            PyExc_ValueError);
  py::register_exception<ConvergenceError>(m, "ConvergenceError",
                                           PyExc_RuntimeError);

  py::class_<Triangle>(m, "Triangle")
      .def(py::init<double, double, double>(), py::arg("a"), py::arg("b"),
           py::arg("c"))
      .def_property_readonly("a", &Triangle::a)
      .def_property_readonly("b", &Triangle::b)
      .def_property_readonly("c", &Triangle::c)
      .def("perimeter", &Triangle::perimeter)
      .def("area", &Triangle::area)
      .def("deficit", &Triangle::deficit)
      .def("is_degenerate", &Triangle::is_degenerate)
      .def("is_acute", &Triangle::is_acute)
      .def("scaled", &Triangle::scaled, py::arg("k"))
      .def("__repr__", [](const Triangle& t) {
        return "Triangle(" + format_double(t.a()) + ", " +
               format_double(t.b()) + ", " + format_double(t.c()) + ")";
      });

  py::class_<RaviParams>(m, "RaviParams")
      .def(py::init([](double x, double y, double z) {
             return RaviParams{x, y, z};
           }),
           py::arg("x"), py::arg("y"), py::arg("z"))
      .def_readwrite("x", &RaviParams::x)
      .def_readwrite("y", &RaviParams::y)
      .def_readwrite("z", &RaviParams::z)
      .def("__repr__", [](const RaviParams& p) {
        return "RaviParams(" + format_double(p.x) + ", " + format_double(p.y) +
               ", " + format_double(p.z) + ")";
      });

  py::class_<DiagramPoint>(m, "DiagramPoint")
      .def(py::init([](double x, double y) {
             return DiagramPoint{x, y};
           }),
           py::arg("x"), py::arg("y"))
      .def_readwrite("x", &DiagramPoint::x)
      .def_readwrite("y", &DiagramPoint::y)
      .def("__repr__", [](const DiagramPoint& p) {
        return "DiagramPoint(" + format_double(p.x) + ", " +
               format_double(p.y) + ")";
      });

  py::class_<Interval>(m, "Interval")
      .def_readonly("lo", &Interval::lo)
      .def_readonly("hi", &Interval::hi)
      .def("__repr__", [](const Interval& iv) {
        return "Interval(" + format_double(iv.lo) + ", " +
               format_double(iv.hi) + ")";
      });

  py::class_<SliceBounds>(m, "SliceBounds")
      .def_readonly("x", &SliceBounds::x)
      .def_readonly("y_min", &SliceBounds::y_min)
      .def_readonly("y_max", &SliceBounds::y_max)
      .def_readonly("z_intervals", &SliceBounds::z_intervals)
      .def_readonly("z_lo", &SliceBounds::z_lo)
      .def_readonly("z_hi", &SliceBounds::z_hi)
      .def_readonly("z_crit_1", &SliceBounds::z_crit_1)
      .def_readonly("z_crit_2", &SliceBounds::z_crit_2);

  py::class_<InequalityRecord>(m, "InequalityRecord")
      .def_readonly("name", &InequalityRecord::name)
      .def_readonly("lhs", &InequalityRecord::lhs)
      .def_readonly("rhs", &InequalityRecord::rhs)
      .def_readonly("slack", &InequalityRecord::slack)
      .def_readonly("applicable", &InequalityRecord::applicable)
      .def_readonly("holds", &InequalityRecord::holds)
      .def_readonly("near_equality", &InequalityRecord::near_equality)
      .def("__repr__", [](const InequalityRecord& r) {
        return "InequalityRecord(" + r.name +
               ", slack=" + format_double(r.slack) + ")";
      });

  py::class_<InequalityReport>(m, "InequalityReport")
      .def_readonly("records", &InequalityReport::records)
      .def("all_hold", &InequalityReport::all_hold)
      .def("violations", &InequalityReport::violations)
      .def(
          "find",
          [](const InequalityReport& rep, const std::string& name)
              -> py::object {
            const InequalityRecord* r = rep.find(name);
            return r ? py::cast(*r) : py::none();
          },
          py::arg("name"));

  py::enum_<SampleStrategy>(m, "SampleStrategy")
      .value("random", SampleStrategy::random)
      .value("grid", SampleStrategy::grid);

  py::class_<SampleEntry>(m, "SampleEntry")
      .def_readonly("triangle", &SampleEntry::triangle)
      .def_readonly("point", &SampleEntry::point);

  py::class_<SampleSet>(m, "SampleSet")
      .def_readonly("entries", &SampleSet::entries)
      .def_readonly("seed", &SampleSet::seed)
      .def_readonly("strategy", &SampleSet::strategy);

  m.def("ravi_to_sides", &ravi_to_sides, py::arg("params"));
  m.def("sides_to_ravi", &sides_to_ravi, py::arg("triangle"));
  m.def("map_point", &map_point, py::arg("triangle"));
  m.def("phi_minus", &phi_minus, py::arg("x"));
  m.def("phi_plus", &phi_plus, py::arg("x"));
  m.def("cubic_h", &cubic_h, py::arg("z"), py::arg("x"));
  m.def("slice", &slice, py::arg("x"));
  m.def("contains", &contains, py::arg("point"), py::arg("tol") = 1e-9);
  m.def(
      "contains",
      [](double x, double y, double tol) {
        return contains(DiagramPoint{x, y}, tol);
      },
      py::arg("x"), py::arg("y"), py::arg("tol") = 1e-9);
  m.def("invert", &invert, py::arg("point"), py::arg("tol") = 1e-9);
  m.def(
      "invert",
      [](double x, double y, double tol) {
        return invert(DiagramPoint{x, y}, tol);
      },
      py::arg("x"), py::arg("y"), py::arg("tol") = 1e-9);

  m.def("check_weitzenbock", &check_weitzenbock, py::arg("triangle"));
  m.def("check_finsler_hadwiger", &check_finsler_hadwiger,
        py::arg("triangle"));
  m.def("check_reverse_finsler_hadwiger", &check_reverse_finsler_hadwiger,
        py::arg("triangle"));
  m.def("check_perimeter_forms", &check_perimeter_forms, py::arg("triangle"));
  m.def("check_optimal_bounds", &check_optimal_bounds, py::arg("triangle"));
  m.def("check_acute_refinement", &check_acute_refinement,
        py::arg("triangle"));
  m.def("full_report", &full_report, py::arg("triangle"));
  m.def(
      "empirical_sharp_constants",
      [](std::size_t n) {
        const SharpConstants c = empirical_sharp_constants(n);
        return py::make_tuple(c.c_min, c.c_max);
      },
      py::arg("n"));

  m.def("sample_random", &sample_random, py::arg("n"), py::arg("seed") = 0);
  m.def("sample_grid", &sample_grid, py::arg("nx"), py::arg("ny"));
  m.def(
      "samples_to_csv",
      [](const SampleSet& set) {
        std::ostringstream ss;
        write_samples_csv(ss, set);
        return ss.str();
      },
      py::arg("samples"));

  m.def(
      "render_diagram_svg",
      [](const std::vector<DiagramPoint>& overlay) {
        DiagramPlotOptions opt;
        opt.overlay = overlay;
        return render_diagram_svg(opt);
      },
      py::arg("overlay") = std::vector<DiagramPoint>{});
  m.def("render_slice_svg", &render_slice_svg, py::arg("x"));
}
