"""Blaschke-Santalo diagram of triangles: sharp inequalities between
perimeter, area and isoperimetric deficit."""

from ._santalo import (
    ConvergenceError,
    DiagramPoint,
    InequalityRecord,
    InequalityReport,
    Interval,
    NotInDiagramError,
    RaviParams,
    SampleEntry,
    SampleSet,
    SampleStrategy,
    SliceBounds,
    Triangle,
    __version__,
    check_acute_refinement,
    check_finsler_hadwiger,
    check_optimal_bounds,
    check_perimeter_forms,
    check_reverse_finsler_hadwiger,
    check_weitzenbock,
    contains,
    cubic_h,
    empirical_sharp_constants,
    full_report,
    invert,
    map_point,
    phi_minus,
    phi_plus,
    ravi_to_sides,
    render_diagram_svg,
    render_slice_svg,
    sample_grid,
    sample_random,
    samples_to_csv,
    sides_to_ravi,
    slice,
)

__all__ = [
    "ConvergenceError",
    "DiagramPoint",
    "InequalityRecord",
    "InequalityReport",
    "Interval",
    "NotInDiagramError",
    "RaviParams",
    "SampleEntry",
    "SampleSet",
    "SampleStrategy",
    "SliceBounds",
    "Triangle",
    "__version__",
    "check_acute_refinement",
    "check_finsler_hadwiger",
    "check_optimal_bounds",
    "check_perimeter_forms",
    "check_reverse_finsler_hadwiger",
    "check_weitzenbock",
    "contains",
    "cubic_h",
    "empirical_sharp_constants",
    "full_report",
    "invert",
    "map_point",
    "phi_minus",
    "phi_plus",
    "ravi_to_sides",
    "render_diagram_svg",
    "render_slice_svg",
    "sample_grid",
    "sample_random",
    "samples_to_csv",
    "sides_to_ravi",
    "slice",
]
