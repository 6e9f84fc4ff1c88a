"""Holding circles of convex polytopes.

A circle *holds* a convex body when it touches the body without crossing
its interior and no rigid translation/rotation can move the circle
arbitrarily far away.  This package computes widths and minimal enclosing
cylinders of polytopes, searches for small holding circles, certifies
holding evidence (blocking cross-sections, projection chains, escape
searches), and constructs the named families that make the bounds sharp.
"""

from .errors import (CertificationError, CircleHoldError, DegenerateInput,
                     EmptyResult, InvalidInput, InvalidParam, InvalidStart,
                     NoBlockingSlice, NoSolution, NotFound)
from .tolerances import DEFAULT_SEED, TOL_GEOM, TOL_OPT
from .planar import (Circle2, Polygon2, SplitWidths, Strip,
                     best_fit_equilateral, breadth2, chebyshev_inscribed,
                     circle_support_points, clip_halfplane_2d,
                     convex_hull_2d, equilateral_triangle,
                     hausdorff_distance, horizontal_width,
                     min_enclosing_circle, point_polygon_distance,
                     random_axis_crossing_polygon, random_convex_polygon,
                     split_width_identities, width2)
from .polytope import (CylinderResult, HalfSpace, PlanarSection, Polytope3,
                       WidthResult, build_hull, clip_halfspace, min_cylinder,
                       plane_frame, point_location, segment_distance,
                       slice_plane, width3)
from .projection import (IcebergProfile, iceberg_profile, split_body,
                         split_project)
from .holding import (VERDICT_ESCAPE, VERDICT_EVIDENCE, VERDICT_INCONCLUSIVE,
                      ChainCertificate, Circle3, EscapeResult,
                      ExtremalityDiagnostics, HoldingReport,
                      PenetrationWitness, SliceCircumProfile,
                      TranslationBlock, chain_certificate,
                      circle_interior_intersects, escape_search,
                      extremality_diagnostics, holding_report,
                      min_holding_circle, nonintersecting_edge_bound,
                      sampled_penetration, slice_circum_profile,
                      surrounds_slice, translation_block_certificate)
from .families import (FAMILIES, FamilyInstance, PolytopeND, Prediction,
                       bevelled_cylinder, five_vertex_flat, flat_tetrahedron,
                       octahedron_iceberg, rectangle_circle,
                       seven_vertex_iceberg, simplex_holding_sphere_diameter,
                       simplex_hull_nd, simplex_waist_minimum,
                       skew_tetrahedron, steinhagen_constant,
                       wd_tetrahedron, width_estimate_nd)
from .verification import CheckResult, SUITES, run_suite, suite_names
from . import fileio, svgfig

__version__ = "0.1.0"

__all__ = [
    "__version__",
    # errors
    "CircleHoldError", "DegenerateInput", "InvalidInput", "InvalidParam",
    "EmptyResult", "NoSolution", "NoBlockingSlice", "InvalidStart",
    "NotFound", "CertificationError",
    # tolerances
    "TOL_GEOM", "TOL_OPT", "DEFAULT_SEED",
    # planar
    "Polygon2", "Strip", "Circle2", "SplitWidths", "convex_hull_2d",
    "width2", "breadth2", "horizontal_width", "clip_halfplane_2d",
    "split_width_identities", "min_enclosing_circle",
    "circle_support_points", "chebyshev_inscribed",
    "point_polygon_distance", "hausdorff_distance", "equilateral_triangle",
    "best_fit_equilateral", "random_convex_polygon",
    "random_axis_crossing_polygon",
    # polytope
    "HalfSpace", "Polytope3", "WidthResult", "CylinderResult",
    "PlanarSection", "build_hull", "width3", "clip_halfspace",
    "slice_plane", "min_cylinder", "point_location", "segment_distance",
    "plane_frame",
    # projection
    "split_body", "split_project", "IcebergProfile", "iceberg_profile",
    # holding
    "Circle3", "PenetrationWitness", "circle_interior_intersects",
    "sampled_penetration", "SliceCircumProfile", "slice_circum_profile",
    "TranslationBlock", "translation_block_certificate", "surrounds_slice",
    "nonintersecting_edge_bound", "EscapeResult", "escape_search",
    "HoldingReport", "holding_report", "ChainCertificate",
    "chain_certificate", "min_holding_circle", "ExtremalityDiagnostics",
    "extremality_diagnostics", "VERDICT_EVIDENCE", "VERDICT_ESCAPE",
    "VERDICT_INCONCLUSIVE",
    # families
    "FamilyInstance", "Prediction", "FAMILIES", "octahedron_iceberg",
    "seven_vertex_iceberg", "rectangle_circle", "flat_tetrahedron",
    "five_vertex_flat", "skew_tetrahedron", "bevelled_cylinder",
    "wd_tetrahedron", "PolytopeND", "simplex_hull_nd",
    "steinhagen_constant", "simplex_holding_sphere_diameter",
    "simplex_waist_minimum", "width_estimate_nd",
    # verification
    "CheckResult", "SUITES", "run_suite", "suite_names",
    # submodules
    "fileio", "svgfig",
]
