"""Exact circuit diameters of rational polyhedra ``{x : A x >= b}``."""

from .circuits import enumerate_circuits, is_circuit, predicted_wedge_circuits
from .cli import emit_hpoly, parse_hpoly, verify_u4
from .constructions import (
    boundedize,
    check_wedge_simple,
    dantzig_from_pair,
    is_dantzig_figure,
    is_spindle,
    make_csimple,
    perturb,
    phi,
    phi_inv,
    project_walk,
    unbounded_spindle_walk,
    vertexify,
    wedge,
)
from .exact import Rational, RMatrix, RVector, canonical_sign, kernel_basis, normalize_primitive, rank, solve_square
from .polyhedron import (
    HPolyhedron,
    Vertex,
    active_set,
    combinatorial_diameter,
    combinatorial_distance,
    edges,
    enumerate_vertices,
    face_restrict,
    find_vertex,
    is_bounded,
    is_feasible,
    validate,
)
from .walks import (
    CircuitWalk,
    SearchConfig,
    check_csimple,
    circuit_diameter,
    circuit_distance,
    facet_gaining_edge_walk,
    find_nonrevisiting_walk,
    max_step,
    successors,
    validate_walk,
)

__all__ = [
    "CircuitWalk",
    "HPolyhedron",
    "RMatrix",
    "RVector",
    "Rational",
    "SearchConfig",
    "Vertex",
    "active_set",
    "boundedize",
    "canonical_sign",
    "check_csimple",
    "check_wedge_simple",
    "circuit_diameter",
    "circuit_distance",
    "combinatorial_diameter",
    "combinatorial_distance",
    "dantzig_from_pair",
    "edges",
    "emit_hpoly",
    "enumerate_circuits",
    "enumerate_vertices",
    "face_restrict",
    "facet_gaining_edge_walk",
    "find_nonrevisiting_walk",
    "find_vertex",
    "is_bounded",
    "is_circuit",
    "is_dantzig_figure",
    "is_feasible",
    "is_spindle",
    "kernel_basis",
    "make_csimple",
    "max_step",
    "normalize_primitive",
    "parse_hpoly",
    "perturb",
    "phi",
    "phi_inv",
    "predicted_wedge_circuits",
    "project_walk",
    "rank",
    "solve_square",
    "successors",
    "unbounded_spindle_walk",
    "validate",
    "validate_walk",
    "verify_u4",
    "vertexify",
    "wedge",
]
