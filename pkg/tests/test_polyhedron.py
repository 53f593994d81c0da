from fractions import Fraction
from itertools import combinations
import random

import pytest

from circuitdiam.errors import DimensionMismatch, EmptyFace, InfeasiblePoint, UnusableDirection, VertexNotFound
from circuitdiam.instances import cube, hexagon, pentagon_degenerate, q4, quadrant, simplex, square, triangle, u4
from circuitdiam.polyhedron import (
    HPolyhedron,
    active_set,
    combinatorial_diameter,
    combinatorial_distance,
    edges,
    extreme_rays,
    face_restrict,
    find_vertex,
    is_bounded,
    is_feasible,
    irredundant,
    validate,
)
from circuitdiam.walks import max_step

U4_LABELS = ["5678", "1678", "1478", "1458", "1345", "1234", "2346", "3467", "1467"]


def rows(label):
    return [int(c) - 1 for c in label]


def test_feasibility():
    assert is_feasible(square(), (Fraction(1, 2), Fraction(1, 2)))
    assert not is_feasible(square(), (2, 0))
    assert is_feasible(u4(), (0, 0, 0, 0))
    with pytest.raises(DimensionMismatch):
        is_feasible(square(), (0, 0, 0))


def test_active_set():
    assert active_set(square(), (0, 0)) == {0, 1}
    assert active_set(square(), (Fraction(1, 2), 0)) == {1}
    assert active_set(u4(), (0, 0, 0, 0)) == {4, 5, 6, 7}
    with pytest.raises(InfeasiblePoint):
        active_set(square(), (2, 2))


def test_vertex_counts():
    assert len(square().vertices()) == 4
    assert [v.point for v in quadrant().vertices()] == [(0, 0)]
    assert len(u4().vertices()) == 15
    assert len(cube(3).vertices()) == 8


def test_u4_named_vertices_present():
    P = u4()
    actives = {v.active for v in P.vertices()}
    for lab in U4_LABELS:
        assert frozenset(rows(lab)) in actives, lab


def test_vertices_are_sorted_and_unique():
    for P in (u4(), q4(), hexagon(), pentagon_degenerate()):
        pts = [v.point for v in P.vertices()]
        assert pts == sorted(set(pts))


def test_validate_reports():
    assert validate(square())
    dup = HPolyhedron(square().A + ((1, 0),), square().b + (0,))
    rep = validate(dup)
    assert not rep and 4 in rep.bad_rows
    loose = HPolyhedron(square().A + ((1, 0),), square().b + (-5,))
    rep = validate(loose)
    assert not rep and 4 in rep.bad_rows
    assert irredundant(loose) == square()
    flat = HPolyhedron([[1, 0], [-1, 0]], [0, -1])
    assert not validate(flat)
    empty = HPolyhedron([[1, 0], [-1, 0], [0, 1]], [1, 0, 0])
    assert not validate(empty)


def test_u4_shape():
    rep = validate(u4())
    assert rep and rep.d == 4 and rep.f == 8
    assert not is_bounded(u4())
    assert len(extreme_rays(u4())) == 4


def test_edges_small():
    assert len(edges(square())) == 4
    assert len(edges(triangle())) == 3
    assert len(edges(hexagon())) == 6


def test_u4_named_edges():
    P = u4()
    verts = P.vertices()
    es = {frozenset(e) for e in edges(P)}
    for a, b in (("5678", "1678"), ("1678", "1478"), ("1234", "2346"), ("2346", "3467")):
        i = verts.index(find_vertex(P, facets=rows(a)))
        j = verts.index(find_vertex(P, facets=rows(b)))
        assert frozenset((i, j)) in es


def pyramid():
    # square base [0,2]^2 with apex (1,1,1) on four facets
    return HPolyhedron([[0, 0, 1], [1, 0, -1], [0, 1, -1], [-1, 0, -1], [0, -1, -1]], [0, 0, 0, -2, -2])


def test_non_simple_vertex_edges():
    P = pyramid()
    assert validate(P)
    apex = find_vertex(P, point=(1, 1, 1))
    assert len(apex.active) == 4
    verts = P.vertices()
    es = edges(P)
    assert len(es) == 8
    assert sum(verts.index(apex) in e for e in es) == 4


def test_simple_adjacency_rule():
    for P in (cube(3), simplex(3), u4()):
        verts = P.vertices()
        es = {frozenset(e) for e in edges(P)}
        for i, j in combinations(range(len(verts)), 2):
            shared = len(verts[i].active & verts[j].active)
            assert (frozenset((i, j)) in es) == (shared == P.d - 1)


def test_combinatorial_distances():
    P = square()
    assert combinatorial_distance(P, find_vertex(P, point=(0, 0)), find_vertex(P, point=(1, 1))) == 2
    C = cube(3)
    assert combinatorial_distance(C, find_vertex(C, point=(0, 0, 0)), find_vertex(C, point=(1, 1, 1))) == 3
    U = u4()
    assert combinatorial_distance(U, find_vertex(U, facets=rows("5678")), find_vertex(U, facets=rows("1234"))) == 5
    assert combinatorial_diameter(simplex(4)) == 1
    assert combinatorial_diameter(cube(4)) == 4
    assert combinatorial_diameter(U) == 5


def test_distance_triangle_inequality_sampled():
    P = u4()
    verts = P.vertices()
    rng = random.Random(7)
    for _ in range(30):
        a, b, c = rng.sample(verts, 3)
        assert combinatorial_distance(P, a, c) <= combinatorial_distance(P, a, b) + combinatorial_distance(P, b, c)


def test_boundedness():
    assert is_bounded(square())
    assert not is_bounded(quadrant())
    assert is_bounded(q4())


def test_bounded_matches_ray_scan():
    for P in (square(), triangle(), hexagon(), cube(3), u4(), q4(), quadrant()):
        has_ray = False
        for g in P.circuits():
            for s in (1, -1):
                sg = tuple(s * x for x in g)
                if all(sum(a * x for a, x in zip(r, sg)) >= 0 for r in P.A):
                    has_ray = True
        assert is_bounded(P) == (not has_ray)


def test_find_vertex():
    P = u4()
    assert find_vertex(P, facets=rows("5678")).point == (0, 0, 0, 0)
    assert find_vertex(P, facets=rows("1234")).label() == "V1234"
    with pytest.raises(VertexNotFound):
        find_vertex(P, facets=[0])
    with pytest.raises(VertexNotFound):
        find_vertex(square(), point=(Fraction(1, 2), 0))


def test_face_restrict_square_side():
    F = face_restrict(square(), {0})
    assert F.dim == 1 and F.polyhedron.f == 2
    ends = sorted(F.to_ambient(v.point) for v in F.polyhedron.vertices())
    assert ends == [(0, 0), (0, 1)]


def test_face_restrict_triangle_hypotenuse():
    F = face_restrict(triangle(), {2})
    ends = sorted(F.to_ambient(v.point) for v in F.polyhedron.vertices())
    assert ends == [(0, 1), (1, 0)]


def test_face_restrict_u4_two_face():
    F = face_restrict(u4(), {0, 3})
    assert F.dim == 2 and F.polyhedron.f == 6
    assert not is_bounded(F.polyhedron)


def test_face_round_trip():
    P = u4()
    F = face_restrict(P, {0, 3})
    for v in P.vertices():
        if {0, 3} <= v.active:
            assert F.to_ambient(F.from_ambient(v.point)) == v.point


def test_face_empty():
    with pytest.raises(EmptyFace):
        face_restrict(square(), {0, 2})


def test_q4_keeps_u4_vertices():
    Q = q4(1)
    assert Q.f == 9 and is_bounded(Q)
    qpts = {v.point for v in Q.vertices()}
    assert all(v.point in qpts for v in u4().vertices())
    u = find_vertex(Q, point=(0, 0, 0, 0))
    v = find_vertex(Q, point=find_vertex(u4(), facets=rows("1234")).point)
    assert combinatorial_distance(Q, u, v) == 5


def test_max_step_lands_feasible():
    P = u4()
    for v in P.vertices():
        for g in P.circuits():
            for s in (1, -1):
                sg = tuple(s * x for x in g)
                try:
                    y, alpha = max_step(P, v.point, sg)
                except UnusableDirection:
                    continue
                assert is_feasible(P, y)
                probe = tuple(a + alpha / 2**20 * x for a, x in zip(y, sg))
                assert not is_feasible(P, probe)
