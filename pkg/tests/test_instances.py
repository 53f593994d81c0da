from fractions import Fraction

import pytest

from circuitdiam.circuits import enumerate_circuits
from circuitdiam.instances import (
    INSTANCE_NAMES,
    by_name,
    cube,
    hexagon,
    pentagon_degenerate,
    q4,
    simplex,
    u4,
)
from circuitdiam.polyhedron import combinatorial_diameter, find_vertex, is_bounded, validate
from circuitdiam.walks import check_csimple


def test_u4_rows():
    P = u4()
    assert P.A[2] == (-35, -45, 6, 3) and P.b[2] == -8
    rep = validate(P)
    assert rep and rep.d == 4 and rep.f == 8 and not is_bounded(P)
    assert find_vertex(P, facets=[0, 1, 2, 3]).active == {0, 1, 2, 3}


def test_small_instances():
    assert (cube(4).f, cube(4).d) == (8, 4)
    S = simplex(3)
    assert (S.f, S.d) == (4, 3) and combinatorial_diameter(S) == 1
    assert not check_csimple(pentagon_degenerate())


def test_hexagon_vertices():
    pts = {v.point for v in hexagon().vertices()}
    assert pts == {(1, 0), (-1, 0), (1, 1), (-1, -1), (0, 1), (0, -1)}


def test_cube_circuits_are_axes():
    assert set(enumerate_circuits(cube(4))) == {tuple(int(i == j) for j in range(4)) for i in range(4)}


def test_q4_margin():
    assert is_bounded(q4(1)) and q4(1).f == 9
    assert q4(Fraction(1, 2)).b[-1] == q4(1).b[-1] + Fraction(1, 2)
    with pytest.raises(ValueError):
        q4(0)


@pytest.mark.parametrize("name", ["u4", "q4", "q4:1/2", "cube:3", "simplex:4", "square", "triangle",
                                  "hexagon", "quadrant", "pentagon"])
def test_every_instance_validates(name):
    assert validate(by_name(name))


def test_by_name_errors():
    with pytest.raises(ValueError):
        by_name("cube")
    with pytest.raises(ValueError):
        by_name("dodecahedron")
    assert "u4" in INSTANCE_NAMES
