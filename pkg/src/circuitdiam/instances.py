"""Built-in exact polyhedra."""

from __future__ import annotations

from fractions import Fraction

from .exact import rational
from .polyhedron import HPolyhedron

U4_A = (
    (-6, -3, 0, 1),
    (-3, -6, 1, 0),
    (-35, -45, 6, 3),
    (-45, -35, 3, 6),
    (1, 0, 0, 0),
    (0, 1, 0, 0),
    (0, 0, 1, 0),
    (0, 0, 0, 1),
)
U4_B = (-1, -1, -8, -8, 0, 0, 0, 0)


def u4() -> HPolyhedron:
    """The Klee-Walkup polyhedron: 4-dimensional, 8 facets, unbounded, graph diameter 5."""
    return HPolyhedron(U4_A, U4_B)


def q4(margin=1) -> HPolyhedron:
    """U4 truncated by ``-sum(x) >= -(S + margin)``, S the largest coordinate sum of a U4 vertex."""
    margin = rational(margin)
    if margin <= 0:
        raise ValueError("margin must be positive")
    s = max(sum(v.point) for v in u4().vertices())
    return HPolyhedron(U4_A + ((-1, -1, -1, -1),), U4_B + (-(s + margin),))


def cube(d: int) -> HPolyhedron:
    """``0 <= x_i <= 1``; rows ordered x_1 >= 0, ..., x_d >= 0, then -x_1 >= -1, ..."""
    if d < 1:
        raise ValueError("d must be positive")
    eye = [[int(i == j) for j in range(d)] for i in range(d)]
    return HPolyhedron(eye + [[-x for x in r] for r in eye], [0] * d + [-1] * d)


def simplex(d: int) -> HPolyhedron:
    """``x_i >= 0`` and ``-sum(x) >= -1``."""
    if d < 1:
        raise ValueError("d must be positive")
    eye = [[int(i == j) for j in range(d)] for i in range(d)]
    return HPolyhedron(eye + [[-1] * d], [0] * d + [-1])


def square() -> HPolyhedron:
    return cube(2)


def triangle() -> HPolyhedron:
    return simplex(2)


def quadrant() -> HPolyhedron:
    return HPolyhedron([[1, 0], [0, 1]], [0, 0])


def hexagon() -> HPolyhedron:
    """Affinely regular hexagon with vertices ±(1,0), ±(1,1), ±(0,1)."""
    return HPolyhedron(
        [[-1, 0], [0, -1], [1, -1], [1, 0], [0, 1], [-1, 1]],
        [-1, -1, -1, -1, -1, -1],
    )


def pentagon_degenerate() -> HPolyhedron:
    """The unit square with its top-right corner cut by ``x + y <= 3/2``.

    A diagonal step from (0, 1) lands on two new facets at once, so this
    polygon is not C-simple.
    """
    return HPolyhedron(
        [[1, 0], [0, 1], [-1, 0], [0, -1], [-1, -1]],
        [0, 0, -1, -1, Fraction(-3, 2)],
    )


_NAMED = {
    "u4": u4,
    "square": square,
    "triangle": triangle,
    "hexagon": hexagon,
    "quadrant": quadrant,
    "pentagon": pentagon_degenerate,
}
_PARAMETRIC = {"q4": q4, "cube": cube, "simplex": simplex}


def by_name(name_arg: str) -> HPolyhedron:
    """Resolve CLI names like ``u4``, ``cube:3`` or ``q4:1/2``."""
    name, _, arg = name_arg.strip().lower().partition(":")
    if name in _NAMED and not arg:
        return _NAMED[name]()
    if name in _PARAMETRIC:
        if name == "q4":
            return q4(rational(arg) if arg else 1)
        if not arg:
            raise ValueError(f"{name} needs a dimension, e.g. {name}:3")
        return _PARAMETRIC[name](int(arg))
    raise ValueError(f"unknown instance {name_arg!r}")


INSTANCE_NAMES = sorted(_NAMED) + ["q4:margin", "cube:d", "simplex:d"]
