"""Circuits (elementary vectors) of an H-polyhedron ``{x : A x >= b}``.

A nonzero direction g is a circuit when the rows of A orthogonal to g have
rank d - 1, i.e. A g is support-minimal.  Circuits depend on A only, so the
enumeration is cached per matrix and shared by every right-hand side.
"""

from __future__ import annotations

from fractions import Fraction
from functools import lru_cache
from itertools import combinations

from .errors import ZeroVector
from .exact import (
    canonical_sign,
    dot,
    is_zero,
    kernel_basis,
    normalize_primitive,
    rank,
    rational,
)


@lru_cache(maxsize=512)
def circuits_of_matrix(A: tuple) -> tuple:
    """Sign-canonical primitive circuits of A in lexicographic order."""
    d = len(A[0])
    found = set()
    for rows in combinations(A, d - 1):
        if rank(rows) != d - 1:
            continue
        (k,) = kernel_basis(rows, ncols=d)
        found.add(canonical_sign(normalize_primitive(k)))
    return tuple(sorted(found))


def enumerate_circuits(P) -> tuple:
    return circuits_of_matrix(P.A)


def signed_circuits(P) -> tuple:
    """Both signs of every circuit: g1, -g1, g2, -g2, ..."""
    out = []
    for g in enumerate_circuits(P):
        out.append(g)
        out.append(tuple(-x for x in g))
    return tuple(out)


def is_circuit(P, g) -> bool:
    g = tuple(map(rational, g))
    if is_zero(g):
        raise ZeroVector("the zero vector is never a circuit")
    tight = [a for a in P.A if dot(a, g) == 0]
    return rank(tight) == P.d - 1 if tight else P.d == 1


def lift_direction(a_k, slope, c) -> tuple:
    """Image of a lower-base direction c on the upper base of a wedge."""
    c = tuple(map(Fraction, c))
    return normalize_primitive(c + (dot(a_k, c) / slope,))


def predicted_wedge_circuits(P, k: int, slope=1) -> tuple:
    """Circuits of ``wedge(P, k, slope)`` built directly from the circuits of P.

    The three families are the vertical axis, each circuit c lifted flat as
    (c, 0), and each c carried onto the upper base as (c, a_k.c / slope).
    """
    slope = rational(slope)
    a_k = P.A[k]
    out = {(Fraction(0),) * P.d + (Fraction(1),)}
    for c in enumerate_circuits(P):
        out.add(canonical_sign(c + (Fraction(0),)))
        out.add(canonical_sign(lift_direction(a_k, slope, c)))
    return tuple(sorted(out))


def support(values) -> frozenset:
    return frozenset(i for i, x in enumerate(values) if x != 0)
