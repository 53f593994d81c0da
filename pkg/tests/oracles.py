"""Brute-force reference computations built on sympy, independent of the package's elimination code."""

from fractions import Fraction
from itertools import combinations
import random

import sympy

from circuitdiam.polyhedron import HPolyhedron, validate


def _frac(x):
    x = sympy.Rational(x)
    return Fraction(int(x.p), int(x.q))


def _primitive_canonical(vec):
    vals = [sympy.Rational(x) for x in vec]
    den = sympy.ilcm(*[v.q for v in vals])
    ints = [int(v * den) for v in vals]
    g = 0
    for x in ints:
        g = sympy.igcd(g, x)
    ints = [x // g for x in ints]
    first = next(x for x in ints if x != 0)
    if first < 0:
        ints = [-x for x in ints]
    return tuple(ints)


def support_of(A, g):
    return frozenset(i for i, row in enumerate(A) if sum(sympy.Rational(a) * x for a, x in zip(row, g)) != 0)


def brute_circuits(A):
    """Kernel vectors of all (d-1)-row subsets, kept only when A g has minimal support among them."""
    d = len(A[0])
    M = [[sympy.Rational(str(x)) for x in row] for row in A]
    cands = set()
    for rows in combinations(range(len(M)), d - 1):
        ns = sympy.Matrix([M[i] for i in rows]).nullspace() if d > 1 else [sympy.Matrix([1])]
        if len(ns) == 1:
            cands.add(_primitive_canonical(list(ns[0])))
    supports = {g: support_of(M, g) for g in cands}
    return sorted(g for g in cands if not any(supports[h] < supports[g] for h in cands))


def brute_vertices(A, b):
    """Feasible unique solutions of every d-row subsystem."""
    d = len(A[0])
    M = [[sympy.Rational(str(x)) for x in row] for row in A]
    rhs = [sympy.Rational(str(x)) for x in b]
    found = set()
    for rows in combinations(range(len(M)), d):
        S = sympy.Matrix([M[i] for i in rows])
        if S.det() == 0:
            continue
        x = S.LUsolve(sympy.Matrix([rhs[i] for i in rows]))
        if all(sum(a * xi for a, xi in zip(M[i], x)) >= rhs[i] for i in range(len(M))):
            found.add(tuple(_frac(xi) for xi in x))
    return sorted(found)


def random_instances(count, seed=2024, dims=(2, 3), max_f=8):
    """Seeded valid polyhedra with small integer data; most are unbounded."""
    rng = random.Random(seed)
    out = []
    while len(out) < count:
        d = rng.choice(dims)
        f = rng.randint(d + 1, max_f)
        A = [[rng.randint(-3, 3) for _ in range(d)] for _ in range(f)]
        if rng.random() < 0.3:
            A[:d] = [[int(i == j) for j in range(d)] for i in range(d)]
            b = [0] * d + [rng.randint(-6, 0) for _ in range(f - d)]
        else:
            b = [rng.randint(-6, -1) for _ in range(f)]
        if any(not any(r) for r in A):
            continue
        P = HPolyhedron(A, b)
        if validate(P):
            out.append(P)
    return out
