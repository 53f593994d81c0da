"""H-represented polyhedra ``{x in Q^d : A x >= b}`` and their vertex graphs."""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass, field
from fractions import Fraction
from itertools import combinations
from typing import Iterable, Optional

from .circuits import circuits_of_matrix
from .errors import (
    DimensionMismatch,
    EmptyFace,
    InfeasiblePoint,
    InvalidPolyhedron,
    Unreachable,
    VertexNotFound,
)
from .exact import (
    add,
    dot,
    independent_subset,
    is_zero,
    matrix,
    normalize_primitive,
    rank,
    scale,
    solve_square,
    sub,
    vector,
)


class HPolyhedron:
    """Immutable system ``A x >= b`` with exact rational entries.

    Derived data (vertices, rays, edges) is computed lazily and cached on the
    instance.  Circuits are cached per matrix A, see :mod:`circuitdiam.circuits`.
    """

    __slots__ = ("A", "b", "_cache")

    def __init__(self, A, b):
        A = matrix(A)
        b = vector(b)
        if len(A) != len(b):
            raise DimensionMismatch(f"A has {len(A)} rows but b has {len(b)} entries")
        if not A:
            raise DimensionMismatch("a polyhedron needs at least one row")
        self.A = A
        self.b = b
        self._cache = {}

    @classmethod
    def from_rows(cls, rows):
        """Build from rows ``(a_1, ..., a_d, b)``."""
        rows = [list(r) for r in rows]
        return cls([r[:-1] for r in rows], [r[-1] for r in rows])

    @property
    def d(self) -> int:
        return len(self.A[0])

    @property
    def f(self) -> int:
        return len(self.A)

    def rows(self):
        return list(zip(self.A, self.b))

    def slack(self, x) -> tuple:
        return tuple(dot(a, x) - bi for a, bi in zip(self.A, self.b))

    def circuits(self) -> tuple:
        return circuits_of_matrix(self.A)

    def vertices(self) -> list:
        if "vertices" not in self._cache:
            self._cache["vertices"] = enumerate_vertices(self)
        return self._cache["vertices"]

    def __eq__(self, other):
        return isinstance(other, HPolyhedron) and self.A == other.A and self.b == other.b

    def __hash__(self):
        return hash((self.A, self.b))

    def __repr__(self):
        return f"HPolyhedron(d={self.d}, f={self.f})"


@dataclass(frozen=True, order=True)
class Vertex:
    point: tuple
    active: frozenset = field(compare=False)

    def label(self) -> str:
        """Label built from the 1-based incident rows, e.g. ``V5678``."""
        sep = "," if any(i >= 9 for i in self.active) else ""
        return "V" + sep.join(str(i + 1) for i in sorted(self.active))


def _check_dim(P, x):
    if len(x) != P.d:
        raise DimensionMismatch(f"point has {len(x)} coordinates, polyhedron has d={P.d}")


def is_feasible(P: HPolyhedron, x) -> bool:
    x = vector(x)
    _check_dim(P, x)
    return all(s >= 0 for s in P.slack(x))


def active_set(P: HPolyhedron, x) -> frozenset:
    x = vector(x)
    _check_dim(P, x)
    s = P.slack(x)
    if any(v < 0 for v in s):
        raise InfeasiblePoint(f"{x} violates rows {[i for i, v in enumerate(s) if v < 0]}")
    return frozenset(i for i, v in enumerate(s) if v == 0)


def active_rank(P: HPolyhedron, x) -> int:
    act = active_set(P, x)
    return rank([P.A[i] for i in act]) if act else 0


def enumerate_vertices(P: HPolyhedron) -> list:
    """All vertices, by solving every d-subset of rows and keeping feasible points."""
    d = P.d
    seen = {}
    for S in combinations(range(P.f), d):
        x = solve_square([P.A[i] for i in S], [P.b[i] for i in S])
        if x is None or x in seen:
            continue
        if all(s >= 0 for s in P.slack(x)):
            seen[x] = None
    out = [Vertex(x, active_set(P, x)) for x in seen]
    out.sort()
    return out


def extreme_rays(P: HPolyhedron) -> list:
    """Primitive generators of the extreme rays of the recession cone ``A r >= 0``.

    For a pointed cone every extreme ray is tight on d - 1 independent rows, so
    these are exactly the signed circuits g with ``A g >= 0``.
    """
    rays = []
    for g in circuits_of_matrix(P.A):
        for s in (g, tuple(-x for x in g)):
            if all(dot(a, s) >= 0 for a in P.A):
                rays.append(s)
    return rays


def is_bounded(P: HPolyhedron) -> bool:
    return not extreme_rays(P)


@dataclass
class ValidationReport:
    valid: bool
    d: int
    f: int
    rank: int
    dimension: int
    bad_rows: dict = field(default_factory=dict)
    messages: list = field(default_factory=list)

    def __bool__(self):
        return self.valid


def _affine_dim(points, rays) -> int:
    if not points:
        return -1
    p0 = points[0]
    gens = [sub(p, p0) for p in points[1:]] + [tuple(r) for r in rays]
    gens = [g for g in gens if not is_zero(g)]
    return rank(gens) if gens else 0


def _same_halfspace(a1, b1, a2, b2) -> bool:
    """True when (a1, b1) is a positive multiple of (a2, b2)."""
    i = next(j for j, x in enumerate(a2) if x != 0) if not is_zero(a2) else None
    if i is None or a1[i] == 0 or (a1[i] > 0) != (a2[i] > 0):
        return False
    c = a1[i] / a2[i]
    return all(x == c * y for x, y in zip(a1, a2)) and b1 == c * b2


def validate(P: HPolyhedron) -> ValidationReport:
    """Check that P is pointed, full-dimensional and irredundant.

    Never raises; problems are collected in the report, keyed by row index.
    """
    r = rank(P.A)
    rep = ValidationReport(True, P.d, P.f, r, -1)
    if r < P.d:
        rep.valid = False
        rep.messages.append(f"rank(A) = {r} < d = {P.d}: polyhedron is not pointed")
        return rep
    verts = P.vertices()
    if not verts:
        rep.valid = False
        rep.messages.append("polyhedron is empty")
        return rep
    rays = extreme_rays(P)
    rep.dimension = _affine_dim([v.point for v in verts], rays)
    if rep.dimension < P.d:
        rep.valid = False
        rep.messages.append(f"polyhedron has dimension {rep.dimension} < {P.d}")
        return rep
    for i, (a, bi) in enumerate(P.rows()):
        if is_zero(a):
            rep.bad_rows[i] = "zero normal"
            continue
        fv = [v.point for v in verts if i in v.active]
        fr = [g for g in rays if dot(a, g) == 0]
        fd = _affine_dim(fv, fr)
        if fd < 0:
            rep.bad_rows[i] = "never tight on P"
        elif fd < P.d - 1:
            rep.bad_rows[i] = f"supports a face of dimension {fd}, not a facet"
        else:
            for j in range(i):
                if j not in rep.bad_rows and _same_halfspace(a, bi, P.A[j], P.b[j]):
                    rep.bad_rows[i] = f"duplicates row {j}"
                    break
    if rep.bad_rows:
        rep.valid = False
        rep.messages.append(f"redundant rows: {sorted(rep.bad_rows)}")
    return rep


def require_valid(P: HPolyhedron) -> HPolyhedron:
    rep = validate(P)
    if not rep:
        raise InvalidPolyhedron("; ".join(rep.messages), rep)
    return P


def irredundant(P: HPolyhedron) -> HPolyhedron:
    """Drop redundant rows, keeping the lowest index among duplicates."""
    rep = validate(P)
    if rep.messages and not rep.bad_rows:
        raise InvalidPolyhedron("; ".join(rep.messages), rep)
    keep = [i for i in range(P.f) if i not in rep.bad_rows]
    return HPolyhedron([P.A[i] for i in keep], [P.b[i] for i in keep])


def find_vertex(P: HPolyhedron, point=None, facets: Optional[Iterable[int]] = None) -> Vertex:
    """Look a vertex up by exact coordinates or by a set of (0-based) incident rows.

    A facet set must identify exactly one vertex.
    """
    verts = P.vertices()
    if point is not None:
        p = vector(point)
        for v in verts:
            if v.point == p:
                return v
        raise VertexNotFound(f"{p} is not a vertex")
    want = frozenset(facets)
    hits = [v for v in verts if want <= v.active]
    if len(hits) != 1:
        lab = ",".join(str(i + 1) for i in sorted(want))
        raise VertexNotFound(f"facets {{{lab}}} match {len(hits)} vertices, expected exactly one")
    return hits[0]


def _strictly_between(w, u, v) -> bool:
    """w = u + t (v - u) for some 0 < t < 1."""
    d = sub(v, u)
    i = next(j for j, x in enumerate(d) if x != 0)
    t = (w[i] - u[i]) / d[i]
    return 0 < t < 1 and all(w[j] == u[j] + t * d[j] for j in range(len(d)))


def edges(P: HPolyhedron) -> list:
    """Bounded edges as index pairs (i, j), i < j, into ``P.vertices()``."""
    if "edges" in P._cache:
        return P._cache["edges"]
    verts = P.vertices()
    out = []
    for i, j in combinations(range(len(verts)), 2):
        common = verts[i].active & verts[j].active
        if len(common) < P.d - 1 or rank([P.A[k] for k in common]) != P.d - 1:
            continue
        u, v = verts[i].point, verts[j].point
        if any(_strictly_between(w.point, u, v) for k, w in enumerate(verts) if k not in (i, j)):
            continue
        out.append((i, j))
    P._cache["edges"] = out
    return out


def adjacency(P: HPolyhedron) -> list:
    adj = [[] for _ in P.vertices()]
    for i, j in edges(P):
        adj[i].append(j)
        adj[j].append(i)
    return adj


def _bfs_graph(adj, src) -> list:
    dist = [None] * len(adj)
    dist[src] = 0
    q = deque([src])
    while q:
        x = q.popleft()
        for y in adj[x]:
            if dist[y] is None:
                dist[y] = dist[x] + 1
                q.append(y)
    return dist


def _index(P, v) -> int:
    verts = P.vertices()
    p = v.point if isinstance(v, Vertex) else vector(v)
    for i, w in enumerate(verts):
        if w.point == p:
            return i
    raise VertexNotFound(f"{p} is not a vertex")


def combinatorial_distance(P: HPolyhedron, u, v) -> int:
    dist = _bfs_graph(adjacency(P), _index(P, u))[_index(P, v)]
    if dist is None:
        raise Unreachable("vertices lie in different components of the vertex graph")
    return dist


def combinatorial_diameter(P: HPolyhedron) -> int:
    adj = adjacency(P)
    best = 0
    for s in range(len(adj)):
        dist = _bfs_graph(adj, s)
        if any(x is None for x in dist):
            raise Unreachable("vertex graph is disconnected")
        best = max(best, max(dist))
    return best


@dataclass(frozen=True)
class Face:
    """A face of P as a full-dimensional polyhedron in its own affine coordinates.

    Ambient points are ``origin + sum(z_k * basis[k])``.  ``row_map[j]`` is the
    row of the parent polyhedron that induces row j of ``polyhedron``.
    """

    polyhedron: Optional[HPolyhedron]
    origin: tuple
    basis: tuple
    row_map: tuple
    tight_rows: frozenset
    _pivots: tuple

    @property
    def dim(self) -> int:
        return len(self.basis)

    def to_ambient(self, z) -> tuple:
        z = vector(z)
        x = self.origin
        for zk, bk in zip(z, self.basis):
            x = add(x, scale(zk, bk))
        return x

    def from_ambient(self, x) -> tuple:
        x = vector(x)
        rhs = sub(x, self.origin)
        if not self.basis:
            if not is_zero(rhs):
                raise ValueError("point is not in the face")
            return ()
        M = [[bk[r] for bk in self.basis] for r in self._pivots]
        z = solve_square(M, [rhs[r] for r in self._pivots])
        if self.to_ambient(z) != x:
            raise ValueError("point is not in the affine hull of the face")
        return z

    def direction_to_ambient(self, w) -> tuple:
        x = tuple(Fraction(0) for _ in self.origin)
        for wk, bk in zip(vector(w), self.basis):
            x = add(x, scale(wk, bk))
        return x


def face_restrict(P: HPolyhedron, rows) -> Face:
    """The face where all ``rows`` are tight, re-expressed in its affine hull."""
    rows = frozenset(rows)
    verts = [v for v in P.vertices() if rows <= v.active]
    if not verts:
        raise EmptyFace(f"rows {sorted(rows)} have no common point on P")
    rays = [r for r in extreme_rays(P) if all(dot(P.A[i], r) == 0 for i in rows)]
    origin = verts[0].point
    gens = [sub(v.point, origin) for v in verts[1:]] + rays
    basis = tuple(normalize_primitive(gens[i]) for i in independent_subset(gens))
    tight = frozenset(
        i for i in range(P.f) if all(i in v.active for v in verts) and all(dot(P.A[i], r) == 0 for r in rays)
    )
    if not basis:
        return Face(None, origin, (), (), tight, ())
    pivots = tuple(independent_subset([[bk[r] for bk in basis] for r in range(P.d)]))
    cand_A, cand_b, cand_map = [], [], []
    for j in range(P.f):
        if j in tight:
            continue
        a = tuple(dot(P.A[j], bk) for bk in basis)
        if is_zero(a):
            continue
        cand_A.append(a)
        cand_b.append(P.b[j] - dot(P.A[j], origin))
        cand_map.append(j)
    Q = HPolyhedron(cand_A, cand_b)
    rep = validate(Q)
    keep = [i for i in range(Q.f) if i not in rep.bad_rows]
    Q = HPolyhedron([cand_A[i] for i in keep], [cand_b[i] for i in keep])
    return Face(Q, origin, basis, tuple(cand_map[i] for i in keep), tight, pivots)

