"""Maximal circuit walks: single steps, validation and exhaustive search.

Searches run on an integer-scaled copy of the system.  A point y is held as
``(Y, D)`` with ``y = Y / D``, ``gcd(Y, D) = 1`` and the scaled slack
``S = A Y - b D``; a maximal step then needs integer arithmetic only.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from functools import reduce
from math import gcd
from typing import Optional

from .circuits import enumerate_circuits, is_circuit, signed_circuits
from .errors import BlockedDirection, InfeasiblePoint, UnboundedDirection
from .exact import (
    add,
    canonical_sign,
    dot,
    format_rational,
    is_zero,
    normalize_primitive,
    rank,
    scale,
    sub,
    vector,
)
from .polyhedron import (
    HPolyhedron,
    Vertex,
    active_set,
    adjacency,
    combinatorial_diameter,
    edges,
    is_feasible,
)

@dataclass(frozen=True)
class Step:
    circuit: tuple
    alpha: Fraction
    entered: frozenset
    left: frozenset


@dataclass(frozen=True)
class CircuitWalk:
    points: tuple
    steps: tuple

    def __len__(self):
        return len(self.steps)

    @property
    def length(self) -> int:
        return len(self.steps)

    def to_json(self) -> dict:
        return {
            "length": self.length,
            "points": [[format_rational(x) for x in p] for p in self.points],
            "steps": [
                {
                    "circuit": [format_rational(x) for x in s.circuit],
                    "alpha": format_rational(s.alpha),
                    "entered": sorted(i + 1 for i in s.entered),
                    "left": sorted(i + 1 for i in s.left),
                }
                for s in self.steps
            ],
        }


@dataclass(frozen=True)
class SearchConfig:
    """Search horizon and optional start set M (``None`` means the vertex set)."""

    depth_limit: Optional[int] = None
    start_points: Optional[tuple] = None

    def __post_init__(self):
        if self.depth_limit is not None and self.depth_limit < 1:
            raise ValueError("depth_limit must be at least 1")


def default_horizon(P: HPolyhedron) -> int:
    return max(combinatorial_diameter(P), P.f - P.d) + 1


def _horizon(P, cfg: Optional[SearchConfig], extra: int = 0) -> int:
    if cfg is not None and cfg.depth_limit is not None:
        return cfg.depth_limit
    return default_horizon(P) + extra


def max_step(P: HPolyhedron, y, g) -> tuple:
    """Walk from y along g as far as P allows; returns ``(landing point, alpha)``."""
    y, g = vector(y), vector(g)
    if not is_feasible(P, y):
        raise InfeasiblePoint(f"{y} is not in P")
    alpha = None
    for a, bi in P.rows():
        ag = dot(a, g)
        if ag < 0:
            t = (dot(a, y) - bi) / -ag
            if alpha is None or t < alpha:
                alpha = t
    if alpha is None:
        raise UnboundedDirection(f"{g} is a recession direction of P")
    if alpha == 0:
        raise BlockedDirection(f"{g} leaves P immediately at {y}")
    return add(y, scale(alpha, g)), alpha


class _Engine:
    """Integer-scaled successor generator for one polyhedron."""

    def __init__(self, P: HPolyhedron):
        self.P = P
        rows = []
        for a, bi in P.rows():
            den = reduce(lambda x, y: x * y // gcd(x, y), [q.denominator for q in a] + [bi.denominator], 1)
            rows.append((tuple(int(q * den) for q in a), int(bi * den)))
        self.A = tuple(r[0] for r in rows)
        self.b = tuple(r[1] for r in rows)
        self.dirs = []
        for g in signed_circuits(P):
            gi = tuple(int(x) for x in g)
            ag = tuple(sum(x * y for x, y in zip(a, gi)) for a in self.A)
            neg = tuple((i, -v) for i, v in enumerate(ag) if v < 0)
            if neg:
                self.dirs.append((g, gi, ag, neg))
        self.f = len(self.A)

    def encode(self, y) -> tuple:
        y = vector(y)
        D = reduce(lambda x, z: x * z // gcd(x, z), (q.denominator for q in y), 1)
        Y = tuple(int(q * D) for q in y)
        S = tuple(sum(x * z for x, z in zip(a, Y)) - bi * D for a, bi in zip(self.A, self.b))
        if any(s < 0 for s in S):
            raise InfeasiblePoint(f"{y} is not in P")
        return Y, D, S

    @staticmethod
    def decode(Y, D) -> tuple:
        return tuple(Fraction(x, D) for x in Y)

    @staticmethod
    def active(S) -> frozenset:
        return frozenset(i for i, s in enumerate(S) if s == 0)

    def moves(self, Y, D, S):
        """Yield ``(dir index, Y', D', S', (p, q))`` per usable signed circuit; the step length is p/q."""
        for k, (g, gi, ag, neg) in enumerate(self.dirs):
            bs, bc = None, None
            for i, c in neg:
                s = S[i]
                if s == 0:
                    break
                if bs is None or s * bc < bs * c:
                    bs, bc = s, c
            else:
                Y2 = [bc * y + bs * x for y, x in zip(Y, gi)]
                D2 = D * bc
                S2 = [bc * s + bs * v for s, v in zip(S, ag)]
                h = reduce(gcd, Y2, D2)
                if h > 1:
                    Y2 = [y // h for y in Y2]
                    D2 //= h
                    S2 = [s // h for s in S2]
                yield k, tuple(Y2), D2, tuple(S2), (bs, D * bc)

    def arrivals(self, S) -> dict:
        """Primitive directions whose maximal steps can end at the point with slack S.

        A step along g ends there exactly when some row decreasing along g is
        tight there, whatever the start of the step.
        """
        tight = self.active(S)
        return {gi: k for k, (g, gi, ag, neg) in enumerate(self.dirs) if any(i in tight for i, _ in neg)}

    @staticmethod
    def arrival_dir(Y, D, tY, tD, allowed):
        """Index of the direction that carries Y/D to tY/tD in one maximal step, or None."""
        diff = [ty * D - y * tD for y, ty in zip(Y, tY)]
        h = reduce(gcd, diff, 0)
        if h == 0:
            return None
        return allowed.get(tuple(x // h for x in diff))


def successors(P: HPolyhedron, y) -> list:
    """Landing points of all maximal steps from y, with every circuit reaching each."""
    eng = _Engine(P)
    Y, D, S = eng.encode(y)
    out = {}
    for k, Y2, D2, S2, alpha in eng.moves(Y, D, S):
        key = (Y2, D2)
        if key not in out:
            out[key] = (eng.decode(Y2, D2), [], Fraction(*alpha))
        out[key][1].append(eng.dirs[k][0])
    return sorted(((p, tuple(gs), a) for p, gs, a in out.values()), key=lambda t: t[0])


# ---------------------------------------------------------------- validation


@dataclass
class WalkReport:
    valid: bool
    walk: Optional[CircuitWalk]
    violations: list = field(default_factory=list)

    def __bool__(self):
        return self.valid


def validate_walk(P: HPolyhedron, points, mode: str = "maximal") -> WalkReport:
    """Check the circuit-walk axioms step by step.

    ``mode="edge"`` additionally requires every segment to be an edge of P.
    """
    if mode not in ("maximal", "edge"):
        raise ValueError("mode must be 'maximal' or 'edge'")
    pts = [vector(p) for p in points]
    if len(pts) < 2:
        raise ValueError("a walk needs at least two points")
    bad = []
    circuits = set(enumerate_circuits(P))
    actives = []
    for i, p in enumerate(pts):
        if len(p) != P.d or not is_feasible(P, p):
            bad.append((i, "point infeasible"))
            actives.append(frozenset())
        else:
            actives.append(active_set(P, p))
    edge_set = None
    if mode == "edge":
        verts = P.vertices()
        idx = {v.point: k for k, v in enumerate(verts)}
        edge_set = {frozenset(e) for e in edges(P)}
    steps = []
    for i in range(len(pts) - 1):
        y0, y1 = pts[i], pts[i + 1]
        diff = sub(y1, y0)
        if is_zero(diff):
            bad.append((i, "zero-length step"))
            continue
        g = normalize_primitive(diff)
        alpha = next(x / c for x, c in zip(diff, g) if c != 0)
        if canonical_sign(g) not in circuits:
            bad.append((i, f"direction {list(map(format_rational, g))} is not a circuit"))
        rows_down = [j for j, a in enumerate(P.A) if dot(a, g) < 0]
        if not any(j in actives[i + 1] for j in rows_down):
            bad.append((i, "step is not maximal"))
        if mode == "edge":
            a, b = idx.get(y0), idx.get(y1)
            if a is None or b is None or frozenset((a, b)) not in edge_set:
                bad.append((i, "segment is not an edge of P"))
        steps.append(Step(g, alpha, actives[i + 1] - actives[i], actives[i] - actives[i + 1]))
    if bad:
        return WalkReport(False, None, bad)
    return WalkReport(True, CircuitWalk(tuple(pts), tuple(steps)))


def _walk_from_keys(eng, keys, dir_ids) -> CircuitWalk:
    pts = [eng.decode(*k) for k in keys]
    P = eng.P
    acts = [active_set(P, p) for p in pts]
    steps = []
    for i, k in enumerate(dir_ids):
        g = eng.dirs[k][0]
        diff = sub(pts[i + 1], pts[i])
        alpha = next(x / c for x, c in zip(diff, g) if c != 0)
        steps.append(Step(g, alpha, acts[i + 1] - acts[i], acts[i] - acts[i + 1]))
    return CircuitWalk(tuple(pts), tuple(steps))


def _trace(parents, key):
    keys, dirs = [key], []
    while parents[key] is not None:
        key, k = parents[key]
        keys.append(key)
        dirs.append(k)
    return keys[::-1], dirs[::-1]


# ---------------------------------------------------------------- distances


@dataclass
class DistanceResult:
    """Exact distance when ``distance`` is set, otherwise ``> depth_limit``."""

    distance: Optional[int]
    depth_limit: int
    walk: Optional[CircuitWalk] = None
    states: int = 0

    @property
    def exact(self) -> bool:
        return self.distance is not None

    def __str__(self):
        return str(self.distance) if self.exact else f"> {self.depth_limit}"


def _point_of(target):
    return target.point if isinstance(target, Vertex) else vector(target)


def circuit_distance(P: HPolyhedron, start, target, cfg: Optional[SearchConfig] = None) -> DistanceResult:
    """Directed circuit distance by breadth-first search over exact landing points.

    From a start that is not a vertex the default horizon also covers
    ``f - d' + 1``, d' the rank of the rows active at the start.  The last
    layer is never expanded: a frontier point is one step from the
    target exactly when their difference is an arriving circuit direction.
    """
    limit = _horizon(P, cfg)
    if cfg is None or cfg.depth_limit is None:
        act = active_set(P, _point_of(start))
        dprime = rank([P.A[i] for i in act]) if act else 0
        limit = max(limit, P.f - dprime + 1)
    eng = _Engine(P)
    Y, D, S = eng.encode(_point_of(start))
    tY, tD, tS = eng.encode(_point_of(target))
    src, goal = (Y, D), (tY, tD)
    parents = {src: None}
    if src == goal:
        return DistanceResult(0, limit, _walk_from_keys(eng, [src], []), 1)
    allowed = eng.arrivals(tS)
    frontier = [(Y, D, S)]
    for depth in range(1, limit + 1):
        for Y, D, S in frontier:
            k = eng.arrival_dir(Y, D, tY, tD, allowed)
            if k is not None:
                parents[goal] = ((Y, D), k)
                keys, dirs = _trace(parents, goal)
                return DistanceResult(depth, limit, _walk_from_keys(eng, keys, dirs), len(parents))
        if depth == limit:
            break
        nxt = []
        for Y, D, S in frontier:
            for k, Y2, D2, S2, _ in eng.moves(Y, D, S):
                key = (Y2, D2)
                if key not in parents:
                    parents[key] = ((Y, D), k)
                    nxt.append((Y2, D2, S2))
        frontier = nxt
        if not frontier:
            break
    return DistanceResult(None, limit, None, len(parents))


def distances_from(P: HPolyhedron, start, targets, depth_limit: int, eng=None) -> dict:
    """BFS from ``start`` until every target point is reached or the horizon ends.

    Returns ``{target point: distance}``; unreached targets are absent.
    """
    eng = eng or _Engine(P)
    Y, D, S = eng.encode(_point_of(start))
    want = {}
    for t in targets:
        tY, tD, tS = eng.encode(_point_of(t))
        want[(tY, tD)] = (_point_of(t), eng.arrivals(tS))
    found = {}
    if (Y, D) in want:
        found[want.pop((Y, D))[0]] = 0
    seen = {(Y, D)}
    frontier = [(Y, D, S)]
    depth = 0
    while frontier and want and depth < depth_limit:
        depth += 1
        for Y, D, S in frontier:
            for key in [k for k, (_, allowed) in want.items() if eng.arrival_dir(Y, D, *k, allowed) is not None]:
                found[want.pop(key)[0]] = depth
            if not want:
                break
        if not want or depth == depth_limit:
            break
        nxt = []
        for Y, D, S in frontier:
            for _, Y2, D2, S2, _ in eng.moves(Y, D, S):
                key = (Y2, D2)
                if key not in seen:
                    seen.add(key)
                    nxt.append((Y2, D2, S2))
        frontier = nxt
    return found


@dataclass
class DiameterResult:
    """``diameter`` is exact when every ordered vertex pair was resolved."""

    diameter: Optional[int]
    depth_limit: int
    lower_bound: int
    distances: dict
    unresolved: list

    @property
    def exact(self) -> bool:
        return not self.unresolved

    def __str__(self):
        return str(self.diameter) if self.exact else f"> {self.depth_limit}"


def circuit_diameter(P: HPolyhedron, cfg: Optional[SearchConfig] = None) -> DiameterResult:
    """Maximum directed circuit distance over ordered vertex pairs."""
    limit = _horizon(P, cfg)
    verts = P.vertices()
    eng = _Engine(P)
    dist, unresolved = {}, []
    for u in verts:
        found = distances_from(P, u, [v for v in verts if v is not u], limit, eng)
        for v in verts:
            if v is u:
                continue
            if v.point in found:
                dist[(u.point, v.point)] = found[v.point]
            else:
                unresolved.append((u.point, v.point))
    lb = max(dist.values(), default=0)
    if unresolved:
        return DiameterResult(None, limit, max(lb, limit + 1), dist, unresolved)
    return DiameterResult(lb, limit, lb, dist, [])


# ---------------------------------------------------------------- C-simplicity


@dataclass
class CSimpleResult:
    csimple: bool
    depth_limit: int
    witness: Optional[dict] = None
    states: int = 0

    def __bool__(self):
        return self.csimple


def check_csimple(P: HPolyhedron, cfg: Optional[SearchConfig] = None) -> CSimpleResult:
    """Search every maximal walk up to the horizon for a step entering two or more facets.

    With explicit start points (the set M) the default horizon grows by d.
    """
    starts = None if cfg is None else cfg.start_points
    if starts is None:
        starts = [v.point for v in P.vertices()]
        limit = _horizon(P, cfg)
    else:
        starts = [_point_of(p) for p in starts]
        vset = {v.point for v in P.vertices()}
        starts = sorted(vset) + sorted({vector(p) for p in starts} - vset)
        limit = _horizon(P, cfg, extra=P.d)
    eng = _Engine(P)
    parents = {}
    frontier = []
    for p in starts:
        Y, D, S = eng.encode(p)
        if (Y, D) not in parents:
            parents[(Y, D)] = None
            frontier.append((Y, D, S))
    for _ in range(limit):
        nxt = []
        for Y, D, S in frontier:
            before = eng.active(S)
            for k, Y2, D2, S2, alpha in eng.moves(Y, D, S):
                after = eng.active(S2)
                entered = after - before
                if len(entered) >= 2:
                    keys, dirs = _trace(parents, (Y, D))
                    prefix = _walk_from_keys(eng, keys, dirs)
                    witness = {
                        "from": eng.decode(Y, D),
                        "to": eng.decode(Y2, D2),
                        "circuit": eng.dirs[k][0],
                        "alpha": Fraction(*alpha),
                        "entered": entered,
                        "left": before - after,
                        "prefix": prefix,
                    }
                    return CSimpleResult(False, limit, witness, len(parents))
                key = (Y2, D2)
                if key not in parents:
                    parents[key] = ((Y, D), k)
                    nxt.append((Y2, D2, S2))
        frontier = nxt
        if not frontier:
            break
    return CSimpleResult(True, limit, None, len(parents))


# ---------------------------------------------------------------- non-revisiting


def _new_facet_steps_ok(P, walk: CircuitWalk) -> bool:
    """Every step activates a facet never active at an earlier point of the walk."""
    seen = set(active_set(P, walk.points[0]))
    for p in walk.points[1:]:
        act = active_set(P, p)
        if not act - seen:
            return False
        seen |= act
    return True


def find_nonrevisiting_walk(P: HPolyhedron, start, target, cfg: Optional[SearchConfig] = None) -> Optional[CircuitWalk]:
    """Shortest walk in which each step activates a facet not active at any earlier point.

    The depth cap defaults to ``f - d'`` with d' the rank of the rows active at the start.
    """
    p0 = _point_of(start)
    act0 = active_set(P, p0)
    dprime = rank([P.A[i] for i in act0]) if act0 else 0
    limit = cfg.depth_limit if cfg is not None and cfg.depth_limit is not None else P.f - dprime
    eng = _Engine(P)
    Y, D, S = eng.encode(p0)
    tY, tD, _ = eng.encode(_point_of(target))
    goal = (tY, tD)
    root = ((Y, D), act0)
    if (Y, D) == goal:
        return _walk_from_keys(eng, [(Y, D)], [])
    parents = {root: None}
    frontier = [(Y, D, S, act0)]
    for _ in range(limit):
        nxt = []
        for Y, D, S, seen in frontier:
            here = ((Y, D), seen)
            for k, Y2, D2, S2, _ in eng.moves(Y, D, S):
                after = eng.active(S2)
                if after <= seen:
                    continue
                state = ((Y2, D2), seen | after)
                if state in parents:
                    continue
                parents[state] = (here, k)
                if (Y2, D2) == goal:
                    states, dirs = _trace(parents, state)
                    return _walk_from_keys(eng, [s[0] for s in states], dirs)
                nxt.append((Y2, D2, S2, seen | after))
        frontier = nxt
        if not frontier:
            break
    return None


def facet_gaining_edge_walk(P: HPolyhedron, u, v, target_rows) -> Optional[CircuitWalk]:
    """Shortest edge walk u -> v where every step activates a target row not yet activated."""
    verts = P.vertices()
    idx = {w.point: i for i, w in enumerate(verts)}
    s, t = idx[_point_of(u)], idx[_point_of(v)]
    target = frozenset(target_rows)
    adj = adjacency(P)
    root = (s, verts[s].active & target)
    parents = {root: None}
    frontier = [root]
    goal = None
    while frontier and goal is None:
        nxt = []
        for state in frontier:
            x, got = state
            for y in adj[x]:
                new = verts[y].active & target
                if new <= got:
                    continue
                st = (y, got | new)
                if st in parents:
                    continue
                parents[st] = (state, None)
                if y == t:
                    goal = st
                    break
                nxt.append(st)
            if goal is not None:
                break
        frontier = nxt
    if goal is None:
        return CircuitWalk((verts[s].point,), ()) if s == t else None
    chain = [goal]
    while parents[chain[-1]] is not None:
        chain.append(parents[chain[-1]][0])
    pts = [verts[x].point for x, _ in reversed(chain)]
    rep = validate_walk(P, pts, mode="edge")
    return rep.walk


def walk_is_simple(P: HPolyhedron, walk: CircuitWalk) -> bool:
    return all(len(s.entered) == 1 for s in walk.steps)


def reaches_new_facet_each_step(P: HPolyhedron, walk: CircuitWalk) -> bool:
    return _new_facet_steps_ok(P, walk)


def is_circuit_step(P: HPolyhedron, y0, y1) -> bool:
    diff = sub(vector(y1), vector(y0))
    return not is_zero(diff) and is_circuit(P, diff)
