"""Polyhedron transformations used to move between equivalent diameter questions.

Row conventions: a polyhedron is ``A x >= b``, so rows are inner normals.
"Opposite" rows added at a point u have the form ``-a_i x >= -a_i u``.
"""

from __future__ import annotations

import logging
import random
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Callable, Optional, Sequence

from .errors import (
    AlreadyBounded,
    Exhausted,
    InvalidFacet,
    InvalidPolyhedron,
    NotASpindle,
    NotTransferable,
    PerturbationFailed,
    RankComplete,
    SharedFacet,
    TransferFailed,
)
from .exact import dot, independent_subset, normalize_primitive, rank, rational, vector
from .polyhedron import (
    HPolyhedron,
    Vertex,
    active_set,
    adjacency,
    extreme_rays,
    face_restrict,
    find_vertex,
    is_bounded,
    validate,
)
from .walks import (
    CircuitWalk,
    SearchConfig,
    check_csimple,
    circuit_diameter,
    facet_gaining_edge_walk,
    validate_walk,
)

log = logging.getLogger(__name__)

DENOMINATOR_BOUND = 2**16
DEFAULT_SLOPES = (Fraction(1), Fraction(2), Fraction(1, 2), Fraction(3), Fraction(1, 3))


def _point(x):
    return x.point if isinstance(x, Vertex) else vector(x)


# ---------------------------------------------------------------- wedges


def _check_facet(P: HPolyhedron, k: int):
    if not 0 <= k < P.f:
        raise InvalidFacet(f"row {k} out of range 0..{P.f - 1}")
    if k in validate(P).bad_rows:
        raise InvalidFacet(f"row {k} does not define a facet")


def wedge(P: HPolyhedron, k: int, slope=1) -> HPolyhedron:
    """Wedge over facet k: sides first (rows != k, in order), then ``t >= 0``, then ``a_k x - slope t >= b_k``."""
    slope = rational(slope)
    if slope <= 0:
        raise ValueError("slope must be positive")
    _check_facet(P, k)
    zero = Fraction(0)
    A = [a + (zero,) for i, a in enumerate(P.A) if i != k]
    b = [bi for i, bi in enumerate(P.b) if i != k]
    A.append((zero,) * P.d + (Fraction(1),))
    b.append(zero)
    A.append(P.A[k] + (-slope,))
    b.append(P.b[k])
    return HPolyhedron(A, b)


def wedge_row_map(P: HPolyhedron, k: int) -> dict:
    """Row of the wedge -> row of P for the sides; bases map to ``'lower'``/``'upper'``."""
    out = {}
    j = 0
    for i in range(P.f):
        if i != k:
            out[j] = i
            j += 1
    out[P.f - 1] = "lower"
    out[P.f] = "upper"
    return out


def phi(P: HPolyhedron, k: int, slope, x) -> tuple:
    """Lift a point of P from the lower base to the upper base."""
    x = vector(x)
    return x + ((dot(P.A[k], x) - P.b[k]) / rational(slope),)


def phi_inv(y) -> tuple:
    return tuple(vector(y)[:-1])


def phi_direction(P: HPolyhedron, k: int, slope, c) -> tuple:
    c = vector(c)
    return normalize_primitive(c + (dot(P.A[k], c) / rational(slope),))


def project_walk(P: HPolyhedron, k: int, slope, walk) -> CircuitWalk:
    """Project a walk in ``wedge(P, k, slope)`` down to P.

    Vertical steps vanish.  Raises :class:`NotTransferable` when the walk passes
    through the relative interior of the upper base or the projection is not a
    circuit walk of P.
    """
    W = wedge(P, k, slope)
    pts = [vector(p) for p in (walk.points if isinstance(walk, CircuitWalk) else walk)]
    upper = W.f - 1
    for i, p in enumerate(pts[1:-1], start=1):
        if active_set(W, p) == {upper}:
            raise NotTransferable(f"point {i} lies in the relative interior of the upper base", step=i - 1)
    down = [phi_inv(p) for p in pts]
    proj = [down[0]]
    step_of = []
    for i, p in enumerate(down[1:]):
        if p != proj[-1]:
            proj.append(p)
            step_of.append(i)
    if len(proj) == 1:
        return CircuitWalk((proj[0],), ())
    rep = validate_walk(P, proj)
    if not rep:
        j, why = rep.violations[0]
        raise NotTransferable(f"projected step {j} invalid: {why}", step=step_of[j] if j < len(step_of) else j)
    return rep.walk


# ---------------------------------------------------------------- perturbation


def perturb(P: HPolyhedron, eps, seed: int = 0, retries: int = 32) -> HPolyhedron:
    """Mild perturbation ``b -> b + p`` with ``|p_i| < eps``, entries on a 1/2^16 grid.

    Deterministic in (seed, eps).  Draws that break the facet structure are
    discarded and redrawn.
    """
    eps = rational(eps)
    if eps < 0:
        raise ValueError("eps must be nonnegative")
    if eps == 0:
        return P
    bound = eps * DENOMINATOR_BOUND
    qmax = bound.numerator // bound.denominator
    if qmax * bound.denominator == bound.numerator:
        qmax -= 1
    rng = random.Random(f"{seed}:{eps}")
    for _ in range(retries):
        p = [Fraction(rng.randint(-qmax, qmax), DENOMINATOR_BOUND) for _ in range(P.f)]
        Q = HPolyhedron(P.A, [bi + pi for bi, pi in zip(P.b, p)])
        rep = validate(Q)
        if rep and rep.dimension == P.d:
            return Q
    raise PerturbationFailed(f"no valid perturbation after {retries} draws")


def make_csimple(
    P: HPolyhedron,
    cfg: Optional[SearchConfig] = None,
    seed: int = 0,
    eps=Fraction(1, 64),
    budget: int = 12,
    start_points: Optional[Callable] = None,
    certify_diameter: bool = False,
) -> HPolyhedron:
    """Mildly perturb P until it is C-simple (w.r.t. ``start_points(P')`` when given).

    Each failed attempt halves eps.  With ``certify_diameter`` the circuit
    diameter of the result must also be at least that of P.
    """
    if not validate(P):
        raise InvalidPolyhedron("make_csimple needs a valid polyhedron", validate(P))
    base_diam = circuit_diameter(P).lower_bound if certify_diameter else None
    eps = rational(eps)
    cand = P
    for attempt in range(budget + 1):
        if attempt:
            try:
                cand = perturb(P, eps, seed + attempt - 1)
            except PerturbationFailed:
                eps /= 2
                continue
        c = _with_points(cfg, cand, start_points)
        res = check_csimple(cand, c)
        ok = res.csimple
        if ok and certify_diameter:
            ok = circuit_diameter(cand).lower_bound >= base_diam
        if ok:
            log.debug("C-simple after %d perturbations", attempt)
            return cand
        if attempt:
            eps /= 2
    raise Exhausted(f"no C-simple perturbation within {budget} attempts")


def _with_points(cfg, P, start_points):
    if start_points is None:
        return cfg
    pts = tuple(start_points(P))
    return SearchConfig(depth_limit=None if cfg is None else cfg.depth_limit, start_points=pts)


# ---------------------------------------------------------------- wedge-simplicity


@dataclass
class WedgeSimpleResult:
    wedge_simple: bool
    polyhedron: HPolyhedron
    slopes: dict = field(default_factory=dict)
    children: dict = field(default_factory=dict)
    failure: Optional[dict] = None

    def __bool__(self):
        return self.wedge_simple


def check_wedge_simple(
    P: HPolyhedron,
    k_depth: int = 1,
    cfg: Optional[SearchConfig] = None,
    seed: int = 0,
    slopes: Sequence = DEFAULT_SLOPES,
    perturb_retries: int = 0,
    eps=Fraction(1, 64),
) -> WedgeSimpleResult:
    """Is there, over every facet, a C-simple wedge that is itself (k-1)-wedge-simple?

    ``slopes`` is the finite family tried per facet.  With ``perturb_retries``
    the check is repeated on mild perturbations of P, and the result names the
    polyhedron it holds for.
    """
    if k_depth < 1:
        raise ValueError("k_depth must be at least 1")
    res = _wedge_simple_once(P, k_depth, cfg, slopes)
    for attempt in range(perturb_retries):
        if res:
            break
        Q = perturb(P, rational(eps) / 2**attempt, seed + attempt)
        if check_csimple(Q, cfg):
            res = _wedge_simple_once(Q, k_depth, cfg, slopes)
    return res


def _wedge_simple_once(P, k_depth, cfg, slopes) -> WedgeSimpleResult:
    out = WedgeSimpleResult(True, P)
    for k in range(P.f):
        failure = None
        for lam in slopes:
            W = wedge(P, k, lam)
            cs = check_csimple(W, cfg)
            if not cs:
                failure = {"facet": k, "slope": rational(lam), "witness": cs.witness}
                continue
            if k_depth > 1:
                sub_res = _wedge_simple_once(W, k_depth - 1, cfg, slopes)
                if not sub_res:
                    failure = {"facet": k, "slope": rational(lam), "child": sub_res.failure}
                    continue
                out.children[k] = sub_res
            out.slopes[k] = rational(lam)
            failure = None
            break
        if failure is not None:
            out.wedge_simple = False
            out.failure = failure
            return out
    return out


# ---------------------------------------------------------------- boundedization


@dataclass
class BoundedizeResult:
    polyhedron: HPolyhedron
    added_rows: list
    cone_rows: list
    edge_neighbor: tuple


def boundedize(P: HPolyhedron, u, v, details: bool = False):
    """Cut an unbounded P down to a polytope with opposite rows through u.

    A simple cone at v is chosen containing the d - 1 rows of v's
    lexicographically first edge; each remaining cone direction that is still
    a recession direction is blocked by the row opposite to the one it leaves.
    """
    if is_bounded(P):
        raise AlreadyBounded("polyhedron is already bounded")
    u, v = _vertex(P, u), _vertex(P, v)
    if u.active & v.active:
        raise SharedFacet(f"u and v share rows {sorted(u.active & v.active)}")
    verts = P.vertices()
    iv = verts.index(v)
    nbrs = sorted(adjacency(P)[iv], key=lambda j: verts[j].point)
    if not nbrs:
        raise InvalidPolyhedron("v has no bounded edge")
    w = verts[nbrs[0]]
    common = sorted(v.active & w.active)
    edge_rows = [common[i] for i in independent_subset([P.A[i] for i in common])]
    rest = [i for i in sorted(v.active) if i not in edge_rows]
    cone = edge_rows + [rest[i] for i in independent_subset([P.A[i] for i in rest], [P.A[i] for i in edge_rows])]
    edge_free_row = next(j for j in cone if j not in edge_rows)
    A, b = list(P.A), list(P.b)
    added = []
    for j in sorted(cone):
        if j == edge_free_row:
            continue
        cur = HPolyhedron(A, b)
        if all(dot(P.A[j], r) == 0 for r in extreme_rays(cur)):
            continue
        A.append(tuple(-x for x in P.A[j]))
        b.append(-dot(P.A[j], u.point))
        added.append(j)
    Q = HPolyhedron(A, b)
    if not is_bounded(Q):
        raise AssertionError("boundedization left a recession direction")
    res = BoundedizeResult(Q, added, cone, w.point)
    return res if details else Q


def _vertex(P, x) -> Vertex:
    if isinstance(x, Vertex):
        return x
    return find_vertex(P, point=x)


def vertexify(P: HPolyhedron, u, v) -> HPolyhedron:
    """Make the boundary point u a vertex by adding rows through u opposite to facets of v.

    The new rows complete the normals active at u to a basis; v stays feasible.
    """
    u = vector(_point(u))
    v = _vertex(P, v)
    act = sorted(active_set(P, u))
    have = [P.A[i] for i in act]
    dprime = rank(have) if have else 0
    if dprime == P.d:
        raise RankComplete("u is already a vertex")
    vrows = sorted(v.active)
    pick = [vrows[i] for i in independent_subset([P.A[i] for i in vrows], have)][: P.d - dprime]
    A = list(P.A) + [tuple(-x for x in P.A[i]) for i in pick]
    b = list(P.b) + [-dot(P.A[i], u) for i in pick]
    return HPolyhedron(A, b)


# ---------------------------------------------------------------- Dantzig figures and spindles


def is_dantzig_figure(P: HPolyhedron, u, v) -> bool:
    u, v = _vertex(P, u), _vertex(P, v)
    return (
        P.f == 2 * P.d
        and len(u.active) == P.d
        and len(v.active) == P.d
        and not (u.active & v.active)
        and (u.active | v.active) == frozenset(range(P.f))
    )


def _partitions(P, u, v) -> bool:
    return not (u.active & v.active) and (u.active | v.active) == frozenset(range(P.f))


def is_spindle(P: HPolyhedron, u, v) -> bool:
    u, v = _vertex(P, u), _vertex(P, v)
    return is_bounded(P) and _partitions(P, u, v)


@dataclass
class DantzigResult:
    polyhedron: HPolyhedron
    u: tuple
    v: tuple
    log: list


def dantzig_from_pair(
    P: HPolyhedron,
    u,
    v,
    seed: int = 0,
    require_csimple: bool = True,
    cfg: Optional[SearchConfig] = None,
    slopes: Sequence = DEFAULT_SLOPES,
    budget: int = 8,
    eps=Fraction(1, 64),
) -> DantzigResult:
    """Wedge repeatedly over endpoint-free facets until (P, u, v) is a Dantzig figure.

    Starts from the smallest face containing u and v.  With ``require_csimple``
    each wedge must be C-simple; slopes are tried in order, then mild
    perturbations of the current polyhedron.
    """
    u, v = _vertex(P, u), _vertex(P, v)
    common = u.active & v.active
    entries = []
    if common:
        face = face_restrict(P, common)
        cur = face.polyhedron
        cu, cv = face.from_ambient(u.point), face.from_ambient(v.point)
        entries.append({"op": "face", "rows": sorted(i + 1 for i in common), "dim": face.dim})
    else:
        cur, cu, cv = P, u.point, v.point
    while True:
        au, av = active_set(cur, cu), active_set(cur, cv)
        free = [j for j in range(cur.f) if j not in au and j not in av]
        if not free:
            break
        k = free[0]
        chosen = None
        for attempt in range(budget + 1):
            base = cur
            if attempt:
                base = perturb(cur, rational(eps) / 2 ** (attempt - 1), seed + attempt - 1)
                cu = find_vertex(base, facets=au).point
                cv = find_vertex(base, facets=av).point
            for lam in slopes:
                W = wedge(base, k, lam)
                if not require_csimple or check_csimple(W, cfg):
                    chosen = (base, W, rational(lam), attempt)
                    break
            if chosen:
                break
        if chosen is None:
            raise Exhausted(f"no C-simple wedge over row {k} within budget")
        base, W, lam, attempt = chosen
        cv = phi(base, k, lam, cv)
        cu = tuple(cu) + (Fraction(0),)
        cur = W
        entries.append({"op": "wedge", "row": k + 1, "slope": lam, "perturbations": attempt, "f": W.f, "d": W.d})
    return DantzigResult(cur, tuple(cu), tuple(cv), entries)


def unbounded_spindle_walk(P: HPolyhedron, u, v) -> CircuitWalk:
    """Circuit walk u -> v in a spindle whose v-cone is simple.

    An unbounded P is first cut by the rows opposite to v's facets through u;
    an edge walk that gains a facet at v in every step is then read back in P.
    """
    u, v = _vertex(P, u), _vertex(P, v)
    if not _partitions(P, u, v):
        raise NotASpindle("every facet must contain exactly one of u and v")
    target = v.active
    if is_bounded(P):
        Q = P
    else:
        if len(v.active) != P.d:
            raise NotASpindle("the cone at v must be simple")
        rows = sorted(v.active)
        Q = HPolyhedron(
            list(P.A) + [tuple(-x for x in P.A[i]) for i in rows],
            list(P.b) + [-dot(P.A[i], u.point) for i in rows],
        )
    walk = facet_gaining_edge_walk(Q, u.point, v.point, target)
    if walk is None:
        raise TransferFailed("no facet-gaining edge walk in the truncated spindle")
    rep = validate_walk(P, walk.points)
    if not rep:
        raise TransferFailed(f"edge walk is not a circuit walk of P: {rep.violations}")
    return rep.walk
