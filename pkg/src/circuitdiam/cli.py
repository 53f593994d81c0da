"""Command-line front end, HPOLY text I/O and the U4 verification pipeline."""

from __future__ import annotations

import argparse
import json
import sys
from fractions import Fraction

from .circuits import enumerate_circuits
from .constructions import (
    boundedize,
    dantzig_from_pair,
    make_csimple,
    perturb,
    vertexify,
    wedge,
)
from .errors import (
    CircuitDiamError,
    DivisionByZeroDenominator,
    HPolyParseError,
    InvalidPolyhedron,
    VerificationFailed,
    VertexNotFound,
)
from .exact import format_rational, parse_rational, sub, vector
from .instances import by_name, u4
from .polyhedron import (
    HPolyhedron,
    Vertex,
    active_set,
    adjacency,
    combinatorial_diameter,
    combinatorial_distance,
    edges,
    extreme_rays,
    find_vertex,
    is_feasible,
    validate,
)
from .walks import (
    SearchConfig,
    check_csimple,
    circuit_diameter,
    circuit_distance,
    find_nonrevisiting_walk,
    max_step,
    validate_walk,
)

SCHEMA = 1

# ---------------------------------------------------------------- HPOLY text


def _tokens(line: str):
    """Yield ``(column, token)`` for the part of ``line`` before any ``#``."""
    body = line.split("#", 1)[0]
    col = 0
    for tok in body.split():
        col = body.index(tok, col)
        yield col + 1, tok
        col += len(tok)


def _parse_token(tok: str, line: int, col: int) -> Fraction:
    try:
        return parse_rational(tok)
    except ZeroDivisionError:
        raise DivisionByZeroDenominator(f"zero denominator in {tok!r}", line, col) from None
    except ValueError:
        raise HPolyParseError(f"not a rational: {tok!r}", line, col) from None


def parse_hpoly(text: str) -> HPolyhedron:
    """Parse ``d f`` followed by f rows ``a_1 ... a_d b`` meaning ``a x >= b``."""
    header = None
    rows = []
    last_line = 0
    for lineno, line in enumerate(text.splitlines(), start=1):
        toks = list(_tokens(line))
        if not toks:
            continue
        last_line = lineno
        if header is None:
            if len(toks) != 2:
                raise HPolyParseError("header must be 'd f'", lineno, toks[0][0])
            try:
                d, f = (int(t) for _, t in toks)
            except ValueError:
                raise HPolyParseError("header must hold two integers", lineno, toks[0][0]) from None
            if d < 1 or f < 1:
                raise HPolyParseError("d and f must be positive", lineno, toks[0][0])
            header = (d, f)
            continue
        d, f = header
        if len(rows) == f:
            raise HPolyParseError(f"more than {f} rows", lineno, toks[0][0])
        if len(toks) != d + 1:
            col = toks[min(len(toks), d + 1) - 1][0]
            raise HPolyParseError(f"expected {d + 1} entries, found {len(toks)}", lineno, col)
        rows.append([_parse_token(t, lineno, c) for c, t in toks])
    if header is None:
        raise HPolyParseError("empty input", 1, 1)
    if len(rows) != header[1]:
        raise HPolyParseError(f"expected {header[1]} rows, found {len(rows)}", last_line + 1, 1)
    return HPolyhedron.from_rows(rows)


def emit_hpoly(P: HPolyhedron, comments=()) -> str:
    lines = [f"# {c}" for c in comments]
    lines.append(f"{P.d} {P.f}")
    for a, bi in P.rows():
        lines.append(" ".join(format_rational(x) for x in a + (bi,)))
    return "\n".join(lines) + "\n"


# ---------------------------------------------------------------- U4 pipeline

U4_NAMED = ("5678", "1678", "1478", "1458", "1345", "1234", "2346", "3467", "1467")


def _label_rows(label: str) -> frozenset:
    return frozenset(int(c) - 1 for c in label)


def _classify_landing(P, y, target: Vertex, face_rows: frozenset) -> str:
    """Where a step inside a 2-face ended relative to ``target``: the vertex, an edge at it, or a ray at it."""
    act = active_set(P, y)
    if not face_rows <= act:
        raise VerificationFailed("landing", f"step left the face {_labels(face_rows)}")
    if y == target.point:
        return target.label()
    rows = act & target.active
    if len(rows) != P.d - 1:
        raise VerificationFailed("landing", f"landing point {_fmt(y)} is not on an edge or ray at {target.label()}")
    verts = P.vertices()
    i = verts.index(target)
    for j in adjacency(P)[i]:
        if rows <= verts[j].active:
            return f"edge {target.label()}-{verts[j].label()}"
    for r in extreme_rays(P):
        if all(sum(a * x for a, x in zip(P.A[k], r)) == 0 for k in rows):
            return "ray R" + "".join(str(k + 1) for k in sorted(rows))
    raise VerificationFailed("landing", f"no edge or ray at {target.label()} through {_fmt(y)}")


def _labels(rows) -> str:
    return "{" + ",".join(str(i + 1) for i in sorted(rows)) + "}"


def _fmt(p) -> str:
    return "(" + ", ".join(format_rational(x) for x in p) + ")"


def _recipe_walk(P, vx, path, edge_from, edge_to, face, target):
    """Two edge steps, one maximal step along an edge direction inside a 2-face, then a closing step."""
    pts = [vx[s].point for s in path]
    g = sub(vx[edge_to].point, vx[edge_from].point)
    y, _ = max_step(P, pts[-1], g)
    where = _classify_landing(P, y, vx[target], _label_rows(face))
    pts.append(y)
    if y != vx[target].point:
        pts.append(vx[target].point)
    rep = validate_walk(P, pts)
    if not rep:
        raise VerificationFailed("walk", f"recipe walk invalid: {rep.violations}")
    return rep.walk, where


def verify_u4(diameter: bool = True) -> dict:
    """Rebuild the U4 distance facts from scratch; raises VerificationFailed naming the stage."""
    P = u4()
    rep = validate(P)
    if not rep or rep.d != 4 or rep.f != 8:
        raise VerificationFailed("validate", "; ".join(rep.messages) or "unexpected shape")
    vx = {}
    for lab in U4_NAMED:
        try:
            v = find_vertex(P, facets=_label_rows(lab))
        except VertexNotFound as exc:
            raise VerificationFailed("vertices", str(exc)) from None
        if v.active != _label_rows(lab):
            raise VerificationFailed("vertices", f"V{lab} has active rows {_labels(v.active)}")
        vx[lab] = v
    u, v = vx["5678"], vx["1234"]
    comb = combinatorial_distance(P, u, v)
    if comb != 5:
        raise VerificationFailed("graph", f"graph distance V5678-V1234 is {comb}, expected 5")
    edge_set = {frozenset(e) for e in edges(P)}
    verts = P.vertices()
    for a, b in (("5678", "1678"), ("1678", "1478"), ("1234", "2346"), ("2346", "3467")):
        if frozenset((verts.index(vx[a]), verts.index(vx[b]))) not in edge_set:
            raise VerificationFailed("graph", f"V{a}-V{b} is not an edge")
    fwd, fwd_where = _recipe_walk(P, vx, ("5678", "1678", "1478"), "1458", "1345", "14", "1234")
    back, back_where = _recipe_walk(P, vx, ("1234", "2346", "3467"), "1467", "1678", "67", "5678")
    for name, w in (("forward", fwd), ("reverse", back)):
        if w.length > 4:
            raise VerificationFailed("walk", f"{name} walk has length {w.length}")
    cfg = SearchConfig(depth_limit=5)
    d_fwd = circuit_distance(P, u, v, cfg)
    d_back = circuit_distance(P, v, u, cfg)
    for name, r in (("V5678->V1234", d_fwd), ("V1234->V5678", d_back)):
        if r.distance != 4:
            raise VerificationFailed("distance", f"circuit distance {name} is {r}, expected 4")
    report = {
        "schema": SCHEMA,
        "valid": True,
        "named_vertices": {f"V{lab}": [format_rational(x) for x in vx[lab].point] for lab in U4_NAMED},
        "vertex_count": len(verts),
        "combinatorial_distance": comb,
        "forward_walk": fwd.to_json(),
        "forward_landing": fwd_where,
        "reverse_walk": back.to_json(),
        "reverse_landing": back_where,
        "circuit_distance": {"V5678->V1234": d_fwd.distance, "V1234->V5678": d_back.distance},
    }
    if diameter:
        res = circuit_diameter(P, cfg)
        if not res.exact or res.diameter != 4:
            raise VerificationFailed("diameter", f"circuit diameter is {res}, expected 4")
        report["circuit_diameter"] = res.diameter
        report["combinatorial_diameter"] = combinatorial_diameter(P)
    return report


# ---------------------------------------------------------------- argument helpers


class UsageError(Exception):
    pass


def _read_polyhedron(args) -> HPolyhedron:
    if args.input in (None, "-"):
        text = sys.stdin.read()
    else:
        with open(args.input) as fh:
            text = fh.read()
    P = parse_hpoly(text)
    rep = validate(P)
    if not rep:
        rows = ", ".join(str(i + 1) for i in sorted(rep.bad_rows))
        msg = "; ".join(rep.messages)
        raise InvalidPolyhedron(f"invalid polyhedron{f' (rows {rows})' if rows else ''}: {msg}", rep)
    return P


def parse_point_text(text: str) -> tuple:
    body = text.strip().strip("[]()")
    return vector(t for t in body.replace(",", " ").split())


def _is_facet_set(text: str) -> bool:
    t = text.strip()
    return bool(t) and t[0] not in "[(" and " " not in t and all(p.isdigit() for p in t.split(","))


def resolve_point(P: HPolyhedron, text: str) -> tuple:
    """``5,6,7,8`` names the vertex on those 1-based rows; ``[0,1/2]`` or ``"0 1/2"`` is a point."""
    if _is_facet_set(text):
        rows = [int(p) - 1 for p in text.split(",")]
        if any(not 0 <= r < P.f for r in rows):
            raise UsageError(f"facet index out of range in {text!r}")
        return find_vertex(P, facets=rows).point
    try:
        p = parse_point_text(text)
    except (ValueError, ZeroDivisionError) as exc:
        raise UsageError(f"bad point {text!r}: {exc}") from None
    if len(p) != P.d:
        raise UsageError(f"point {text!r} has {len(p)} coordinates, expected {P.d}")
    if not is_feasible(P, p):
        raise UsageError(f"point {text!r} is not in the polyhedron")
    return p


def resolve_vertex(P, text) -> tuple:
    p = resolve_point(P, text)
    find_vertex(P, point=p)
    return p


def _read_points(path: str, d: int) -> tuple:
    pts = []
    with open(path) as fh:
        for lineno, line in enumerate(fh, start=1):
            toks = list(_tokens(line))
            if not toks:
                continue
            if len(toks) != d:
                raise HPolyParseError(f"expected {d} coordinates", lineno, toks[0][0])
            pts.append(tuple(_parse_token(t, lineno, c) for c, t in toks))
    return tuple(pts)


def _jsonable(x):
    if isinstance(x, Fraction):
        return format_rational(x)
    if isinstance(x, (frozenset, set)):
        return sorted(i + 1 for i in x)
    if isinstance(x, (tuple, list)):
        return [_jsonable(y) for y in x]
    if isinstance(x, dict):
        return {k: _jsonable(v) for k, v in x.items()}
    if hasattr(x, "to_json"):
        return x.to_json()
    return x


def _emit(args, payload: dict, text: str):
    if args.json:
        print(json.dumps({"schema": SCHEMA, **_jsonable(payload)}, sort_keys=True))
    else:
        sys.stdout.write(text if text.endswith("\n") else text + "\n")


def _walk_text(walk) -> str:
    return "\n".join(_fmt(p) for p in walk.points)


# ---------------------------------------------------------------- subcommands


def cmd_circuits(args):
    P = _read_polyhedron(args)
    cs = enumerate_circuits(P)
    _emit(args, {"circuits": [[int(x) for x in g] for g in cs]},
          "\n".join(" ".join(str(int(x)) for x in g) for g in cs))
    return 0


def cmd_vertices(args):
    P = _read_polyhedron(args)
    vs = P.vertices()
    payload = {"vertices": [{"label": v.label(), "point": v.point, "active": v.active} for v in vs]}
    _emit(args, payload, "\n".join(f"{v.label()} {' '.join(map(format_rational, v.point))}" for v in vs))
    return 0


def cmd_edges(args):
    P = _read_polyhedron(args)
    vs = P.vertices()
    es = edges(P)
    if args.dot:
        lines = ["graph vertex_edge {"]
        lines += [f'  "{v.label()}";' for v in vs]
        lines += [f'  "{vs[i].label()}" -- "{vs[j].label()}";' for i, j in es]
        lines.append("}")
        sys.stdout.write("\n".join(lines) + "\n")
        return 0
    _emit(args, {"edges": [[vs[i].label(), vs[j].label()] for i, j in es]},
          "\n".join(f"{vs[i].label()} {vs[j].label()}" for i, j in es))
    return 0


def _cfg(args, points=None):
    return SearchConfig(depth_limit=getattr(args, "depth", None), start_points=points)


def cmd_distance(args):
    P = _read_polyhedron(args)
    src = resolve_point(P, args.from_)
    dst = resolve_vertex(P, args.to)
    if args.mode == "edge":
        src = resolve_vertex(P, args.from_)
        dist = combinatorial_distance(P, src, dst)
        _emit(args, {"mode": "edge", "distance": dist}, str(dist))
        return 0
    res = circuit_distance(P, src, dst, _cfg(args))
    payload = {"mode": "circuit", "distance": res.distance, "depth_limit": res.depth_limit,
               "exact": res.exact, "walk": res.walk}
    _emit(args, payload, str(res))
    return 0 if res.exact else 1


def cmd_diameter(args):
    P = _read_polyhedron(args)
    if args.mode == "edge":
        dia = combinatorial_diameter(P)
        _emit(args, {"mode": "edge", "diameter": dia}, str(dia))
        return 0
    res = circuit_diameter(P, _cfg(args))
    payload = {"mode": "circuit", "diameter": res.diameter, "depth_limit": res.depth_limit,
               "exact": res.exact, "lower_bound": res.lower_bound}
    _emit(args, payload, str(res))
    return 0 if res.exact else 1


def cmd_nonrevisiting(args):
    P = _read_polyhedron(args)
    walk = find_nonrevisiting_walk(P, resolve_point(P, args.from_), resolve_vertex(P, args.to), _cfg(args))
    if walk is None:
        _emit(args, {"found": False, "walk": None}, "none")
        return 1
    _emit(args, {"found": True, "walk": walk}, f"{walk.length}\n{_walk_text(walk)}")
    return 0


def cmd_check_csimple(args):
    P = _read_polyhedron(args)
    pts = _read_points(args.points, P.d) if args.points else None
    for p in pts or ():
        if not is_feasible(P, p):
            raise UsageError(f"start point {_fmt(p)} is not in the polyhedron")
    res = check_csimple(P, _cfg(args, pts))
    payload = {"csimple": res.csimple, "depth_limit": res.depth_limit, "witness": res.witness}
    if res.csimple:
        _emit(args, payload, "true")
        return 0
    wit = json.dumps(_jsonable(res.witness), sort_keys=True)
    _emit(args, payload, f"false\n{wit}")
    return 1


def _emit_polyhedron(args, Q, log: dict):
    if args.json:
        print(json.dumps({"schema": SCHEMA, "hpoly": emit_hpoly(Q), "log": _jsonable(log)}, sort_keys=True))
    else:
        sys.stdout.write(emit_hpoly(Q, [json.dumps(_jsonable(log), sort_keys=True)]))


def _slope(text):
    try:
        return parse_rational(text)
    except (ValueError, ZeroDivisionError) as exc:
        raise UsageError(f"bad rational {text!r}: {exc}") from None


def cmd_wedge(args):
    P = _read_polyhedron(args)
    if not 1 <= args.facet <= P.f:
        raise UsageError(f"--facet must be in 1..{P.f}")
    lam = _slope(args.slope)
    Q = wedge(P, args.facet - 1, lam)
    _emit_polyhedron(args, Q, {"op": "wedge", "facet": args.facet, "slope": lam})
    return 0


def cmd_perturb(args):
    P = _read_polyhedron(args)
    eps = _slope(args.eps)
    Q = perturb(P, eps, args.seed)
    _emit_polyhedron(args, Q, {"op": "perturb", "eps": eps, "seed": args.seed})
    return 0


def cmd_make_csimple(args):
    P = _read_polyhedron(args)
    pts = _read_points(args.points, P.d) if args.points else None
    starts = (lambda Q: pts) if pts else None
    Q = make_csimple(P, _cfg(args), seed=args.seed, eps=_slope(args.eps), budget=args.budget,
                     start_points=starts, certify_diameter=args.certify_diameter)
    _emit_polyhedron(args, Q, {"op": "make-csimple", "seed": args.seed, "unchanged": Q == P,
                               "certified_diameter": args.certify_diameter})
    return 0


def cmd_boundedize(args):
    P = _read_polyhedron(args)
    res = boundedize(P, resolve_vertex(P, args.u), resolve_vertex(P, args.v), details=True)
    log = {"op": "boundedize", "added_rows": [i + 1 for i in res.added_rows],
           "cone_rows": [i + 1 for i in res.cone_rows], "edge_neighbor": res.edge_neighbor}
    _emit_polyhedron(args, res.polyhedron, log)
    return 0


def cmd_vertexify(args):
    P = _read_polyhedron(args)
    u = resolve_point(P, args.u)
    Q = vertexify(P, u, resolve_vertex(P, args.v))
    _emit_polyhedron(args, Q, {"op": "vertexify", "u": u, "added": Q.f - P.f})
    return 0


def cmd_dantzig(args):
    P = _read_polyhedron(args)
    res = dantzig_from_pair(P, resolve_vertex(P, args.u), resolve_vertex(P, args.v), seed=args.seed,
                            require_csimple=not args.no_csimple, cfg=_cfg(args))
    _emit_polyhedron(args, res.polyhedron, {"op": "dantzig", "u": res.u, "v": res.v, "steps": res.log})
    return 0


def _load_walk_points(path: str, d: int) -> list:
    with open(path) as fh:
        text = fh.read()
    if text.lstrip().startswith("{"):
        data = json.loads(text)
        walk = data.get("walk", data)
        if isinstance(walk, dict) and "prefix" in data:
            walk = data["prefix"]
        return [tuple(parse_rational(x) for x in p) for p in walk["points"]]
    return list(_read_points(path, d))


def cmd_validate_walk(args):
    P = _read_polyhedron(args)
    try:
        pts = _load_walk_points(args.walk, P.d)
    except (ValueError, KeyError, TypeError, ZeroDivisionError) as exc:
        raise UsageError(f"cannot read walk: {exc}") from None
    if len(pts) < 2:
        raise UsageError("a walk needs at least two points")
    rep = validate_walk(P, pts, mode=args.mode)
    if rep:
        _emit(args, {"valid": True, "walk": rep.walk}, f"valid, length {rep.walk.length}")
        return 0
    text = "invalid\n" + "\n".join(f"step {i}: {why}" for i, why in rep.violations)
    _emit(args, {"valid": False, "violations": [[i, why] for i, why in rep.violations]}, text)
    return 1


def cmd_instance(args):
    try:
        P = by_name(args.name)
    except ValueError as exc:
        raise UsageError(str(exc)) from None
    sys.stdout.write(emit_hpoly(P))
    return 0


def cmd_verify_u4(args):
    try:
        rep = verify_u4(diameter=not args.skip_diameter)
    except VerificationFailed as exc:
        _emit(args, {"valid": False, "stage": exc.stage, "error": str(exc)}, f"FAILED {exc}")
        return 1
    if args.json:
        print(json.dumps(rep, sort_keys=True))
        return 0
    lines = [
        f"vertices: {rep['vertex_count']}, all nine named vertices present",
        f"graph distance V5678-V1234: {rep['combinatorial_distance']}",
        f"forward walk length {rep['forward_walk']['length']}, third step lands at {rep['forward_landing']}",
        f"reverse walk length {rep['reverse_walk']['length']}, third step lands at {rep['reverse_landing']}",
        f"circuit distance V5678->V1234: {rep['circuit_distance']['V5678->V1234']}",
        f"circuit distance V1234->V5678: {rep['circuit_distance']['V1234->V5678']}",
    ]
    if "circuit_diameter" in rep:
        lines.append(f"circuit diameter: {rep['circuit_diameter']} (graph diameter {rep['combinatorial_diameter']})")
    print("\n".join(lines))
    return 0


# ---------------------------------------------------------------- parser


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--json", action="store_true", default=argparse.SUPPRESS, help="JSON output")
    common.add_argument("--seed", type=int, default=argparse.SUPPRESS, help="random seed (default 0)")
    common.add_argument("--threads", type=int, default=argparse.SUPPRESS,
                        help="accepted for compatibility; work is single-threaded")

    parser = argparse.ArgumentParser(prog="circuitdiam", parents=[common],
                                     description="Exact circuit diameters of rational polyhedra.")
    sub = parser.add_subparsers(dest="command", required=True)

    def add(name, func, help_text, needs_input=True):
        p = sub.add_parser(name, parents=[common], help=help_text)
        if needs_input:
            p.add_argument("input", nargs="?", help="HPOLY file (default: standard input)")
        p.set_defaults(func=func)
        return p

    add("circuits", cmd_circuits, "list circuits, one per line")
    add("vertices", cmd_vertices, "list vertices with their labels")
    p = add("edges", cmd_edges, "list bounded edges")
    p.add_argument("--dot", action="store_true", help="emit Graphviz DOT")
    for name, func, text in (("distance", cmd_distance, "shortest walk between two points"),
                             ("nonrevisiting", cmd_nonrevisiting, "walk entering a new facet at every step")):
        p = add(name, func, text)
        p.add_argument("--from", dest="from_", required=True, help="facet set like 5,6,7,8 or a point [x,y,...]")
        p.add_argument("--to", required=True, help="target vertex")
        p.add_argument("--depth", type=int)
        if name == "distance":
            p.add_argument("--mode", choices=("edge", "circuit"), default="circuit")
    p = add("diameter", cmd_diameter, "edge or circuit diameter")
    p.add_argument("--mode", choices=("edge", "circuit"), default="circuit")
    p.add_argument("--depth", type=int)
    p = add("check-csimple", cmd_check_csimple, "search for a walk step entering two facets")
    p.add_argument("--depth", type=int)
    p.add_argument("--points", help="file of extra start points, one per line")
    p = add("wedge", cmd_wedge, "wedge over a facet")
    p.add_argument("--facet", type=int, required=True, help="1-based row index")
    p.add_argument("--slope", default="1")
    p = add("perturb", cmd_perturb, "perturb the right-hand side")
    p.add_argument("--eps", default="1/64")
    p = add("make-csimple", cmd_make_csimple, "perturb until C-simple")
    p.add_argument("--eps", default="1/64")
    p.add_argument("--budget", type=int, default=12)
    p.add_argument("--depth", type=int)
    p.add_argument("--points", help="file of extra start points")
    p.add_argument("--certify-diameter", action="store_true")
    p = add("boundedize", cmd_boundedize, "cut an unbounded polyhedron to a polytope")
    p.add_argument("--u", required=True)
    p.add_argument("--v", required=True)
    p = add("vertexify", cmd_vertexify, "turn a boundary point into a vertex")
    p.add_argument("--u", required=True, help="point [x,y,...]")
    p.add_argument("--v", required=True)
    p = add("dantzig", cmd_dantzig, "wedge a vertex pair into a Dantzig figure")
    p.add_argument("--u", required=True)
    p.add_argument("--v", required=True)
    p.add_argument("--depth", type=int)
    p.add_argument("--no-csimple", action="store_true", help="do not require C-simple wedges")
    p = add("validate-walk", cmd_validate_walk, "check a walk (JSON output or point lines)")
    p.add_argument("--walk", required=True, help="file holding the walk")
    p.add_argument("--mode", choices=("maximal", "edge"), default="maximal")
    p = add("instance", cmd_instance, "print a built-in instance", needs_input=False)
    p.add_argument("name", help="u4, q4[:margin], cube:d, simplex:d, square, triangle, hexagon, quadrant, pentagon")
    p = add("verify-u4", cmd_verify_u4, "check the U4 distance facts", needs_input=False)
    p.add_argument("--skip-diameter", action="store_true", help="skip the all-pairs search")
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    for name, default in (("json", False), ("seed", 0), ("threads", 1)):
        if not hasattr(args, name):
            setattr(args, name, default)
    try:
        return args.func(args)
    except (HPolyParseError, InvalidPolyhedron, UsageError, VertexNotFound, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except CircuitDiamError as exc:
        print(f"failed: {exc}", file=sys.stderr)
        return 1
