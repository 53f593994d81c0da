import io
import json
import subprocess
import sys
from fractions import Fraction

import pytest
from hypothesis import given
from hypothesis import strategies as st

from circuitdiam.cli import emit_hpoly, main, parse_hpoly, verify_u4
from circuitdiam.errors import DivisionByZeroDenominator, HPolyParseError
from circuitdiam.instances import hexagon, q4, square, u4
from circuitdiam.polyhedron import HPolyhedron
from circuitdiam.walks import validate_walk

SQUARE_TEXT = """# unit square
2 4
1 0 0
0 1 0
-1 0 -1

0 -1 -1   # top
"""


def run(args, stdin="", capsys=None, monkeypatch=None):
    monkeypatch.setattr(sys, "stdin", io.StringIO(stdin))
    code = main(args)
    out = capsys.readouterr()
    return code, out.out, out.err


def test_parse_square():
    assert parse_hpoly(SQUARE_TEXT) == square()


def test_parse_rational_entry():
    P = parse_hpoly("1 2\n1 0\n-1 -8/3\n")
    assert P.b[1] == Fraction(-8, 3)


def test_parse_errors_carry_position():
    with pytest.raises(DivisionByZeroDenominator) as exc:
        parse_hpoly("2 1\n1 1/0 0\n")
    assert exc.value.line == 2 and exc.value.column == 3
    with pytest.raises(HPolyParseError) as exc:
        parse_hpoly("2 2\n1 0 0\n0 x 0\n")
    assert exc.value.line == 3 and exc.value.column == 3
    with pytest.raises(HPolyParseError):
        parse_hpoly("2 2\n1 0 0\n")
    with pytest.raises(HPolyParseError):
        parse_hpoly("2 1\n1 0\n")
    with pytest.raises(HPolyParseError):
        parse_hpoly("")


@pytest.mark.parametrize("P", [square(), hexagon(), u4(), q4()], ids=["square", "hexagon", "u4", "q4"])
def test_round_trip(P):
    assert parse_hpoly(emit_hpoly(P)) == P


fractions = st.fractions(min_value=-50, max_value=50, max_denominator=40)


@given(st.integers(1, 3).flatmap(lambda d: st.lists(st.lists(fractions, min_size=d + 1, max_size=d + 1),
                                                    min_size=1, max_size=5)))
def test_round_trip_property(rows):
    P = HPolyhedron.from_rows(rows)
    Q = parse_hpoly(emit_hpoly(P, comments=["generated"]))
    assert Q.A == P.A and Q.b == P.b


def test_verify_u4_report():
    rep = verify_u4()
    assert rep["combinatorial_distance"] == 5
    assert rep["circuit_distance"] == {"V5678->V1234": 4, "V1234->V5678": 4}
    assert rep["circuit_diameter"] == 4
    assert rep["forward_walk"]["length"] <= 4 and rep["reverse_walk"]["length"] <= 4
    assert rep["forward_landing"] in ("V1234", "edge V1234-V1345", "ray R124")


def test_cli_distance(capsys, monkeypatch):
    text = emit_hpoly(u4())
    code, out, _ = run(["distance", "--mode", "circuit", "--from", "5,6,7,8", "--to", "1,2,3,4"], text, capsys, monkeypatch)
    assert code == 0 and out.strip() == "4"
    code, out, _ = run(["distance", "--mode", "edge", "--from", "5,6,7,8", "--to", "1,2,3,4"], text, capsys, monkeypatch)
    assert code == 0 and out.strip() == "5"


def test_cli_cube_diameter(capsys, monkeypatch):
    code, text, _ = run(["instance", "cube:3"], "", capsys, monkeypatch)
    code, out, _ = run(["diameter", "--mode", "circuit"], text, capsys, monkeypatch)
    assert code == 0 and out.strip() == "3"


def test_cli_pentagon_not_csimple(capsys, monkeypatch):
    _, text, _ = run(["instance", "pentagon"], "", capsys, monkeypatch)
    code, out, _ = run(["check-csimple"], text, capsys, monkeypatch)
    first, witness = out.split("\n", 1)
    assert code == 1 and first == "false"
    w = json.loads(witness)
    assert w["from"] == ["0", "1"] and w["to"] == ["1", "0"] and w["entered"] == [2, 3]


def test_cli_json_is_exact_strings(capsys, monkeypatch):
    code, out, _ = run(["--json", "nonrevisiting", "--from", "5,6,7,8", "--to", "1,2,3,4"], emit_hpoly(u4()),
                       capsys, monkeypatch)
    data = json.loads(out)
    assert code == 0 and data["schema"] == 1
    pts = data["walk"]["points"]
    assert all(isinstance(x, str) and "." not in x for p in pts for x in p)
    walk_pts = [[Fraction(x) for x in p] for p in pts]
    assert validate_walk(u4(), walk_pts)


def test_cli_walk_round_trip(tmp_path, capsys, monkeypatch):
    poly = tmp_path / "u4.hpoly"
    poly.write_text(emit_hpoly(u4()))
    _, out, _ = run(["--json", "distance", "--from", "1,2,3,4", "--to", "5,6,7,8", str(poly)], "", capsys, monkeypatch)
    walk = tmp_path / "walk.json"
    walk.write_text(out)
    code, out, _ = run(["validate-walk", str(poly), "--walk", str(walk)], "", capsys, monkeypatch)
    assert code == 0 and out.startswith("valid")


def test_cli_edges_dot(capsys, monkeypatch):
    code, out, _ = run(["edges", "--dot"], emit_hpoly(square()), capsys, monkeypatch)
    assert code == 0 and out.startswith("graph") and out.count("--") == 4


def test_cli_constructions_emit_hpoly(capsys, monkeypatch):
    text = emit_hpoly(u4())
    code, out, _ = run(["boundedize", "--u", "5,6,7,8", "--v", "1,2,3,4"], text, capsys, monkeypatch)
    assert code == 0 and parse_hpoly(out).f == 11
    code, out, _ = run(["wedge", "--facet", "1", "--slope", "2"], emit_hpoly(square()), capsys, monkeypatch)
    assert code == 0 and parse_hpoly(out).d == 3
    code, out, _ = run(["--seed", "3", "perturb", "--eps", "1/64"], emit_hpoly(square()), capsys, monkeypatch)
    assert code == 0 and parse_hpoly(out).A == square().A
    code, out, _ = run(["make-csimple"], emit_hpoly(square()), capsys, monkeypatch)
    assert code == 0 and parse_hpoly(out) == square()
    code, out, _ = run(["vertexify", "--u", "[1/2,1/2]", "--v", "1,2"], emit_hpoly(parse_hpoly("2 3\n1 0 0\n0 1 0\n-1 -1 -1\n")),
                       capsys, monkeypatch)
    assert code == 0 and parse_hpoly(out).f == 4
    code, out, _ = run(["dantzig", "--u", "1,2", "--v", "3,4"], emit_hpoly(square()), capsys, monkeypatch)
    assert code == 0 and parse_hpoly(out) == square()


def test_cli_exit_codes(capsys, monkeypatch):
    code, _, err = run(["vertices"], "2 1\n1 1/0 0\n", capsys, monkeypatch)
    assert code == 2 and "line 2" in err
    code, _, err = run(["vertices"], emit_hpoly(square()).replace("2 4", "2 5") + "1 0 -5\n", capsys, monkeypatch)
    assert code == 2 and "rows 5" in err
    code, _, _ = run(["distance", "--from", "1,3", "--to", "2,4"], emit_hpoly(square()), capsys, monkeypatch)
    assert code == 2
    code, _, _ = run(["instance", "nope"], "", capsys, monkeypatch)
    assert code == 2
    with pytest.raises(SystemExit) as exc:
        main(["distance"])
    assert exc.value.code == 2


def test_cli_threads_do_not_change_output(capsys, monkeypatch):
    text = emit_hpoly(hexagon())
    outs = {run(["--json", "--threads", str(n), "diameter"], text, capsys, monkeypatch)[1] for n in (1, 4)}
    assert len(outs) == 1


def test_module_entry_point():
    out = subprocess.run([sys.executable, "-m", "circuitdiam", "instance", "square"], capture_output=True, text=True)
    assert out.returncode == 0 and parse_hpoly(out.stdout) == square()
