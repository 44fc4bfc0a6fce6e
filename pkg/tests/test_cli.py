import io
import json

import pytest
from hypothesis import given
from hypothesis import strategies as st

from ehrhart_delta.cli import PolytopeFileError, format_polytope, main, parse_polytope
from ehrhart_delta.constructions import paper_example
from ehrhart_delta.lattice import LatticePolytope

P1_TEXT = "2 4\n0 0\n1 0\n0 1\n2 3\n"


def run(*argv):
    out = io.StringIO()
    code = main(list(argv), out=out)
    return code, out.getvalue()


@pytest.fixture
def write(tmp_path):
    def _write(text, name="poly.txt"):
        path = tmp_path / name
        path.write_text(text)
        return str(path)
    return _write


def test_delta_p1(write):
    assert run("delta", write(P1_TEXT)) == (0, "delta: 1 3 1\nvolume: 5\n")


def test_delta_square(write):
    code, out = run("delta", write("2 4\n0 0\n1 0\n0 1\n1 1\n"))
    assert code == 0 and out.splitlines()[0] == "delta: 1 1 0"


def test_delta_degenerate(write):
    assert run("delta", write("2 3\n0 0\n1 1\n2 2\n"))[0] == 2


def test_delta_embed(write):
    assert run("delta", "--embed", write("2 3\n0 0\n1 1\n2 2\n")) == (0, "delta: 1 1\nvolume: 2\n")


@pytest.mark.parametrize("text", [
    "", "2 4\n0 0\n1 0\n0 1\n", "2 2\n0 0\n1 x\n", "2 2\n0 0\n0 0\n", "2 2\n0 0\n1 0 0\n", "2\n0 0\n",
])
def test_parse_errors(write, text):
    assert run("delta", write(text))[0] == 1
    with pytest.raises(PolytopeFileError):
        parse_polytope(text)


def test_missing_file(tmp_path):
    assert run("delta", str(tmp_path / "nope.txt"))[0] == 1


def test_ehrhart(write):
    code, out = run("ehrhart", write(P1_TEXT))
    assert code == 0
    assert out.splitlines()[0] == "ehrhart: 1 5/2 5/2"


def test_classify():
    assert run("classify", "--volume", "5", "--dim", "2") == (0, "(1,1,1,1)\n(1,1,1,2)\n(1,1,2,2)\n")
    assert run("classify", "--volume", "5", "--dim", "2", "--simplex") == (0, "(1,1,1,1)\n(1,1,2,2)\n")
    assert run("classify", "--volume", "5", "--dim", "1") == (0, "(1,1,1,1)\n")


@pytest.mark.parametrize("argv", [
    ["classify", "--volume", "6", "--dim", "2"],
    ["classify", "--dim", "2"],
    ["classify", "--volume", "5", "--dim", "0"],
    ["frobnicate"],
])
def test_classify_bad_flags(argv):
    assert run(*argv)[0] == 1


def test_verify():
    assert run("verify", "--dim", "2") == (0, "OK: realized=2 simplex tuples, witnesses=1, violations=0\n")
    code, out = run("verify", "--dim", "3", "--prime", "5")
    assert code == 0 and out.splitlines()[0] == "OK: spanning violations=0"
    assert run("verify", "--dim", "99")[0] == 1
    assert run("verify", "--dim", "2", "--prime", "4")[0] == 1


def test_index(write):
    assert run("index", write(P1_TEXT)) == (0, "index: 1 (spanning)\n")
    assert run("index", write("3 4\n0 0 0\n1 0 0\n0 1 0\n1 1 5\n")) == (0, "index: 5 (not spanning)\n")


def test_pyramid_then_delta(write, tmp_path):
    out_path = str(tmp_path / "pyr.txt")
    assert run("pyramid", write(P1_TEXT), "--out", out_path)[0] == 0
    assert run("delta", out_path)[1].splitlines()[0] == "delta: 1 3 1 0"


def test_examples(tmp_path):
    path = tmp_path / "p3.txt"
    assert run("examples", "--k", "3", "--out", str(path))[0] == 0
    poly = parse_polytope(path.read_text())
    assert poly.ambient_dim == 5 and len(poly.vertices) == 7
    assert poly == paper_example(3)
    code, out = run("examples", "--k", "1")
    assert out == P1_TEXT


def test_json_output(write):
    code, out = run("--json", "delta", write(P1_TEXT))
    assert code == 0
    assert json.loads(out) == {"dim": 2, "delta": [1, 3, 1], "volume": 5}
    assert list(json.loads(out)) == ["dim", "delta", "volume"]
    code, out = run("verify", "--dim", "2", "--json")
    data = json.loads(out)
    assert data["ok"] and data["realized_simplex_tuples"] == ["(1,1,1,1)", "(1,1,2,2)"]


def test_output_deterministic(write):
    path = write(P1_TEXT)
    assert run("verify", "--dim", "3", "--json") == run("verify", "--dim", "3", "--json", "--workers", "2")
    assert run("delta", path) == run("delta", path)


@given(st.integers(1, 4).flatmap(lambda d: st.lists(
    st.tuples(*[st.integers(-50, 50)] * d), min_size=1, max_size=8, unique=True)))
def test_file_roundtrip(points):
    poly = LatticePolytope.from_points(points)
    again = parse_polytope(format_polytope(poly))
    assert again == poly
    assert set(again.vertices) == set(poly.vertices)


def test_module_entry_point(tmp_path):
    import subprocess
    import sys

    path = tmp_path / "p1.txt"
    path.write_text(P1_TEXT)
    res = subprocess.run([sys.executable, "-m", "ehrhart_delta", "delta", str(path)],
                         capture_output=True, text=True)
    assert res.returncode == 0 and res.stdout == "delta: 1 3 1\nvolume: 5\n"
