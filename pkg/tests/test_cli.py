import json
from pathlib import Path

import pytest

from diagroots.cli import main

DATA = Path(__file__).parent / "data"


def run(capsys, *argv):
    code = main([str(a) for a in argv])
    out, err = capsys.readouterr()
    return code, out, err


def test_graph_of_row_six(capsys, tmp_path):
    dot = tmp_path / "g.dot"
    code, out, _ = run(capsys, "graph", DATA / "row6.txt", "--dot", dot)
    assert code == 0
    assert "5 points, 4 exchange edges" in out
    assert dot.read_text().count(" -- ") == 4


def test_graph_figure(capsys, tmp_path):
    fig = tmp_path / "g.png"
    code, _, _ = run(capsys, "graph", DATA / "row6.txt", "--figure", fig, "--quiet")
    assert code == 0
    assert fig.read_bytes()[:4] == b"\x89PNG"


def test_quiet_keeps_the_verdict(capsys):
    code, out, _ = run(capsys, "roots", DATA / "row6.txt", "--quiet")
    assert code == 0
    assert out.strip().splitlines() == ["Finite: 5 points, positive roots per point [10]"]


def test_roots_json(capsys, tmp_path):
    js = tmp_path / "r.json"
    run(capsys, "roots", DATA / "row1.txt", "--json", js)
    data = json.loads(js.read_text())
    assert data["verdict"] == "finite"
    assert data["points"][0]["positive_root_count"] == 10


@pytest.mark.parametrize("limit", ["512", "2048"])
def test_exceeded_limits_exit_one(capsys, limit):
    code, out, _ = run(capsys, "roots", DATA / "badchain.txt", "--max-roots", limit)
    assert code == 1
    assert out.startswith("ExceededLimits")


def test_not_i_finite_exit_one(capsys, tmp_path):
    js = tmp_path / "n.json"
    code, out, _ = run(capsys, "graph", DATA / "notfinite.txt", "--json", js)
    assert code == 1
    assert "NotIFinite" in out
    assert json.loads(js.read_text())["at"]["point"] == 0


def test_analyze(capsys):
    code, out, _ = run(capsys, "analyze", DATA / "row1.txt")
    assert code == 0 and "i-finite at every index" in out
    code, _, _ = run(capsys, "analyze", DATA / "notfinite.txt")
    assert code == 1


def test_decomposable_warning_on_stderr(capsys):
    code, _, err = run(capsys, "graph", DATA / "decomposable.txt")
    assert code == 0
    assert "warning:" in err


def test_classify(capsys):
    code, out, _ = run(capsys, "classify", DATA / "row1.txt")
    assert code == 0
    assert out.startswith("row 1, q ↦ z")
    code, out, _ = run(capsys, "classify", DATA / "badchain.txt")
    assert code == 1 and "no match" in out


def test_classify_refuses_char_zero(capsys, tmp_path):
    f = tmp_path / "c0.txt"
    f.write_text("p = 0\ngen q order 0\nrank = 4\nv1 = q\nv2 = q\nv3 = q\nv4 = q\n"
                 "e12 = q^-1\ne23 = q^-1\ne34 = q^-1\n")
    code, _, err = run(capsys, "classify", f)
    assert code == 2 and "p > 0" in err


def test_neighborhoods(capsys):
    code, out, _ = run(capsys, "neighborhoods", DATA / "row6.txt")
    assert code == 0
    assert "standard A4" in out


def test_parse_error_exit_two(capsys, tmp_path):
    f = tmp_path / "bad.txt"
    f.write_text("p = 5\nrank = 1\nv1 = w\n")
    code, _, err = run(capsys, "analyze", f)
    assert code == 2
    assert "line 3" in err


def test_usage_errors(capsys):
    assert run(capsys, "frobnicate")[0] == 2
    assert run(capsys, "graph", "/nonexistent/file.txt")[0] == 2


def test_verify_tables(capsys):
    code, out, _ = run(capsys, "verify-tables")
    assert code == 0
    assert out.strip().splitlines()[-1] == "23/23 rows PASS (45 instantiations)"


def test_verify_tables_dump(capsys):
    code, out, _ = run(capsys, "verify-tables", "--dump")
    assert code == 0
    assert out.startswith("row 1  q in k*")
