import json
import warnings
from pathlib import Path

import pytest
from hypothesis import given, settings, strategies as st

from diagroots.braiding import BraidingMatrix, DynkinDiagram, NotIFinite
from diagroots.cartangraph import build_graph, exchange_graph
from diagroots.classification import canonical_assignments, get_row, instantiate_row, match_diagram
from diagroots.rootsystem import enumerate_roots
from diagroots.textio import (
    InputDoc, ParseError, SignCollapseWarning, export_dot, export_json, parse_expr, parse_input,
    print_input, render_exchange_graph,
)
from diagroots.unitgroup import GroupSpec

from helpers import specs, units

DATA = Path(__file__).parent / "data"


def test_parse_signed_power():
    spec = GroupSpec.create(5, [("z", 3)])
    z = spec.gen("z")
    assert parse_expr("-z^-1", spec) == spec.sign() * z ** 2
    assert parse_expr("z^2*z", spec) == spec.identity()
    assert parse_expr("-1", spec) == spec.sign()
    assert parse_expr("-1*z", spec) == -z


def test_parse_row_six_file():
    doc = parse_input((DATA / "row6.txt").read_text())
    q = doc.spec.gen("q")
    assert doc.rank == 4 and doc.spec.p == 5
    assert doc.diagram.vertex == (doc.spec.sign(), q, q, q)
    assert doc.diagram.edge(2, 3) == q ** -1


def test_parse_full_matrix():
    doc = parse_input((DATA / "decomposable.txt").read_text())
    assert isinstance(doc.value, BraidingMatrix)
    assert doc.diagram.theta == 4


def test_limits_are_read():
    text = "p = 5\ngen q order 0\nrank = 1\nmax_points = 7\nmax_roots = 9\nv1 = q\n"
    assert parse_input(text).limits == {"max_points": 7, "max_roots": 9}


def test_comments_and_blank_lines():
    text = "# header\n\np = 7   # prime\nrank = 1\nv1 = -1\n"
    assert parse_input(text).diagram.vertex == (GroupSpec.create(7).sign(),)


@pytest.mark.parametrize("text, line, col, msg", [
    ("p = 3\ngen z order 3\nrank = 1\nv1 = z\n", 2, 13, "divisible by p"),
    ("p = 5\nrank = 1\nv1 = w\n", 3, 6, "undeclared"),
    ("p = 5\nrank = 1\nv1 = 1\nv1 = 1\n", 4, 1, "duplicate"),
    ("p = 5\nrank = 2\nv1 = 1\n", 1, 1, "missing vertex label v2"),
    ("p = 5\nrank = 2\nq11 = 1\nq12 = 1\nq21 = 1\n", 1, 1, "missing entry q22"),
    ("p = 5\nrank = 2\nv1 = 1\nv2 = 1\nq12 = 1\n", 1, 1, "mix"),
    ("p = 6\nrank = 1\nv1 = 1\n", 1, 5, "prime"),
    ("p = 5\nrank = 1\nv1 = 1 + 1\n", 3, 8, "unexpected"),
    ("p = 5\nrank = 2\nv1 = 1\nv2 = 1\ne21 = 1\n", 5, 1, "i < j"),
    ("rank = 1\nv1 = 1\n", 1, 1, "missing 'p"),
    ("p = 5\nrank = 1\nhello\n", 3, 1, "name = value"),
])
def test_parse_errors_carry_positions(text, line, col, msg):
    with pytest.raises(ParseError, match=msg) as err:
        parse_input(text)
    assert (err.value.line, err.value.col) == (line, col)


def test_sign_in_char_two_warns():
    with pytest.warns(SignCollapseWarning):
        doc = parse_input("p = 2\nrank = 1\nv1 = -1\n")
    assert doc.diagram.vertex[0].is_one()


def test_no_warning_without_sign():
    with warnings.catch_warnings():
        warnings.simplefilter("error")
        parse_input("p = 2\ngen q order 0\nrank = 1\nv1 = q\n")


@st.composite
def docs(draw):
    spec = draw(specs(primes=(0, 3, 5, 7)))
    rank = draw(st.integers(1, 4))
    labels = [draw(units(spec, bound=3)) for _ in range(rank)]
    if draw(st.booleans()):
        q = tuple(tuple(draw(units(spec, bound=3)) for _ in range(rank)) for _ in range(rank))
        value = BraidingMatrix(spec, q)
    else:
        edges = {}
        for i in range(rank):
            for j in range(i + 1, rank):
                if draw(st.booleans()):
                    edges[(i, j)] = draw(units(spec, bound=3))
        value = DynkinDiagram.build(labels, edges)
    return InputDoc(spec, rank, value)


@settings(max_examples=150)
@given(docs())
def test_print_parse_round_trip(doc):
    back = parse_input(print_input(doc))
    assert back.spec == doc.spec
    assert back.value == doc.value
    assert print_input(back) == print_input(doc)


def row_graph(rid):
    row = get_row(rid)
    spec, asg = canonical_assignments(row)[0]
    return build_graph(instantiate_row(row, spec, asg)[0])


def test_dot_single_point():
    g = row_graph("1")
    text = export_dot(exchange_graph(g), [pt.diagram for pt in g.points])
    assert text.count(" [label=") == 1
    assert " -- " not in text
    assert text.startswith("graph exchange {")


def test_dot_path_is_deterministic():
    g = row_graph("6")
    a = export_dot(exchange_graph(g), [pt.diagram for pt in g.points])
    b = export_dot(exchange_graph(row_graph("6")), [pt.diagram for pt in g.points])
    assert a == b
    assert a.count(" -- ") == 4
    assert sum(line.strip().startswith("p") and "--" not in line for line in a.splitlines()) == 5


def test_graph_json():
    data = json.loads(export_json(row_graph("6")))
    assert len(data["points"]) == 5
    assert set(data["points"][0]) == {"id", "diagram", "gcm", "neighbors"}
    assert [e["labels"] for e in data["exchange_edges"]] == [[1], [2], [3], [4]]


def test_verdict_json():
    data = json.loads(export_json(enumerate_roots(row_graph("1"))))
    assert data["verdict"] == "finite"
    assert data["points"][0]["positive_root_count"] == 10


def test_not_i_finite_json():
    spec = GroupSpec.create(5, [("g", 0)])
    g = spec.gen("g")
    d = DynkinDiagram.build([g] * 4, {(0, 1): g, (1, 2): g, (2, 3): g})
    with pytest.raises(NotIFinite) as err:
        build_graph(d)
    data = json.loads(export_json(err.value))
    assert data == {"verdict": "not_i_finite", "at": {"i": 1, "j": 2, "point": 0}}


def test_match_json():
    spec = GroupSpec.create(7, [("z", 5)])
    z = spec.gen("z")
    d = DynkinDiagram.build([z] * 4, {(0, 1): z ** -1, (1, 2): z ** -1, (2, 3): z ** -1})
    (m,) = json.loads(export_json(match_diagram(d)))
    assert m["row"] == 1
    assert m["assignment"]["q"]["text"] == "z"


def test_figure_is_written(tmp_path):
    out = tmp_path / "row6.png"
    render_exchange_graph(row_graph("6"), str(out))
    assert out.read_bytes()[:8] == b"\x89PNG\r\n\x1a\n"
