"""Rank-4 classification data: generalized Dynkin diagrams and exchange graphs.

Diagram shapes and their argument order (1-based vertices):

* ``chain``     ``v1 e12 v2 e23 v3 e34 v4``       edges 12, 23, 34
* ``fork``      ``v1 e12 v2 e23 e24 v3 v4``       edges 12, 23, 24
* ``triangle``  ``v1 e12 v2 e23 e24 v3 e34 v4``   edges 12, 23, 24, 34

Labels are signed monomials in the row parameter: ``q``, ``-q^-2``, ``z``
(a primitive root of unity), ``-1``, ``1``.

Exchange-graph vertices are written ``"k"`` for the k-th printed diagram or
``"ijkl:k"`` for that diagram with its vertices 1..4 moved to i, j, k, l.
A suffix ``"@r"`` takes the diagram from row r instead; it only occurs in
data reproduced verbatim and then fixed by an erratum.
"""
from __future__ import annotations

SHAPE_EDGES = {
    "chain": ((0, 1), (1, 2), (2, 3)),
    "fork": ((0, 1), (1, 2), (1, 3)),
    "triangle": ((0, 1), (1, 2), (1, 3), (2, 3)),
}

# argument positions (vertex slots, edge slots) per shape
SHAPE_SLOTS = {
    "chain": ((0, 2, 4, 6), (1, 3, 5)),
    "fork": ((0, 2, 5, 6), (1, 3, 4)),
    "triangle": ((0, 2, 5, 7), (1, 3, 4, 6)),
}


def _c(*labels):
    return ("chain",) + labels


def _f(*labels):
    return ("fork",) + labels


def _t(*labels):
    return ("triangle",) + labels


ROWS = [
    dict(
        id="1", param="q", kind="free", exclude=("q^1",), char="p>0",
        diagrams=[_c("q", "q^-1", "q", "q^-1", "q", "q^-1", "q")],
        vertices=["1"], edges=[],
    ),
    dict(
        id="2", param="q", kind="free", exclude=("q^2",), char="p>0",
        diagrams=[_c("q^2", "q^-2", "q^2", "q^-2", "q^2", "q^-2", "q")],
        vertices=["1"], edges=[],
    ),
    dict(
        id="3", param="q", kind="free", exclude=("q^2",), char="p>0",
        diagrams=[_c("q", "q^-1", "q", "q^-1", "q", "q^-2", "q^2")],
        vertices=["1"], edges=[],
    ),
    dict(
        id="4", param="q", kind="free", exclude=("q^2",), char="p>0",
        diagrams=[_c("q^2", "q^-2", "q^2", "q^-2", "q", "q^-1", "q")],
        vertices=["1"], edges=[],
    ),
    dict(
        id="5", param="q", kind="free", exclude=("q^1",), char="p>0",
        diagrams=[_f("q", "q^-1", "q", "q^-1", "q^-1", "q", "q")],
        vertices=["1"], edges=[],
    ),
    dict(
        id="6", param="q", kind="free", exclude=("q^2",), char="p>0",
        diagrams=[
            _c("-1", "q^-1", "q", "q^-1", "q", "q^-1", "q"),
            _c("-1", "q", "-1", "q^-1", "q", "q^-1", "q"),
            _c("q", "q^-1", "-1", "q", "-1", "q^-1", "q"),
        ],
        vertices=["1", "2", "3", "4321:2", "4321:1"],
        edges=[("1", "2", 1), ("2", "3", 2), ("3", "4321:2", 3), ("4321:2", "4321:1", 4)],
    ),
    dict(
        id="7", param="q", kind="free", exclude=("q^4",), char="p>0",
        diagrams=[
            _c("-1", "q^-2", "q^2", "q^-2", "q^2", "q^-2", "q"),
            _c("-1", "q^2", "-1", "q^-2", "q^2", "q^-2", "q"),
            _c("q^2", "q^-2", "-1", "q^2", "-1", "q^-2", "q"),
            _c("q^2", "q^-2", "q^2", "q^-2", "-1", "q^2", "-q^-1"),
        ],
        vertices=["1", "2", "3", "4"],
        edges=[("1", "2", 1), ("2", "3", 2), ("3", "4", 3)],
    ),
    dict(
        id="8", param="q", kind="free", exclude=("q^2",), char="p>0",
        diagrams=[
            _c("-1", "q^-1", "q", "q^-1", "q", "q^-2", "q^2"),
            _c("-1", "q", "-1", "q^-1", "q", "q^-2", "q^2"),
            _c("q", "q^-1", "-1", "q", "-1", "q^-2", "q^2"),
            _t("q", "q^-1", "q", "q^-1", "q^-1", "-1", "q^2", "-1"),
        ],
        vertices=["1", "2", "3", "4", "1243:3", "1243:2", "1243:1"],
        edges=[
            ("1", "2", 1), ("2", "3", 2), ("3", "4", 3), ("4", "1243:3", 4),
            ("1243:3", "1243:2", 2), ("1243:2", "1243:1", 1),
        ],
    ),
    dict(
        id="9", param="q", kind="free", exclude=("q^2", "q^3"), char="p>0",
        diagrams=[
            _c("q^2", "q^-2", "q^2", "q^-2", "q", "q^-1", "-1"),
            _c("q^2", "q^-2", "q^2", "q^-2", "-1", "q", "-1"),
            _t("q^2", "q^-2", "-1", "q^2", "q^-1", "-1", "q^-1", "q"),
            _c("q^2", "q^-2", "q^2", "q^-2", "-1", "q^3", "q^-3"),
            _c("q^2", "q^-2", "q", "q^-1", "-1", "q^3", "q^-3"),
            _t("q^2", "q^-2", "-1", "q^2", "q", "-1", "q^-3", "-1"),
        ],
        vertices=["1", "2", "3", "3214:6", "3214:4", "3241:5"],
        edges=[
            ("1", "2", 4), ("2", "3", 3), ("3", "3214:6", 2), ("3214:6", "3214:4", 1),
            ("3241:5", "3214:6", 4),
        ],
    ),
    dict(
        id="10", param="q", kind="free", exclude=("q^2",), char="p>0",
        diagrams=[
            _c("q^-1", "q", "-1", "q^-1", "q", "q^-1", "q"),
            _c("-1", "q^-1", "-1", "q", "-1", "q^-1", "q"),
            _c("-1", "q", "q^-1", "q", "-1", "q^-1", "q"),
            _c("-1", "q^-1", "q", "q^-1", "-1", "q", "-1"),
            _c("-1", "q^-1", "q", "q^-1", "q", "q^-1", "-1"),
            _c("-1", "q", "-1", "q^-1", "-1", "q", "-1"),
        ],
        vertices=["1", "2", "4", "5", "3", "6", "4321:4", "3214:3", "4321:2", "4321:1"],
        edges=[
            ("1", "2", 2), ("2", "4", 3), ("4", "5", 4), ("3", "6", 3), ("6", "4321:4", 4),
            ("2", "3", 1), ("4", "6", 1), ("5", "4321:4", 1), ("3214:3", "4321:2", 4),
            ("6", "3214:3", 2), ("4321:4", "4321:2", 2), ("4321:2", "4321:1", 3),
        ],
    ),
    dict(
        id="11", param="q", kind="free", exclude=("q^4",), char="p>0",
        diagrams=[
            _c("q^-2", "q^2", "-1", "q^-2", "q^2", "q^-2", "q"),
            _c("-1", "q^-2", "-1", "q^2", "-1", "q^-2", "q"),
            _c("-1", "q^2", "q^-2", "q^2", "-1", "q^-2", "q"),
            _c("-1", "q^-2", "q^2", "q^-2", "-1", "q^2", "-q^-1"),
            _c("-1", "q^2", "-1", "q^-2", "-1", "q^2", "-q^-1"),
            _c("q^2", "q^-2", "-1", "q^2", "q^-2", "q^2", "-q^-1"),
        ],
        vertices=["1", "2", "3", "4", "5", "6"],
        edges=[
            ("1", "2", 2), ("2", "3", 1), ("2", "4", 3), ("3", "5", 3), ("4", "5", 1),
            ("5", "6", 2),
        ],
    ),
    dict(
        id="12", param="q", kind="free", exclude=("q^2",), char="p>0",
        diagrams=[
            _c("q^-1", "q", "-1", "q^-1", "q", "q^-2", "q^2"),
            _c("-1", "q^-1", "-1", "q", "-1", "q^-2", "q^2"),
            _c("-1", "q", "q^-1", "q", "-1", "q^-2", "q^2"),
            _t("-1", "q^-1", "q", "q^-1", "q^-1", "-1", "q^2", "-1"),
            _f("q", "q^-1", "-1", "q", "q", "q^-1", "q^-1"),
            _t("-1", "q", "-1", "q^-1", "q^-1", "-1", "q^2", "-1"),
        ],
        vertices=["1", "2", "3", "4", "6", "1243:1", "1243:2", "1243:3"],
        edges=[
            ("1", "2", 2), ("2", "3", 1), ("2", "4", 3), ("3", "6", 3), ("4", "6", 1),
            ("1243:1", "1243:2", 2), ("1243:2", "1243:3", 1), ("1243:2", "4", 4),
            ("1243:3", "6", 4),
        ],
    ),
    dict(
        id="13", param="q", kind="free", exclude=("q^2",), char="p>0",
        diagrams=[
            _c("q", "q^-1", "q", "q^-1", "-1", "q^2", "q^-2"),
            _t("q", "q^-1", "-1", "q", "q", "-1", "q^-2", "-1"),
            _f("-1", "q^-1", "q", "q^-1", "q^-1", "q", "q"),
            _f("-1", "q", "-1", "q^-1", "q^-1", "q", "q"),
        ],
        vertices=["1", "2", "4", "3", "1243:1@11"],
        edges=[("1", "2", 3), ("2", "4", 2), ("4", "3", 1), ("1243:1@11", "2", 4)],
    ),
    dict(
        id="14", param="q", kind="free", exclude=("q^2",), char="p!=2",
        diagrams=[
            _c("q", "q^-1", "q", "q^-1", "-1", "-q", "-q^-1"),
            _t("q", "q^-1", "-1", "q", "-1", "-1", "-q^-1", "-1"),
            _c("q", "q^-1", "-1", "-1", "-1", "-q", "-q^-1"),
            _c("-q^-1", "-q", "-q^-1", "-q", "-1", "q^-1", "q"),
            _t("-q^-1", "-q", "-1", "-q^-1", "-1", "-1", "q", "-1"),
        ],
        vertices=[
            "1", "2", "1243:3", "3412:5", "3214:1", "3214:2", "3241:3", "1432:5",
        ],
        edges=[
            ("1", "2", 3), ("2", "1243:3", 4), ("1243:3", "3412:5", 2),
            ("3214:1", "3214:2", 1), ("3214:2", "3241:3", 4), ("3241:3", "1432:5", 2),
            ("3214:2", "2", 2),
        ],
    ),
    dict(
        id="15", param="z", kind="root3", exclude=(), char="p>3",
        diagrams=[_c("-z^-1", "-z", "-z^-1", "-z", "-z^-1", "-z", "z")],
        vertices=["1"], edges=[],
    ),
    dict(
        id="15'", param=None, kind=None, exclude=(), char="p=3",
        diagrams=[_c("-1", "-1", "-1", "-1", "-1", "-1", "1")],
        vertices=["1"], edges=[],
    ),
    dict(
        id="16", param="z", kind="root3", exclude=(), char="p>3",
        diagrams=[
            _c("-1", "-z", "-z^-1", "-z", "-z^-1", "-z", "z"),
            _c("-1", "-z^-1", "-1", "-z", "-z^-1", "-z", "z"),
            _c("-z^-1", "-z", "-1", "-z^-1", "-1", "-z", "z"),
            _c("-z^-1", "-z", "-z^-1", "-z", "-1", "-z^-1", "z^-1"),
        ],
        vertices=["1", "2", "3", "4"],
        edges=[("1", "2", 1), ("2", "3", 2), ("3", "4", 3)],
    ),
    dict(
        id="17", param="z", kind="root3", exclude=(), char="p>3",
        diagrams=[
            _c("-z", "-z^-1", "-z", "-z^-1", "-z", "-z^-1", "z"),
            _c("-z", "-z^-1", "-z", "-z^-1", "-1", "-1", "z"),
            _t("-z", "-z^-1", "-1", "-z", "z^-1", "-1", "-1", "z"),
            _c("-z", "-z^-1", "z", "z^-1", "-1", "-z^-1", "-z"),
            _c("-z", "-z^-1", "-z", "-z^-1", "-1", "-z^-1", "-z"),
            _t("-z", "-z^-1", "-1", "-z", "z", "-1", "-z", "-1"),
        ],
        vertices=[
            "2", "3", "3214:6", "3214:5", "1", "3421:4", "3214:4", "1432:1",
            "3412:5", "3412:6", "1432:3", "1432:2",
        ],
        edges=[
            ("2", "3", 3), ("3", "3214:6", 2), ("3214:6", "3214:5", 1), ("2", "1", 4),
            ("3", "3421:4", 4), ("3214:6", "3214:4", 4), ("3412:5", "3412:6", 1),
            ("3412:6", "1432:3", 4), ("1432:3", "1432:2", 3), ("3412:6", "3421:4", 2),
            ("1432:3", "3214:4", 2), ("1432:2", "1432:1", 2),
        ],
    ),
    dict(
        id="18", param="z", kind="root3", exclude=(), char="p!=3",
        diagrams=[
            _c("z^-1", "z", "z^-1", "z", "z", "z^-1", "-1"),
            _c("z^-1", "z", "z^-1", "z", "-1", "z", "-1"),
            _t("z^-1", "z", "-1", "z^-1", "z^-1", "-1", "z^-1", "z"),
            _f("z^-1", "z", "z", "z^-1", "z^-1", "-1", "-1"),
            _f("z^-1", "z", "-1", "z^-1", "z", "-1", "-1"),
            _f("z^-1", "z", "z^-1", "z", "z", "-1", "-1"),
        ],
        vertices=[
            "1", "2", "3", "3214:5", "3214:6", "3214:4", "3241:1", "3241:2", "3241:3",
            "3241:5",
        ],
        edges=[
            ("1", "2", 4), ("2", "3", 3), ("3", "3214:5", 2), ("3214:5", "3214:4", 4),
            ("3214:6", "3214:5", 1), ("3241:1", "3241:2", 1), ("3241:2", "3241:3", 4),
            ("3241:3", "3241:5", 2), ("3241:5", "3214:6", 4), ("3241:5", "3214:4", 1),
        ],
    ),
    dict(
        id="19", param="z", kind="root3", exclude=(), char="p>3",
        diagrams=[
            _c("-z", "-z^-1", "-1", "-z", "-z^-1", "-z", "z"),
            _c("-1", "-z", "-1", "-z^-1", "-1", "-z", "z"),
            _c("-1", "-z^-1", "-z", "-z^-1", "-1", "-z", "z"),
            _c("-1", "-z", "-z^-1", "-z", "-1", "-z^-1", "z^-1"),
            _c("-1", "-z^-1", "-1", "-z", "-1", "-z^-1", "z^-1"),
            _c("-z^-1", "-z", "-1", "-z^-1", "-z", "-z^-1", "z^-1"),
        ],
        vertices=["1", "2", "3", "4", "5", "6"],
        edges=[
            ("1", "2", 2), ("2", "4", 3), ("4", "6", 2), ("2", "3", 1), ("4", "5", 1),
            ("3", "5", 3),
        ],
    ),
    dict(
        id="20", param="z", kind="root3", exclude=(), char="p!=3",
        diagrams=[
            _c("z^-1", "z", "-1", "z^-1", "z", "z", "-1"),
            _c("z^-1", "z", "-1", "z^-1", "-z^-1", "z^-1", "-1"),
            _c("-1", "z^-1", "-1", "z", "-1", "z", "-1"),
            _c("-1", "z", "z^-1", "z", "-1", "z", "-1"),
            _c("-1", "z^-1", "-1", "z", "z", "z^-1", "-1"),
            _c("-1", "z", "z^-1", "z", "z", "z^-1", "-1"),
            _t("-1", "z^-1", "z", "z^-1", "z^-1", "-1", "z^-1", "z"),
            _f("z", "z^-1", "-1", "z", "z", "z^-1", "-1"),
            _t("-1", "z", "-1", "z^-1", "z^-1", "-1", "z^-1", "z"),
            _f("z", "z^-1", "z", "z", "z^-1", "z^-1", "-1"),
        ],
        vertices=["1", "2", "5", "6", "3", "4", "7", "9", "10", "8"],
        edges=[
            ("1", "2", 4), ("2", "5", 2), ("5", "6", 1), ("3", "4", 1), ("3", "2", 2),
            ("5", "3", 4), ("6", "4", 4), ("3", "7", 3), ("4", "9", 3), ("7", "9", 1),
            ("10", "8", 4), ("8", "9", 2),
        ],
    ),
    dict(
        id="21", param="z", kind="root3", exclude=(), char="p!=3",
        diagrams=[
            _c("-1", "z^-1", "z", "z^-1", "z", "z", "-1"),
            _c("-1", "z^-1", "z", "z^-1", "-z^-1", "z^-1", "-1"),
            _c("-1", "z", "-1", "z^-1", "z", "z", "-1"),
            _c("-1", "z", "-1", "z^-1", "-z^-1", "z^-1", "-1"),
            _c("z", "z^-1", "-1", "z", "z", "z^-1", "-1"),
            _c("z", "z^-1", "-1", "z", "-1", "z", "-1"),
            _t("z", "z^-1", "z", "z^-1", "z^-1", "-1", "z^-1", "z"),
        ],
        vertices=["1", "2", "3", "4", "5", "6", "7"],
        edges=[
            ("1", "3", 1), ("3", "6", 2), ("6", "7", 3), ("2", "4", 1), ("4", "5", 2),
            ("2", "1", 4), ("4", "3", 4), ("5", "6", 4),
        ],
    ),
    dict(
        id="22", param="z", kind="root4", exclude=(), char="p!=2",
        diagrams=[
            _c("-z", "z", "-1", "-z", "z", "z", "-z"),
            _c("-1", "-z", "-1", "z", "-1", "z", "-z"),
            _c("-1", "z", "-z", "z", "-1", "z", "-z"),
            _t("-1", "-z", "z", "-z", "-1", "-1", "-z", "-1"),
            _c("-1", "-z", "z", "-1", "-1", "z", "-z"),
            _c("-1", "z", "-1", "-1", "-1", "z", "-z"),
            _t("-z", "z", "-1", "-z", "-1", "z", "-z", "-1"),
            _t("-1", "z", "-1", "-z", "-1", "-1", "-z", "-1"),
        ],
        vertices=[
            "1", "2", "4", "1243:5", "3", "8", "1243:6", "3214:7", "3412:7", "1423:6",
            "1432:8", "1432:3", "1423:5", "1432:4", "1432:2", "1432:1",
        ],
        edges=[
            ("1", "2", 2), ("2", "4", 3), ("4", "1243:5", 4), ("3", "8", 3),
            ("8", "1243:6", 4), ("2", "3", 1), ("4", "8", 1), ("1243:5", "1243:6", 1),
            ("8", "3214:7", 2), ("1243:6", "3412:7", 2), ("3214:7", "1423:6", 4),
            ("3412:7", "1432:8", 4), ("1423:6", "1432:8", 2), ("1432:8", "1432:3", 3),
            ("1423:6", "1423:5", 1), ("1432:8", "1432:4", 1), ("1432:3", "1432:2", 1),
            ("1423:5", "1432:4", 2), ("1432:4", "1432:2", 3), ("1432:2", "1432:1", 4),
        ],
    ),
]
