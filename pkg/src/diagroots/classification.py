"""Rank-4 classification templates, diagram matching and row verification."""
from __future__ import annotations

import re
import time
from dataclasses import dataclass, field
from functools import lru_cache
from itertools import permutations
from math import gcd
from typing import Optional, Sequence

from . import tables
from .braiding import DynkinDiagram, NotIFinite
from .cartangraph import (
    CartanGraph, PointLimitExceeded, build_graph, check_goodnei_theorem, exchange_graph,
    semi_cartan_violations,
)
from .rootsystem import (
    Finite, check_cartan_graph_axioms, check_lemma_jik, check_root_axioms, enumerate_roots,
    roots_by_reduced_words,
)
from .unitgroup import FieldUnit, GroupSpec, element_order

_LABEL = re.compile(r"(-)?(?:(1)|([a-z])(?:\^(-?\d+))?)")
_TOKEN = re.compile(r"(?:([1-4]{4}):)?(\d+)(?:@(\S+))?")


class ConstraintViolated(ValueError):
    """An assignment or characteristic falls outside a row's parameter range."""

    def __init__(self, constraint: str):
        self.constraint = constraint
        super().__init__(constraint)


class UnsupportedCharacteristic(ValueError):
    pass


def parse_label(text: str) -> tuple[bool, Optional[str], int]:
    """``"-q^-2"`` -> ``(True, "q", -2)``; ``"-1"`` -> ``(True, None, 0)``."""
    m = _LABEL.fullmatch(text)
    if not m:
        raise ValueError(f"bad template label {text!r}")
    neg = m.group(1) is not None
    if m.group(2):
        return neg, None, 0
    return neg, m.group(3), int(m.group(4) or 1)


@dataclass(frozen=True)
class TemplateDiagram:
    shape: str
    labels: tuple[str, ...]

    def vertex_labels(self) -> tuple[str, ...]:
        vs, _ = tables.SHAPE_SLOTS[self.shape]
        return tuple(self.labels[k] for k in vs)

    def edge_labels(self) -> dict[tuple[int, int], str]:
        _, es = tables.SHAPE_SLOTS[self.shape]
        return {e: self.labels[k] for e, k in zip(tables.SHAPE_EDGES[self.shape], es)}

    def equations(self) -> list[tuple[tuple[str, ...], str]]:
        """``(position, label)`` for the 4 vertices and all 6 vertex pairs."""
        out = [(("v", a), lab) for a, lab in enumerate(self.vertex_labels())]
        edges = self.edge_labels()
        for a in range(4):
            for b in range(a + 1, 4):
                out.append((("e", a, b), edges.get((a, b), "1")))
        return out


@dataclass(frozen=True)
class Erratum:
    """A correction to the printed exchange-graph data of one row.

    ``printed`` / ``corrected`` are vertex tokens (renaming), labeled edges
    ``(a, b, label)``, or None for an item missing on one side.
    """

    row: str
    printed: object
    corrected: object
    reason: str


ERRATA: tuple[Erratum, ...] = (
    Erratum("10", "3214:3", "4321:3", "r_4 of D6 is the reversal of D3, not tau3214 D3"),
    Erratum("12", None, "5", "the fork diagram is a point but is missing from the graph"),
    Erratum("12", None, ("6", "5", 2), "r_2 joins D6 and the fork diagram D5"),
    Erratum("13", "1243:1@11", "1243:1", "the diagram is tau1243 of D13,1, not of D11,1"),
    Erratum("14", None, "3412:4", "r_1 of tau3412 D5 is a further point"),
    Erratum("14", None, "1432:4", "r_1 of tau1432 D5 is a further point"),
    Erratum("14", None, ("3412:5", "3412:4", 1), "edge to the missing point tau3412 D4"),
    Erratum("14", None, ("1432:5", "1432:4", 3), "edge to the missing point tau1432 D4"),
    Erratum("14", None, ("3412:5", "1432:5", 4), "r_4 exchanges tau3412 D5 and tau1432 D5"),
    Erratum("17", "3214:4", "3241:4", "the point next to tau1432 D3 is tau3241 D4"),
    Erratum("18", ("3241:2", "3241:3", 4), ("3241:2", "3241:3", 3), "the reflection joining them is r_3"),
    Erratum("18", "3241:1", "4231:1", "the symmetric branch is obtained by tau4231"),
    Erratum("18", "3241:2", "4231:2", "the symmetric branch is obtained by tau4231"),
    Erratum("18", "3241:3", "4231:3", "the symmetric branch is obtained by tau4231"),
    Erratum("19", ("4", "6", 2), ("5", "6", 2), "r_2 of D6 is D5; D4 is fixed by r_2"),
    Erratum("20", ("3", "2", 2), ("3", "1", 2), "r_2 of D3 is D1; D2 already has its 2-edge"),
)


@dataclass(frozen=True)
class RowTemplate:
    id: str
    param: Optional[str]
    kind: Optional[str]          # "free", "root3", "root4" or None
    exclusions: tuple[str, ...]  # e.g. ("q^2",) meaning q^2 != 1
    char: str
    diagrams: tuple[TemplateDiagram, ...]
    vertices: tuple[str, ...]
    edges: tuple[tuple[str, str, int], ...]

    def corrected(self, errata: Sequence[Erratum] = ERRATA) -> "RowTemplate":
        vertices = list(self.vertices)
        edges = list(self.edges)
        mine = [e for e in errata if e.row == self.id]
        for e in mine:
            if isinstance(e.corrected, tuple) or isinstance(e.printed, tuple):
                if e.printed is not None:
                    edges.remove(e.printed)
                if e.corrected is not None:
                    edges.append(e.corrected)
        for e in mine:
            if isinstance(e.corrected, tuple) or isinstance(e.printed, tuple):
                continue
            if e.printed is None:
                vertices.append(e.corrected)
                continue
            vertices = [e.corrected if v == e.printed else v for v in vertices]
            edges = [
                (e.corrected if a == e.printed else a, e.corrected if b == e.printed else b, lab)
                for a, b, lab in edges
            ]
        return RowTemplate(
            self.id, self.param, self.kind, self.exclusions, self.char, self.diagrams,
            tuple(vertices), tuple(edges),
        )


def _template(d: dict) -> RowTemplate:
    return RowTemplate(
        id=d["id"], param=d["param"], kind=d["kind"], exclusions=tuple(d["exclude"]),
        char=d["char"],
        diagrams=tuple(TemplateDiagram(t[0], tuple(t[1:])) for t in d["diagrams"]),
        vertices=tuple(d["vertices"]),
        edges=tuple(tuple(e) for e in d["edges"]),
    )


_ROWS = tuple(_template(d) for d in tables.ROWS)
_BY_ID = {r.id: r for r in _ROWS}


def builtin_rows() -> list[RowTemplate]:
    """The 23 rows as printed (no errata applied)."""
    return list(_ROWS)


def get_row(row_id: str | int) -> RowTemplate:
    return _BY_ID[str(row_id)]


# --- constraints -----------------------------------------------------------

def char_allows(char: str, p: int) -> bool:
    if p == 0:
        return False
    return {
        "p>0": True,
        "p!=2": p != 2,
        "p!=3": p != 3,
        "p>3": p > 3,
        "p=3": p == 3,
        "p!=2,3": p not in (2, 3),
    }[char]


def check_assignment(row: RowTemplate, spec: GroupSpec, assignment: dict[str, FieldUnit]) -> None:
    """Raise :class:`ConstraintViolated` naming the first failing condition."""
    if not char_allows(row.char, spec.p):
        raise ConstraintViolated(row.char if spec.p else "p>0")
    if row.param is None:
        return
    x = assignment.get(row.param)
    if x is None:
        raise ConstraintViolated(f"missing value for {row.param}")
    if x.spec != spec:
        raise ConstraintViolated("assignment lives in a different group spec")
    if row.kind == "root3" and element_order(x) != 3:
        raise ConstraintViolated(f"{row.param} in G'_3")
    if row.kind == "root4" and element_order(x) != 4:
        raise ConstraintViolated(f"{row.param} in G'_4")
    for ex in row.exclusions:
        _, _, k = parse_label(ex)
        if (x ** k).is_one():
            if k == 1:
                raise ConstraintViolated(f"{row.param} in k*\\{{1}}")
            raise ConstraintViolated(f"{row.param}^{k} != 1")


def _eval(label: str, spec: GroupSpec, assignment: dict[str, FieldUnit]) -> FieldUnit:
    neg, name, k = parse_label(label)
    u = spec.identity() if name is None else assignment[name] ** k
    return -u if neg else u


def _instantiate_one(t: TemplateDiagram, spec, assignment) -> DynkinDiagram:
    vertex = [_eval(lab, spec, assignment) for lab in t.vertex_labels()]
    edges = {e: _eval(lab, spec, assignment) for e, lab in t.edge_labels().items()}
    return DynkinDiagram.build(vertex, edges)


def instantiate_row(
    row: RowTemplate, spec: GroupSpec, assignment: Optional[dict[str, FieldUnit]] = None,
) -> list[DynkinDiagram]:
    """The printed diagrams of ``row`` with the parameter substituted."""
    assignment = assignment or {}
    check_assignment(row, spec, assignment)
    return [_instantiate_one(t, spec, assignment) for t in row.diagrams]


def tau(d: DynkinDiagram, word: str) -> DynkinDiagram:
    """``tau_ijkl``: vertices 1, 2, 3, 4 move to i, j, k, l."""
    return d.permuted([int(c) - 1 for c in word])


def token_diagram(row: RowTemplate, token: str, spec, assignment) -> DynkinDiagram:
    m = _TOKEN.fullmatch(token)
    if not m:
        raise ValueError(f"bad vertex token {token!r}")
    word, k, other = m.groups()
    src = get_row(other) if other else row
    d = _instantiate_one(src.diagrams[int(k) - 1], spec, assignment)
    return tau(d, word) if word else d


# --- matching --------------------------------------------------------------

@dataclass(frozen=True)
class MatchResult:
    row: str
    assignment: tuple[tuple[str, FieldUnit], ...]
    perm: tuple[int, ...]   # template vertex a sits at input vertex perm[a]
    diagram: int            # 1-based printed diagram index

    def describe(self) -> str:
        parts = [f"row {self.row}"]
        for name, u in self.assignment:
            parts.append(f"{name} ↦ {u}")
        return ", ".join(parts)


def _combination(ks: list[int]) -> tuple[int, list[int]]:
    """``g = gcd(ks)`` and integers ``c`` with ``sum(c_i k_i) = g``."""
    g, coeffs = 0, [0] * len(ks)
    for idx, k in enumerate(ks):
        if k == 0:
            continue
        if g == 0:
            g, coeffs[idx] = abs(k), (1 if k > 0 else -1)
            continue
        # extended gcd of g and k
        old_r, r, old_s, s, old_t, t = g, k, 1, 0, 0, 1
        while r:
            qt = old_r // r
            old_r, r = r, old_r - qt * r
            old_s, s = s, old_s - qt * s
            old_t, t = t, old_t - qt * t
        if old_r < 0:
            old_r, old_s, old_t = -old_r, -old_s, -old_t
        coeffs = [c * old_s for c in coeffs]
        coeffs[idx] = old_t
        g = old_r
    return g, coeffs


def template_gcd(t: TemplateDiagram) -> int:
    return gcd(*[parse_label(lab)[2] for _, lab in t.equations()])


@lru_cache(maxsize=None)
def _compiled(t: TemplateDiagram):
    eqs = []
    for pos, lab in t.equations():
        neg, name, k = parse_label(lab)
        eqs.append((pos, neg, k if name else 0))
    g, coeffs = _combination([k for _, _, k in eqs])
    return tuple(eqs), g, tuple(coeffs)


def _unify(row: RowTemplate, t: TemplateDiagram, d: DynkinDiagram, perm) -> Optional[FieldUnit]:
    spec = d.spec
    eqs, g, coeffs = _compiled(t)
    targets = []
    for pos, neg, _ in eqs:
        if pos[0] == "v":
            obs = d.vertex[perm[pos[1]]]
        else:
            obs = d.edge(perm[pos[1]], perm[pos[2]])
        targets.append(-obs if neg else obs)
    if row.param is None:
        return spec.identity() if all(tg.is_one() for tg in targets) else None
    if g != 1:
        return None
    x = spec.identity()
    for c, tg in zip(coeffs, targets):
        if c:
            x = x * tg ** c
    for (_, _, k), tg in zip(eqs, targets):
        if x ** k != tg:
            return None
    return x


def match_diagram(d: DynkinDiagram, rows: Optional[Sequence[RowTemplate]] = None) -> list[MatchResult]:
    """Every row (with parameter value) whose printed diagrams contain ``d`` up to relabeling."""
    spec = d.spec
    if spec.p == 0:
        raise UnsupportedCharacteristic("classification data is stated for p > 0")
    if d.theta != 4:
        return []
    out: list[MatchResult] = []
    seen = set()
    for row in rows if rows is not None else _ROWS:
        if not char_allows(row.char, spec.p):
            continue
        for idx, t in enumerate(row.diagrams, 1):
            for perm in permutations(range(4)):
                x = _unify(row, t, d, perm)
                if x is None:
                    continue
                assignment = {row.param: x} if row.param else {}
                try:
                    check_assignment(row, spec, assignment)
                except ConstraintViolated:
                    continue
                key = (row.id, tuple(sorted(assignment.items(), key=lambda kv: kv[0])))
                if key in seen:
                    continue
                seen.add(key)
                out.append(MatchResult(row.id, key[1], perm, idx))
    return out


# --- canonical assignments and verification -------------------------------

def canonical_assignments(row: RowTemplate) -> list[tuple[GroupSpec, dict[str, FieldUnit]]]:
    """Parameter choices used by ``verify-tables`` and the acceptance suite."""
    out = []
    if row.kind is None:
        spec = GroupSpec.create(3)
        out.append((spec, {}))
    elif row.kind == "free":
        spec = GroupSpec.create(5, [("q", 0)])
        out.append((spec, {"q": spec.gen("q")}))
        spec = GroupSpec.create(7, [("q", 5)])
        out.append((spec, {"q": spec.gen("q")}))
    elif row.kind == "root3":
        for p in (5, 7):
            spec = GroupSpec.create(p, [("z", 3)])
            out.append((spec, {"z": spec.gen("z")}))
    elif row.kind == "root4":
        for p in (3, 5):
            spec = GroupSpec.create(p, [("z", 4)])
            out.append((spec, {"z": spec.gen("z")}))
    return out


@dataclass
class Check:
    name: str
    ok: bool
    detail: str = ""


@dataclass
class Report:
    row: str
    p: int
    assignment: dict[str, FieldUnit]
    points: int = 0
    checks: list[Check] = field(default_factory=list)
    errata: list[Erratum] = field(default_factory=list)
    seconds: float = 0.0
    graph: Optional[CartanGraph] = field(default=None, repr=False)

    @property
    def ok(self) -> bool:
        return bool(self.checks) and all(c.ok for c in self.checks)

    def add(self, name: str, ok: bool, detail: str = "") -> bool:
        self.checks.append(Check(name, ok, detail))
        return ok

    def failures(self) -> list[Check]:
        return [c for c in self.checks if not c.ok]


def verify_row(
    row: RowTemplate, spec: GroupSpec, assignment: Optional[dict[str, FieldUnit]] = None,
    errata: Optional[Sequence[Erratum]] = ERRATA, max_points: int = 4096, max_roots: int = 512,
) -> Report:
    """Rebuild the row's Cartan graph and compare it with the encoded tables."""
    t0 = time.perf_counter()
    assignment = dict(assignment or {})
    applied = [e for e in errata or () if e.row == row.id]
    used = row.corrected(applied) if applied else row
    rep = Report(row.id, spec.p, assignment, errata=applied)
    try:
        printed = instantiate_row(used, spec, assignment)
    except ConstraintViolated as exc:
        rep.add("constraints", False, str(exc))
        return rep
    try:
        g = build_graph(printed[0], max_points=max_points)
    except (NotIFinite, PointLimitExceeded) as exc:
        rep.add("graph", False, str(exc))
        return rep
    rep.graph = g
    rep.points = len(g)
    rep.add("semi_cartan", not semi_cartan_violations(g), "; ".join(semi_cartan_violations(g)[:3]))

    verdict = enumerate_roots(g, max_pos_roots=max_roots)
    if not rep.add("finite", isinstance(verdict, Finite), type(verdict).__name__):
        rep.seconds = time.perf_counter() - t0
        return rep

    # every listed diagram is some point up to relabeling
    missing = []
    for k, d in enumerate(printed, 1):
        if not any(g.find(d.permuted(pm)) is not None for pm in permutations(range(4))):
            missing.append(str(k))
    rep.add("listed_diagrams", not missing, "not reached: " + ",".join(missing) if missing else "")

    # the encoded vertices are exactly the points
    vmap, bad = {}, []
    for tok in used.vertices:
        x = g.find(token_diagram(used, tok, spec, assignment))
        if x is None:
            bad.append(tok)
        vmap[tok] = x
    ids = [x for x in vmap.values() if x is not None]
    bij = not bad and len(set(ids)) == len(ids) == len(g)
    detail = ""
    if bad:
        detail = "not points: " + ", ".join(bad)
    elif not bij:
        detail = f"{len(set(ids))} distinct of {len(g)} points"
    rep.add("graph_vertices", bij, detail)

    if bij:
        want = {}
        for a, b, lab in used.edges:
            x, y = vmap[a], vmap[b]
            want.setdefault((min(x, y), max(x, y)), set()).add(lab - 1)
        got = {(x, y): set(ls) for x, y, ls in exchange_graph(g).edges}
        inv = {x: tok for tok, x in vmap.items()}
        diff = []
        for key in sorted(set(want) | set(got)):
            if want.get(key) != got.get(key):
                w = sorted(i + 1 for i in want.get(key, ()))
                h = sorted(i + 1 for i in got.get(key, ()))
                diff.append(f"{inv[key[0]]}-{inv[key[1]]}: encoded {w} computed {h}")
        rep.add("graph_edges", not diff, "; ".join(diff))
    else:
        rep.add("graph_edges", False, "skipped: vertex bijection failed")

    data = verdict.data
    ax = check_root_axioms(g, data)
    rep.add("root_axioms", ax.ok, ax.summary())
    cg = check_cartan_graph_axioms(g, data)
    rep.add("cartan_graph_axioms", cg.ok, cg.summary())
    lj = check_lemma_jik(g, data)
    rep.add("root_strings", lj.ok, lj.summary())
    diffs = []
    for pt in g.points:
        words = roots_by_reduced_words(g, pt.id, max_roots=max_roots)
        if words.roots != set(data.positive[pt.id]):
            diffs.append(str(pt.id))
        elif not words.ok:
            diffs.append(f"{pt.id} ({words.problems[0]})")
    rep.add("reduced_words", not diffs, "points " + ",".join(diffs) if diffs else "")
    gn = check_goodnei_theorem(g)
    detail = gn.kind + (f" {gn.type_name}" if gn.type_name else "")
    if gn.point is not None:
        detail += f" at point {gn.point}"
    rep.add("good_neighborhood", gn.ok, detail)
    rep.seconds = time.perf_counter() - t0
    return rep


def dump_templates(rows: Optional[Sequence[RowTemplate]] = None) -> str:
    """Plain-text listing of the encoded tables, for auditing by eye."""
    lines = []
    for row in rows if rows is not None else _ROWS:
        head = f"row {row.id}"
        if row.param:
            kind = {"free": "in k*", "root3": "in G'_3", "root4": "in G'_4"}[row.kind]
            head += f"  {row.param} {kind}"
        if row.exclusions:
            head += "  " + ", ".join(f"{e} != 1" for e in row.exclusions)
        lines.append(head + f"  char {row.char}")
        for k, t in enumerate(row.diagrams, 1):
            vs = " ".join(f"v{a + 1}={lab}" for a, lab in enumerate(t.vertex_labels()))
            es = " ".join(f"e{a + 1}{b + 1}={lab}" for (a, b), lab in t.edge_labels().items())
            lines.append(f"  D{k} {t.shape:<8} {vs}  {es}")
        lines.append("  points " + " ".join(row.vertices))
        for a, b, lab in row.edges:
            lines.append(f"  {a} -{lab}- {b}")
    return "\n".join(lines) + "\n"
