"""Input documents, and DOT / JSON / PNG exporters.

Input format, one statement per line, ``#`` starts a comment::

    p = 7
    gen q order 0
    rank = 4
    v1 = q
    e12 = q^-1
    ...

``q<i><j> = ...`` lines give a full braiding matrix instead of a diagram.
Optional ``max_points = N`` and ``max_roots = N`` lines set limits.
"""
from __future__ import annotations

import json
import re
import warnings
from dataclasses import dataclass, field
from typing import Optional, Union

from .braiding import BraidingMatrix, DynkinDiagram, MAX_RANK
from .cartangraph import CartanGraph, ExchangeGraph, exchange_graph
from .unitgroup import FieldUnit, GroupSpec, GroupSpecError, format_unit


class ParseError(ValueError):
    def __init__(self, line: int, col: int, msg: str):
        self.line, self.col, self.msg = line, col, msg
        super().__init__(f"line {line}, column {col}: {msg}")


class SignCollapseWarning(UserWarning):
    """``-1`` was written in characteristic 2, where it equals 1."""


@dataclass
class InputDoc:
    spec: GroupSpec
    rank: int
    value: Union[BraidingMatrix, DynkinDiagram]
    limits: dict[str, int] = field(default_factory=dict)

    @property
    def diagram(self) -> DynkinDiagram:
        from .braiding import dynkin_of
        return self.value if isinstance(self.value, DynkinDiagram) else dynkin_of(self.value)


_STMT = re.compile(r"\s*([A-Za-z_][A-Za-z_0-9]*)\s*=\s*(.*?)\s*$")
_GEN = re.compile(r"\s*gen\s+([A-Za-z_][A-Za-z_0-9]*)\s+order\s+(-?\d+)\s*$")
_FACTOR = re.compile(r"\s*(?:([A-Za-z_][A-Za-z_0-9]*)(?:\s*\^\s*(-?\d+))?|(-?1)\b)\s*")
_INDEXED = re.compile(r"([vqe])(\d)(\d)?$")


def parse_expr(text: str, spec: GroupSpec, line: int = 1, col: int = 1) -> FieldUnit:
    """Signed product of ``name^k`` factors, ``1`` and ``-1``."""
    pos = 0
    value = spec.identity()
    neg = False
    m = re.match(r"\s*-\s*(?=[A-Za-z_])", text)
    if m:
        neg = True
        pos = m.end()
    used_sign = False
    while True:
        m = _FACTOR.match(text, pos)
        if not m or m.end() == pos:
            raise ParseError(line, col + pos, f"expected a factor in {text!r}")
        name, exp, lit = m.groups()
        if lit is not None:
            if lit == "-1":
                used_sign = True
                value = -value
        else:
            if not spec.has(name):
                raise ParseError(line, col + m.start(1), f"undeclared generator {name!r}")
            value = value * spec.gen(name) ** int(exp or 1)
        pos = m.end()
        if pos == len(text):
            break
        if text[pos] != "*":
            raise ParseError(line, col + pos, f"unexpected {text[pos]!r}")
        pos += 1
    if neg:
        used_sign = True
        value = -value
    if used_sign and spec.p == 2:
        warnings.warn("-1 equals 1 in characteristic 2", SignCollapseWarning, stacklevel=2)
    return value


def parse_input(text: str) -> InputDoc:
    """Parse an input document; raises :class:`ParseError` with a position."""
    p = None
    gens: list[tuple[str, int]] = []
    rank = None
    limits: dict[str, int] = {}
    entries: dict[tuple[str, int, int], tuple[str, int, int]] = {}
    spec = None

    def need_spec(ln):
        nonlocal spec
        if spec is None:
            if p is None:
                raise ParseError(ln, 1, "'p = ...' must come before labels")
            try:
                spec = GroupSpec.create(p, gens)
            except GroupSpecError as exc:
                raise ParseError(ln, 1, str(exc)) from None
        return spec

    for ln, raw in enumerate(text.splitlines(), 1):
        body = raw.split("#", 1)[0]
        if not body.strip():
            continue
        m = _GEN.match(body)
        if m:
            if spec is not None:
                raise ParseError(ln, 1, "generators must be declared before labels")
            try:
                GroupSpec.create(p or 0, gens + [(m.group(1), int(m.group(2)))])
            except GroupSpecError as exc:
                raise ParseError(ln, body.index(m.group(2)) + 1, str(exc)) from None
            gens.append((m.group(1), int(m.group(2))))
            continue
        m = _STMT.match(body)
        if not m:
            raise ParseError(ln, len(body) - len(body.lstrip()) + 1, "expected 'name = value'")
        key, val = m.group(1), m.group(2)
        vcol = m.start(2) + 1
        if key in ("p", "rank", "max_points", "max_roots"):
            if not re.fullmatch(r"\d+", val):
                raise ParseError(ln, vcol, f"{key} needs a nonnegative integer")
            if key == "p":
                if p is not None:
                    raise ParseError(ln, 1, "duplicate assignment to p")
                if gens:
                    raise ParseError(ln, 1, "'p = ...' must come before generators")
                p = int(val)
                try:
                    GroupSpec.create(p)
                except GroupSpecError as exc:
                    raise ParseError(ln, vcol, str(exc)) from None
            elif key == "rank":
                if rank is not None:
                    raise ParseError(ln, 1, "duplicate assignment to rank")
                rank = int(val)
                if not 1 <= rank <= MAX_RANK:
                    raise ParseError(ln, vcol, f"rank must be between 1 and {MAX_RANK}")
            else:
                limits[key] = int(val)
            continue
        im = _INDEXED.match(key)
        if not im:
            raise ParseError(ln, 1, f"unknown statement {key!r}")
        kind, i, j = im.group(1), int(im.group(2)), im.group(3)
        if kind == "v":
            if j is not None:
                raise ParseError(ln, 1, f"bad vertex name {key!r}")
            slot = ("v", i, i)
        else:
            if j is None:
                raise ParseError(ln, 1, f"{key!r} needs two indices")
            j = int(j)
            if kind == "e" and not i < j:
                raise ParseError(ln, 1, f"edge {key!r} needs i < j")
            slot = (kind, i, j)
        if slot in entries:
            raise ParseError(ln, 1, f"duplicate assignment to {key}")
        entries[slot] = (val, ln, vcol)

    if p is None:
        raise ParseError(1, 1, "missing 'p = ...'")
    if rank is None:
        raise ParseError(1, 1, "missing 'rank = ...'")
    spec = need_spec(1)
    kinds = {k for k, _, _ in entries}
    if "q" in kinds and kinds & {"v", "e"}:
        raise ParseError(1, 1, "mix of matrix entries (q) and diagram labels (v/e)")
    for k, i, j in entries:
        if not (1 <= i <= rank and 1 <= j <= rank):
            _, ln, _ = entries[(k, i, j)]
            raise ParseError(ln, 1, f"index out of range for rank {rank}")

    def ev(slot):
        val, ln, vcol = entries[slot]
        return parse_expr(val, spec, ln, vcol)

    if "q" in kinds:
        rows = []
        for i in range(1, rank + 1):
            row = []
            for j in range(1, rank + 1):
                if ("q", i, j) not in entries:
                    raise ParseError(1, 1, f"missing entry q{i}{j}")
                row.append(ev(("q", i, j)))
            rows.append(tuple(row))
        value = BraidingMatrix(spec, tuple(rows))
    else:
        vertex = []
        for i in range(1, rank + 1):
            if ("v", i, i) not in entries:
                raise ParseError(1, 1, f"missing vertex label v{i}")
            vertex.append(ev(("v", i, i)))
        edges = {(i - 1, j - 1): ev(("e", i, j)) for k, i, j in entries if k == "e"}
        value = DynkinDiagram.build(vertex, edges)
    return InputDoc(spec, rank, value, limits)


def unit_expr(u: FieldUnit) -> str:
    """Text that :func:`parse_expr` reads back as ``u``."""
    return format_unit(u)


def print_input(doc: InputDoc) -> str:
    spec = doc.spec
    lines = [f"p = {spec.p}"]
    lines += [f"gen {n} order {d}" for n, d in spec.generators]
    lines.append(f"rank = {doc.rank}")
    for k in sorted(doc.limits):
        lines.append(f"{k} = {doc.limits[k]}")
    v = doc.value
    if isinstance(v, BraidingMatrix):
        for i in range(v.theta):
            for j in range(v.theta):
                lines.append(f"q{i + 1}{j + 1} = {unit_expr(v.q[i][j])}")
    else:
        for i, lab in enumerate(v.vertex):
            lines.append(f"v{i + 1} = {unit_expr(lab)}")
        for (i, j), lab in v.edges:
            lines.append(f"e{i + 1}{j + 1} = {unit_expr(lab)}")
    return "\n".join(lines) + "\n"


# --- exporters -------------------------------------------------------------

def compact_diagram(d: DynkinDiagram) -> str:
    return str(d)


def export_dot(xg: ExchangeGraph, diagrams) -> str:
    """Undirected DOT text; ``diagrams[x]`` labels node ``x``."""
    lines = ["graph exchange {", "  node [shape=box, fontsize=10];"]
    for x in xg.vertices:
        label = f"{x}: {compact_diagram(diagrams[x])}".replace('"', '\\"')
        lines.append(f'  p{x} [label="{label}"];')
    for x, y, labels in xg.edges:
        lab = ",".join(str(i + 1) for i in labels)
        lines.append(f'  p{x} -- p{y} [label="{lab}"];')
    lines.append("}")
    return "\n".join(lines) + "\n"


def unit_json(u: FieldUnit) -> dict:
    return {"text": format_unit(u), "free": list(u.free), "torsion": u.torsion}


def spec_json(spec: GroupSpec) -> dict:
    return {
        "p": spec.p,
        "generators": [{"name": n, "order": d} for n, d in spec.generators],
        "torsion_order": spec.torsion_order,
    }


def diagram_json(d: DynkinDiagram) -> dict:
    return {
        "vertices": [unit_json(v) for v in d.vertex],
        "edges": [{"i": i + 1, "j": j + 1, "label": unit_json(lab)} for (i, j), lab in d.edges],
    }


def graph_json(g: CartanGraph) -> dict:
    xg = exchange_graph(g)
    return {
        "groupspec": spec_json(g.spec),
        "rank": g.theta,
        "origin": g.origin,
        "points": [
            {
                "id": pt.id,
                "diagram": diagram_json(pt.diagram),
                "gcm": [list(r) for r in pt.gcm],
                "neighbors": [y for y in pt.neighbor],
            }
            for pt in g.points
        ],
        "exchange_edges": [
            {"x": x, "y": y, "labels": [i + 1 for i in ls]} for x, y, ls in xg.edges
        ],
    }


def verdict_json(verdict) -> dict:
    from .rootsystem import ExceededLimits, Finite, MixedSignRoot
    if isinstance(verdict, Finite):
        data = verdict.data
        return {
            "verdict": "finite",
            "points": [
                {
                    "id": x,
                    "positive_root_count": len(roots),
                    "positive_roots": [list(b) for b in roots],
                }
                for x, roots in enumerate(data.positive)
            ],
        }
    if isinstance(verdict, ExceededLimits):
        return {"verdict": "exceeded_limits", "stage": verdict.stage, "point": verdict.point,
                "limit": verdict.limit}
    if isinstance(verdict, MixedSignRoot):
        return {"verdict": "mixed_sign_root", "point": verdict.point, "root": list(verdict.root)}
    raise TypeError(type(verdict))


def not_i_finite_json(exc) -> dict:
    at = {"i": exc.i + 1, "j": exc.j + 1}
    if exc.point is not None:
        at["point"] = exc.point
    return {"verdict": "not_i_finite", "at": at}


def match_json(m) -> dict:
    row = int(m.row) if m.row.isdigit() else m.row
    return {
        "row": row,
        "assignment": {name: unit_json(u) for name, u in m.assignment},
        "diagram": m.diagram,
        "permutation": [k + 1 for k in m.perm],
    }


def report_json(rep) -> dict:
    row = int(rep.row) if rep.row.isdigit() else rep.row
    return {
        "row": row,
        "p": rep.p,
        "assignment": {k: unit_json(u) for k, u in rep.assignment.items()},
        "points": rep.points,
        "ok": rep.ok,
        "checks": [{"name": c.name, "ok": c.ok, "detail": c.detail} for c in rep.checks],
        "errata": [
            {"printed": e.printed, "corrected": e.corrected, "reason": e.reason}
            for e in rep.errata
        ],
    }


def export_json(obj) -> str:
    """Stable JSON text (sorted keys) for graphs, verdicts, matches and reports."""
    from .braiding import NotIFinite
    from .classification import MatchResult, Report
    from .rootsystem import ExceededLimits, Finite, MixedSignRoot

    def conv(o):
        if isinstance(o, dict):
            return {k: conv(v) for k, v in o.items()}
        if isinstance(o, (list, tuple)):
            return [conv(v) for v in o]
        if isinstance(o, CartanGraph):
            return graph_json(o)
        if isinstance(o, (Finite, ExceededLimits, MixedSignRoot)):
            return verdict_json(o)
        if isinstance(o, NotIFinite):
            return not_i_finite_json(o)
        if isinstance(o, MatchResult):
            return match_json(o)
        if isinstance(o, Report):
            return report_json(o)
        if isinstance(o, FieldUnit):
            return unit_json(o)
        if isinstance(o, GroupSpec):
            return spec_json(o)
        if isinstance(o, DynkinDiagram):
            return diagram_json(o)
        return o

    return json.dumps(conv(obj), sort_keys=True, indent=2) + "\n"


def render_exchange_graph(g: CartanGraph, path: str, title: Optional[str] = None) -> None:
    """Draw the exchange graph to an image file (format from the suffix)."""
    import matplotlib
    matplotlib.use("Agg")
    import matplotlib.pyplot as plt
    import networkx as nx

    xg = exchange_graph(g)
    G = nx.Graph()
    G.add_nodes_from(xg.vertices)
    for x, y, ls in xg.edges:
        G.add_edge(x, y, label=",".join(str(i + 1) for i in ls))
    pos = nx.spring_layout(G, seed=1) if len(G) > 1 else {0: (0.0, 0.0)}
    size = max(4.0, min(12.0, 1.2 * len(G) ** 0.5 + 3))
    fig, ax = plt.subplots(figsize=(size, size * 0.75))
    nx.draw_networkx_nodes(G, pos, ax=ax, node_color="#dde6f0", edgecolors="#34495e", node_size=520)
    nx.draw_networkx_labels(G, pos, ax=ax, font_size=9)
    nx.draw_networkx_edges(G, pos, ax=ax, edge_color="#7f8c8d")
    nx.draw_networkx_edge_labels(G, pos, edge_labels=nx.get_edge_attributes(G, "label"),
                                 ax=ax, font_size=8)
    ax.set_title(title or f"exchange graph, {len(G)} points")
    ax.axis("off")
    fig.tight_layout()
    fig.savefig(path, dpi=120)
    plt.close(fig)
