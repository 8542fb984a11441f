"""Command-line entry point: ``diagroots <command> [input] [options]``.

Exit codes: 0 success, 1 negative verdict, 2 usage or parse error,
3 internal invariant violation.
"""
from __future__ import annotations

import argparse
import logging
import sys
import warnings
from typing import Optional, Sequence

from .braiding import NotIFinite, cartan_row
from .cartangraph import (
    DEFAULT_MAX_POINTS, PointLimitExceeded, build_graph, check_goodnei_theorem, exchange_graph,
    good_A4_at, good_B4_at, semi_cartan_violations,
)
from .classification import (
    ERRATA, UnsupportedCharacteristic, builtin_rows, canonical_assignments, dump_templates,
    match_diagram, verify_row,
)
from .rootsystem import DEFAULT_MAX_POS_ROOTS, ExceededLimits, Finite, MixedSignRoot, enumerate_roots
from .unitgroup import element_order
from .textio import ParseError, export_dot, export_json, parse_input, render_exchange_graph

log = logging.getLogger("diagroots")

OK, NEGATIVE, USAGE, INVARIANT = 0, 1, 2, 3


class _Out:
    def __init__(self, quiet: bool):
        self.quiet = quiet

    def info(self, msg: str = "") -> None:
        if not self.quiet:
            print(msg)

    def verdict(self, msg: str) -> None:
        print(msg)


def _write(path: Optional[str], text: str) -> None:
    if path:
        with open(path, "w", encoding="utf-8") as fh:
            fh.write(text)


def _load(args):
    with open(args.input, encoding="utf-8") as fh:
        doc = parse_input(fh.read())
    if args.max_points is None:
        args.max_points = doc.limits.get("max_points", DEFAULT_MAX_POINTS)
    if args.max_roots is None:
        args.max_roots = doc.limits.get("max_roots", DEFAULT_MAX_POS_ROOTS)
    return doc


def _build(doc, args, out):
    try:
        with warnings.catch_warnings(record=True) as caught:
            warnings.simplefilter("always")
            g = build_graph(doc.value, max_points=args.max_points)
        for w in caught:
            print(f"warning: {w.message}", file=sys.stderr)
        return g, None
    except NotIFinite as exc:
        out.verdict(f"NotIFinite: {exc}")
        _write(args.json, export_json(exc))
        return None, NEGATIVE
    except PointLimitExceeded as exc:
        out.verdict(f"ExceededLimits: {exc}")
        _write(args.json, export_json({"verdict": "exceeded_limits", "stage": "points",
                                       "limit": exc.limit}))
        return None, NEGATIVE


def cmd_analyze(args, out) -> int:
    doc = _load(args)
    d = doc.diagram
    out.info(f"diagram: {d}")
    failed = False
    rows = []
    for i in range(d.theta):
        try:
            row = cartan_row(d, i)
            rows.append(list(row))
            out.info(f"  {i + 1}-finite: row {' '.join(f'{a:2d}' for a in row)}")
        except NotIFinite as exc:
            failed = True
            rows.append(None)
            out.info(f"  not {i + 1}-finite (no entry a[{i + 1},{exc.j + 1}])")
    out.verdict("i-finite at every index" if not failed else "NotIFinite")
    _write(args.json, export_json({"diagram": d, "cartan_rows": rows,
                                   "verdict": "not_i_finite" if failed else "i_finite"}))
    return NEGATIVE if failed else OK


def cmd_graph(args, out) -> int:
    doc = _load(args)
    g, code = _build(doc, args, out)
    if g is None:
        return code
    bad = semi_cartan_violations(g)
    xg = exchange_graph(g)
    for pt in g.points:
        nb = " ".join(str(y) for y in pt.neighbor)
        out.info(f"  point {pt.id}: {pt.diagram}  r: {nb}")
    for x, y, ls in xg.edges:
        out.info(f"  {x} -{','.join(str(i + 1) for i in ls)}- {y}")
    out.verdict(f"{len(g)} points, {len(xg.edges)} exchange edges")
    _write(args.dot, export_dot(xg, [pt.diagram for pt in g.points]))
    _write(args.json, export_json(g))
    if args.figure:
        render_exchange_graph(g, args.figure)
    if bad:
        print("invariant violation: " + "; ".join(bad), file=sys.stderr)
        return INVARIANT
    return OK


def cmd_roots(args, out) -> int:
    doc = _load(args)
    g, code = _build(doc, args, out)
    if g is None:
        return code
    verdict = enumerate_roots(g, max_pos_roots=args.max_roots)
    _write(args.json, export_json(verdict))
    if isinstance(verdict, Finite):
        counts = sorted({len(p) for p in verdict.data.positive})
        for x, roots in enumerate(verdict.data.positive):
            out.info(f"  point {x}: {len(roots)} positive roots")
        out.verdict(f"Finite: {len(g)} points, positive roots per point {counts}")
        return OK if len(counts) == 1 else INVARIANT
    if isinstance(verdict, ExceededLimits):
        out.verdict(f"ExceededLimits: more than {verdict.limit} positive roots at point {verdict.point}")
        return NEGATIVE
    assert isinstance(verdict, MixedSignRoot)
    out.verdict(f"MixedSignRoot: {verdict.root} at point {verdict.point}")
    return NEGATIVE


def cmd_classify(args, out) -> int:
    doc = _load(args)
    d = doc.diagram
    try:
        matches = match_diagram(d)
    except UnsupportedCharacteristic as exc:
        print(f"error: {exc}", file=sys.stderr)
        return USAGE
    _write(args.json, export_json({"matches": matches}))
    if not matches:
        out.verdict("no match")
        return NEGATIVE
    for m in matches:
        perm = "".join(str(k + 1) for k in m.perm)
        out.verdict(f"{m.describe()}  (diagram {m.diagram}, vertices {perm})")
    return OK


def cmd_neighborhoods(args, out) -> int:
    doc = _load(args)
    g, code = _build(doc, args, out)
    if g is None:
        return code
    found = []
    for pt in g.points:
        a4 = good_A4_at(g, pt.id)
        b4 = good_B4_at(g, pt.id)
        if a4:
            perm = "".join(str(k + 1) for k in a4.perm)
            out.info(f"  point {pt.id}: good A4, case {a4.case}, (a,b)={a4.ab}, order {perm}")
            found.append({"point": pt.id, "kind": "A4", "case": a4.case, "ab": list(a4.ab),
                          "order": [k + 1 for k in a4.perm]})
        if b4:
            perm = "".join(str(k + 1) for k in b4)
            out.info(f"  point {pt.id}: good B4, order {perm}")
            found.append({"point": pt.id, "kind": "B4", "order": [k + 1 for k in b4]})
    rep = check_goodnei_theorem(g) if g.theta == 4 else None
    if rep is None:
        out.verdict(f"{len(found)} good neighborhoods (rank {g.theta})")
    else:
        extra = f" {rep.type_name}" if rep.type_name else ""
        out.verdict(f"{len(found)} good neighborhoods; coverage: {rep.kind}{extra}")
    _write(args.json, export_json({"neighborhoods": found,
                                   "coverage": None if rep is None else rep.kind}))
    if rep is not None and not rep.ok:
        # only meaningful for finite graphs
        if isinstance(enumerate_roots(g, max_pos_roots=args.max_roots), Finite):
            return INVARIANT
    return OK


def _param_text(name, u) -> str:
    d = element_order(u)
    return f"{name} free" if d is None else f"{name} in G'_{d}"


def cmd_verify_tables(args, out) -> int:
    rows = builtin_rows()
    if args.dump:
        sys.stdout.write(dump_templates(rows))
        return OK
    reports = []
    total = 0
    for row in rows:
        for spec, asg in canonical_assignments(row):
            rep = verify_row(row, spec, asg, max_points=args.max_points or DEFAULT_MAX_POINTS,
                             max_roots=args.max_roots or DEFAULT_MAX_POS_ROOTS)
            reports.append(rep)
            total += 1
            param = ", ".join(_param_text(k, v) for k, v in asg.items()) or "-"
            status = "PASS" if rep.ok else "FAIL"
            fixes = f"  ({len(rep.errata)} errata)" if rep.errata else ""
            out.info(f"row {row.id:>3}  p={spec.p}  {param:<10} {rep.points:3d} points  {status}{fixes}")
            for c in rep.failures():
                out.info(f"      {c.name}: {c.detail}")
    passed_rows = {r.row for r in reports} - {r.row for r in reports if not r.ok}
    out.verdict(f"{len(passed_rows)}/{len(rows)} rows PASS ({total} instantiations)")
    _write(args.json, export_json({"reports": reports}))
    if args.errata:
        for e in ERRATA:
            out.info(f"row {e.row}: {e.printed} -> {e.corrected}  {e.reason}")
    return OK if len(passed_rows) == len(rows) else NEGATIVE


COMMANDS = {
    "analyze": cmd_analyze,
    "graph": cmd_graph,
    "roots": cmd_roots,
    "classify": cmd_classify,
    "neighborhoods": cmd_neighborhoods,
    "verify-tables": cmd_verify_tables,
}


def make_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(prog="diagroots", description=__doc__.splitlines()[0])
    ap.add_argument("-v", "--verbose", action="store_true")
    sub = ap.add_subparsers(dest="command", required=True)

    def common(p):
        p.add_argument("--max-points", type=int, default=None)
        p.add_argument("--max-roots", type=int, default=None)
        p.add_argument("--json", metavar="PATH")
        p.add_argument("--quiet", action="store_true")

    for name in ("analyze", "graph", "roots", "classify", "neighborhoods"):
        p = sub.add_parser(name)
        p.add_argument("input")
        common(p)
        if name == "graph":
            p.add_argument("--dot", metavar="PATH")
            p.add_argument("--figure", metavar="PATH", help="render the exchange graph (PNG, SVG, ...)")
    p = sub.add_parser("verify-tables")
    common(p)
    p.add_argument("--dump", action="store_true", help="print the encoded tables and exit")
    p.add_argument("--errata", action="store_true", help="list corrections to the printed graphs")
    return ap


def main(argv: Optional[Sequence[str]] = None) -> int:
    ap = make_parser()
    try:
        args = ap.parse_args(argv)
    except SystemExit as exc:
        return USAGE if exc.code else OK
    logging.basicConfig(level=logging.DEBUG if args.verbose else logging.WARNING,
                        format="%(levelname)s %(name)s: %(message)s")
    out = _Out(args.quiet)
    try:
        return COMMANDS[args.command](args, out)
    except ParseError as exc:
        print(f"parse error: {exc}", file=sys.stderr)
        return USAGE
    except OSError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return USAGE
    except AssertionError as exc:
        print(f"internal invariant violation: {exc}", file=sys.stderr)
        return INVARIANT


if __name__ == "__main__":
    sys.exit(main())
