"""Semi-Cartan graph attached to a braiding matrix, and good-neighborhood detection."""
from __future__ import annotations

import logging
import warnings
from collections import deque
from dataclasses import dataclass, field
from itertools import permutations
from typing import Optional

from .braiding import (
    GCM, A4, B4, NAMED_GCMS, BraidingMatrix, DynkinDiagram, NotIFinite,
    cartan_matrix, dynkin_of, is_indecomposable, permute_gcm, reflect,
)

log = logging.getLogger(__name__)

DEFAULT_MAX_POINTS = 4096


class PointLimitExceeded(Exception):
    def __init__(self, limit: int):
        self.limit = limit
        super().__init__(f"more than {limit} points")


class DecomposableWarning(UserWarning):
    pass


@dataclass(frozen=True)
class Point:
    id: int
    diagram: DynkinDiagram
    gcm: GCM
    neighbor: tuple[int, ...]
    matrix: BraidingMatrix = field(repr=False, compare=False)


@dataclass(frozen=True)
class CartanGraph:
    theta: int
    points: tuple[Point, ...]
    origin: int = 0
    max_points: int = DEFAULT_MAX_POINTS

    @property
    def spec(self):
        return self.points[0].diagram.spec

    def __len__(self) -> int:
        return len(self.points)

    def r(self, i: int, x: int) -> int:
        return self.points[x].neighbor[i]

    def gcm(self, x: int) -> GCM:
        return self.points[x].gcm

    def find(self, diagram: DynkinDiagram) -> Optional[int]:
        for pt in self.points:
            if pt.diagram == diagram:
                return pt.id
        return None


@dataclass(frozen=True)
class ExchangeGraph:
    vertices: tuple[int, ...]
    # (x, y, labels) with x < y, labels sorted 0-based reflection indices
    edges: tuple[tuple[int, int, tuple[int, ...]], ...]


def build_graph(m: BraidingMatrix | DynkinDiagram, max_points: int = DEFAULT_MAX_POINTS) -> CartanGraph:
    """Breadth-first construction over diagrams, reflecting at ``i = 1..theta`` in order.

    Raises :class:`NotIFinite` (with ``point`` set) or :class:`PointLimitExceeded`.
    """
    if isinstance(m, DynkinDiagram):
        m = m.to_matrix()
    if not is_indecomposable(m):
        warnings.warn("braiding matrix is decomposable", DecomposableWarning, stacklevel=2)
    theta = m.theta
    start = dynkin_of(m)
    ids = {start: 0}
    mats = [m]
    diags = [start]
    gcms: list[GCM] = []
    nbrs: list[list[int]] = []
    queue = deque([0])
    while queue:
        x = queue.popleft()
        try:
            a = cartan_matrix(diags[x])
        except NotIFinite as exc:
            raise NotIFinite(exc.i, exc.j, point=x) from None
        gcms.append(a)
        row = []
        for i in range(theta):
            nm = reflect(mats[x], i)
            d = dynkin_of(nm)
            y = ids.get(d)
            if y is None:
                if len(diags) >= max_points:
                    raise PointLimitExceeded(max_points)
                y = len(diags)
                ids[d] = y
                mats.append(nm)
                diags.append(d)
                queue.append(y)
            row.append(y)
        nbrs.append(row)
    points = tuple(
        Point(k, diags[k], gcms[k], tuple(nbrs[k]), mats[k]) for k in range(len(diags))
    )
    log.debug("built Cartan graph with %d points", len(points))
    return CartanGraph(theta, points, 0, max_points)


def exchange_graph(g: CartanGraph) -> ExchangeGraph:
    labels: dict[tuple[int, int], set[int]] = {}
    for pt in g.points:
        for i, y in enumerate(pt.neighbor):
            if y != pt.id:
                labels.setdefault((min(pt.id, y), max(pt.id, y)), set()).add(i)
    edges = tuple((x, y, tuple(sorted(ls))) for (x, y), ls in sorted(labels.items()))
    return ExchangeGraph(tuple(range(len(g))), edges)


def is_standard(g: CartanGraph) -> bool:
    first = g.points[0].gcm
    return all(pt.gcm == first for pt in g.points)


def semi_cartan_violations(g: CartanGraph) -> list[str]:
    """Failures of ``r_i^2 = id`` and ``a^X_ij = a^{r_i X}_ij``."""
    out = []
    for pt in g.points:
        for i, y in enumerate(pt.neighbor):
            if g.r(i, y) != pt.id:
                out.append(f"r_{i + 1} not involutive at point {pt.id}")
            if g.gcm(y)[i] != pt.gcm[i]:
                out.append(f"row {i + 1} of GCM changes under r_{i + 1} at point {pt.id}")
    return out


def _a_template(a: int) -> GCM:
    return ((2, -1, 0, 0), (-1, 2, -1, 0), (0, -1, 2, -a), (0, 0, -1, 2))


_TRIANGLE: GCM = ((2, -1, 0, 0), (-1, 2, -1, -1), (0, -1, 2, -1), (0, -1, -1, 2))


def _b_template(b: int) -> GCM:
    return ((2, -1, 0, 0), (-1, 2, -1, 0), (0, -b, 2, -1), (0, 0, -1, 2))


@dataclass(frozen=True)
class A4Witness:
    perm: tuple[int, ...]
    case: int
    ab: tuple[int, int]


def good_A4_at(g: CartanGraph, x: int) -> Optional[A4Witness]:
    """First permutation (lexicographic) under which ``x`` has a good A4 neighborhood.

    ``perm[k]`` is the actual index playing the role of abstract index ``k``.
    """
    if g.theta != 4:
        return None
    for perm in permutations(range(4)):
        def A(y):
            return permute_gcm(g.gcm(y), perm)

        def r(k, y):
            return g.r(perm[k], y)

        if A(x) != A4 or A(r(0, x)) != A4 or A(r(2, x)) != _TRIANGLE:
            continue
        m2, m4 = A(r(1, x)), A(r(3, x))
        a, b = -m2[2][3], -m4[2][1]
        if a < 1 or b < 1 or m2 != _a_template(a) or m4 != _b_template(b):
            continue
        if (a, b) in ((2, 1), (2, 2)):
            return A4Witness(perm, 1, (a, b))
        if (a, b) == (1, 2) and A(r(0, r(2, x)))[1][3] == -1:
            return A4Witness(perm, 2, (a, b))
        if (a, b) == (1, 1):
            c = A(r(1, r(2, x)))
            if c[0][3] == c[3][0] and c[0][3] in (0, -1):
                return A4Witness(perm, 3, (a, b))
    return None


def good_B4_at(g: CartanGraph, x: int) -> Optional[tuple[int, ...]]:
    """First permutation under which ``x`` has a good B4 neighborhood."""
    if g.theta != 4:
        return None
    for perm in permutations(range(4)):
        def A(y):
            return permute_gcm(g.gcm(y), perm)

        if A(x) != B4 or any(A(g.r(perm[k], x)) != B4 for k in range(4)):
            continue
        y = g.r(perm[2], g.r(perm[3], x))
        if A(y)[1][3] == -1:
            return perm
    return None


def finite_type_name(a: GCM) -> Optional[str]:
    """Name of the rank-4 finite-type matrix equal to ``a`` up to relabeling."""
    if len(a) != 4:
        return None
    for perm in permutations(range(4)):
        b = permute_gcm(a, perm)
        for name, c in NAMED_GCMS.items():
            if b == c:
                return name
    return None


@dataclass(frozen=True)
class GoodNeighborhoodReport:
    kind: str  # "standard", "good_A4", "good_B4" or "violation"
    type_name: Optional[str] = None
    point: Optional[int] = None
    witness: object = None

    @property
    def ok(self) -> bool:
        return self.kind != "violation"


def check_goodnei_theorem(g: CartanGraph) -> GoodNeighborhoodReport:
    if is_standard(g):
        name = finite_type_name(g.points[0].gcm)
        if name is None:
            return GoodNeighborhoodReport("violation")
        return GoodNeighborhoodReport("standard", type_name=name)
    for pt in g.points:
        w = good_A4_at(g, pt.id)
        if w is not None:
            return GoodNeighborhoodReport("good_A4", point=pt.id, witness=w)
        w = good_B4_at(g, pt.id)
        if w is not None:
            return GoodNeighborhoodReport("good_B4", point=pt.id, witness=w)
    return GoodNeighborhoodReport("violation")
