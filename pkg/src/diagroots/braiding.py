"""Braiding matrices, generalized Dynkin diagrams, Cartan entries and reflections."""
from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations
from typing import Optional, Sequence

from .unitgroup import FieldUnit, GroupSpec, element_order, min_power_hitting

MAX_RANK = 8

GCM = tuple[tuple[int, ...], ...]

A4: GCM = ((2, -1, 0, 0), (-1, 2, -1, 0), (0, -1, 2, -1), (0, 0, -1, 2))
B4: GCM = ((2, -1, 0, 0), (-1, 2, -1, 0), (0, -1, 2, -1), (0, 0, -2, 2))
C4: GCM = ((2, -1, 0, 0), (-1, 2, -1, 0), (0, -1, 2, -2), (0, 0, -1, 2))
D4: GCM = ((2, -1, 0, 0), (-1, 2, -1, -1), (0, -1, 2, 0), (0, -1, 0, 2))
F4: GCM = ((2, -1, 0, 0), (-1, 2, -2, 0), (0, -1, 2, -1), (0, 0, -1, 2))

NAMED_GCMS: dict[str, GCM] = {"A4": A4, "B4": B4, "C4": C4, "D4": D4, "F4": F4}


class NotIFinite(Exception):
    """No finite Cartan entry exists at ``(i, j)`` (0-based indices)."""

    def __init__(self, i: int, j: int, point: Optional[int] = None):
        self.i, self.j, self.point = i, j, point
        where = "" if point is None else f" at point {point}"
        super().__init__(f"not {i + 1}-finite: no Cartan entry a[{i + 1},{j + 1}]{where}")


class InternalCaseGap(AssertionError):
    """No case of the diagram reflection table applied."""


@dataclass(frozen=True)
class BraidingMatrix:
    spec: GroupSpec
    q: tuple[tuple[FieldUnit, ...], ...]

    def __post_init__(self):
        n = len(self.q)
        if not 1 <= n <= MAX_RANK:
            raise ValueError(f"rank must be between 1 and {MAX_RANK}, got {n}")
        for row in self.q:
            if len(row) != n:
                raise ValueError("braiding matrix must be square")
            for x in row:
                if x.spec != self.spec:
                    raise ValueError("entry from a different group spec")

    @property
    def theta(self) -> int:
        return len(self.q)

    @classmethod
    def from_rows(cls, rows: Sequence[Sequence[FieldUnit]]) -> "BraidingMatrix":
        return cls(rows[0][0].spec, tuple(tuple(r) for r in rows))


@dataclass(frozen=True)
class DynkinDiagram:
    """Vertex labels plus labels of the non-trivial edges ``{i, j}``, ``i < j``.

    Equality is label-by-label on the fixed index set.
    """

    vertex: tuple[FieldUnit, ...]
    edges: tuple[tuple[tuple[int, int], FieldUnit], ...]

    @classmethod
    def build(cls, vertex: Sequence[FieldUnit], edges: dict) -> "DynkinDiagram":
        items = []
        for (i, j), lab in edges.items():
            if i == j:
                raise ValueError("loop edge")
            if not lab.is_one():
                items.append(((min(i, j), max(i, j)), lab))
        items.sort(key=lambda t: t[0])
        keys = [k for k, _ in items]
        if len(set(keys)) != len(keys):
            raise ValueError("duplicate edge")
        return cls(tuple(vertex), tuple(items))

    @property
    def theta(self) -> int:
        return len(self.vertex)

    @property
    def spec(self) -> GroupSpec:
        return self.vertex[0].spec

    def edge(self, i: int, j: int) -> FieldUnit:
        """Edge label ``q_ij q_ji``; the identity when no edge is drawn."""
        key = (min(i, j), max(i, j))
        for k, lab in self.edges:
            if k == key:
                return lab
        return self.spec.identity()

    def edge_map(self) -> dict[tuple[int, int], FieldUnit]:
        return dict(self.edges)

    def permuted(self, perm: Sequence[int]) -> "DynkinDiagram":
        """Move vertex ``a`` to position ``perm[a]`` (0-based)."""
        vertex = [None] * self.theta
        for a, lab in enumerate(self.vertex):
            vertex[perm[a]] = lab
        edges = {(perm[i], perm[j]): lab for (i, j), lab in self.edges}
        return DynkinDiagram.build(vertex, edges)

    def to_matrix(self) -> BraidingMatrix:
        """Upper-triangular representative: ``q_ij`` = edge label, ``q_ji`` = 1 for i < j."""
        one = self.spec.identity()
        n = self.theta
        rows = [[one] * n for _ in range(n)]
        for i in range(n):
            rows[i][i] = self.vertex[i]
        for (i, j), lab in self.edges:
            rows[i][j] = lab
        return BraidingMatrix(self.spec, tuple(tuple(r) for r in rows))

    def is_connected(self) -> bool:
        n = self.theta
        adj = {i: set() for i in range(n)}
        for (i, j), _ in self.edges:
            adj[i].add(j)
            adj[j].add(i)
        seen, stack = {0}, [0]
        while stack:
            for y in adj[stack.pop()]:
                if y not in seen:
                    seen.add(y)
                    stack.append(y)
        return len(seen) == n

    def __str__(self) -> str:
        vs = " ".join(f"v{i + 1}={v}" for i, v in enumerate(self.vertex))
        es = " ".join(f"e{i + 1}{j + 1}={lab}" for (i, j), lab in self.edges)
        return f"{vs} | {es}" if es else vs


def dynkin_of(m: BraidingMatrix) -> DynkinDiagram:
    n = m.theta
    edges = {(i, j): m.q[i][j] * m.q[j][i] for i, j in combinations(range(n), 2)}
    return DynkinDiagram.build([m.q[i][i] for i in range(n)], edges)


def cartan_entry(qii: FieldUnit, r: FieldUnit) -> Optional[int]:
    """``-m`` for the least ``m`` with ``(m+1)_qii (qii^m r - 1) = 0``, or None."""
    candidates = []
    m1 = min_power_hitting(qii, r.inverse())
    if m1 is not None:
        candidates.append(m1)
    if qii.is_one():
        if qii.spec.p > 0:
            candidates.append(qii.spec.p - 1)
    else:
        d = element_order(qii)
        if d is not None:
            candidates.append(d - 1)
    if not candidates:
        return None
    return -min(candidates)


def cartan_row(d: DynkinDiagram, i: int) -> tuple[int, ...]:
    row = []
    for j in range(d.theta):
        if j == i:
            row.append(2)
            continue
        a = cartan_entry(d.vertex[i], d.edge(i, j))
        if a is None:
            raise NotIFinite(i, j)
        row.append(a)
    return tuple(row)


def cartan_matrix(m: BraidingMatrix | DynkinDiagram) -> GCM:
    """Generalized Cartan matrix; raises :class:`NotIFinite` at the first failing pair."""
    d = m if isinstance(m, DynkinDiagram) else dynkin_of(m)
    return tuple(cartan_row(d, i) for i in range(d.theta))


def is_gcm(a: GCM) -> bool:
    n = len(a)
    for i in range(n):
        if a[i][i] != 2:
            return False
        for j in range(n):
            if i != j and (a[i][j] > 0 or (a[i][j] == 0) != (a[j][i] == 0)):
                return False
    return True


def reflect(m: BraidingMatrix, i: int) -> BraidingMatrix:
    """Braiding matrix of the reflection at ``i`` via the bicharacter transform.

    ``q'_jk = q_jk q_ik^(-a_ij) q_ji^(-a_ik) q_ii^(a_ij a_ik)``.
    """
    a = cartan_row(dynkin_of(m), i)
    q = m.q
    n = m.theta
    rows = []
    for j in range(n):
        row = []
        for k in range(n):
            row.append(q[j][k] * q[i][k] ** -a[j] * q[j][i] ** -a[k] * q[i][i] ** (a[j] * a[k]))
        rows.append(tuple(row))
    return BraidingMatrix(m.spec, tuple(rows))


def reflect_diagram(d: DynkinDiagram, i: int) -> DynkinDiagram:
    return dynkin_of(reflect(d.to_matrix(), i))


def _is_primitive(q: FieldUnit, n: int) -> bool:
    return element_order(q) == n


def reflect_diagram_cases(d: DynkinDiagram, i: int) -> DynkinDiagram:
    """Reflected diagram from the case-by-case label rules (independent of :func:`reflect`)."""
    a = cartan_row(d, i)
    qii = d.vertex[i]
    n = d.theta

    def kind(j: int) -> str:
        e = d.edge(i, j)
        if e == qii ** a[j]:
            return "fixed"
        if _is_primitive(qii, 1 - a[j]):
            return "root"
        if qii.is_one():
            return "one"
        raise InternalCaseGap(f"no case for vertex {j + 1} reflected at {i + 1}")

    kinds = [None if j == i else kind(j) for j in range(n)]
    vertex = []
    for j in range(n):
        e = d.edge(i, j)
        if j == i:
            vertex.append(qii)
        elif kinds[j] == "fixed":
            vertex.append(d.vertex[j])
        elif kinds[j] == "root":
            vertex.append(qii * d.vertex[j] * e ** -a[j])
        else:
            vertex.append(d.vertex[j] * e ** -a[j])

    edges = {}
    for j in range(n):
        if j == i:
            continue
        e = d.edge(i, j)
        if kinds[j] == "fixed":
            edges[(i, j)] = e
        elif kinds[j] == "root":
            edges[(i, j)] = qii ** 2 * e.inverse()
        else:
            edges[(i, j)] = e.inverse()

    for j, k in combinations(range(n), 2):
        if i in (j, k):
            continue
        edges[(j, k)] = _edge_case(d, i, j, k, a, kinds)
    return DynkinDiagram.build(vertex, edges)


def _edge_case(d, i, j, k, a, kinds) -> FieldUnit:
    qii = d.vertex[i]
    ejk, eij, eik = d.edge(j, k), d.edge(i, j), d.edge(i, k)
    if kinds[j] == "fixed" and kinds[k] == "fixed":
        return ejk
    for x, y, exy, eix, eiy in ((j, k, ejk, eij, eik), (k, j, ejk, eik, eij)):
        if kinds[x] == "fixed" and _is_primitive(qii, 1 - a[y]):
            return exy * (eiy * qii.inverse()) ** -a[x]
    if qii.is_one():
        return ejk * eij ** -a[k] * eik ** -a[j]
    if _is_primitive(qii, 1 - a[k]) and _is_primitive(qii, 1 - a[j]):
        return ejk * qii ** 2 * (eij * eik) ** -a[j]
    raise InternalCaseGap(f"no case for edge {{{j + 1},{k + 1}}} reflected at {i + 1}")


def is_indecomposable(m: BraidingMatrix | DynkinDiagram) -> bool:
    d = m if isinstance(m, DynkinDiagram) else dynkin_of(m)
    return d.is_connected()


def permute_gcm(a: GCM, perm: Sequence[int]) -> GCM:
    """``b[k][l] = a[perm[k]][perm[l]]``."""
    n = len(a)
    return tuple(tuple(a[perm[k]][perm[l]] for l in range(n)) for k in range(n))
