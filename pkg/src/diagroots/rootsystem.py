"""Real roots of a Cartan graph: saturation, reduced words and axiom checks."""
from __future__ import annotations

from collections import deque
from dataclasses import dataclass, field
from typing import Union

from .cartangraph import CartanGraph, semi_cartan_violations

Root = tuple[int, ...]

DEFAULT_MAX_POS_ROOTS = 512


def simple_root(theta: int, i: int) -> Root:
    return tuple(int(k == i) for k in range(theta))


def reflect_root(a, i: int, beta: Root) -> Root:
    """``s_i(beta)`` with ``s_i(alpha_j) = alpha_j - a_ij alpha_i``."""
    c = sum(a[i][j] * b for j, b in enumerate(beta))
    return tuple(b - c if k == i else b for k, b in enumerate(beta))


def sign_of(beta: Root) -> int:
    """1 if nonzero and nonnegative, -1 if nonzero and nonpositive, 0 otherwise."""
    if all(b >= 0 for b in beta) and any(beta):
        return 1
    if all(b <= 0 for b in beta) and any(beta):
        return -1
    return 0


@dataclass(frozen=True)
class RootSystemData:
    positive: tuple[tuple[Root, ...], ...]   # per point id, sorted
    iterations: int = 0

    def count(self, x: int) -> int:
        return len(self.positive[x])

    def contains(self, x: int, beta: Root) -> bool:
        s = sign_of(beta)
        if s == 0:
            return False
        b = beta if s > 0 else tuple(-v for v in beta)
        return b in self._sets[x]

    @property
    def _sets(self):
        cache = self.__dict__.get("_cache")
        if cache is None:
            cache = [frozenset(p) for p in self.positive]
            object.__setattr__(self, "_cache", cache)
        return cache


@dataclass(frozen=True)
class Finite:
    data: RootSystemData


@dataclass(frozen=True)
class ExceededLimits:
    stage: str
    point: int
    limit: int


@dataclass(frozen=True)
class MixedSignRoot:
    point: int
    root: Root


Verdict = Union[Finite, ExceededLimits, MixedSignRoot]


def enumerate_roots(g: CartanGraph, max_pos_roots: int = DEFAULT_MAX_POS_ROOTS) -> Verdict:
    """Smallest family of root sets containing all ``±alpha_i`` and closed under every ``s_i^X``."""
    theta = g.theta
    pos: list[set[Root]] = [set() for _ in g.points]
    queue = deque()
    for x in range(len(g)):
        for i in range(theta):
            a = simple_root(theta, i)
            pos[x].add(a)
            queue.append((x, a))
    steps = 0
    while queue:
        x, beta = queue.popleft()
        a = g.gcm(x)
        for i in range(theta):
            steps += 1
            y = g.r(i, x)
            img = reflect_root(a, i, beta)
            s = sign_of(img)
            if s == 0:
                return MixedSignRoot(y, img)
            # track positive representatives; -beta maps to -img
            rep = img if s > 0 else tuple(-v for v in img)
            if rep not in pos[y]:
                pos[y].add(rep)
                if len(pos[y]) > max_pos_roots:
                    return ExceededLimits("saturation", y, max_pos_roots)
                queue.append((y, rep))
    data = RootSystemData(tuple(tuple(sorted(p)) for p in pos), steps)
    return Finite(data)


@dataclass
class WordRoots:
    roots: set[Root]
    longest: int
    states: int
    problems: list[str] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return not self.problems


class RootLimitExceeded(Exception):
    pass


def _times_s(cols, a, i):
    """Columns of ``w s_i`` from the columns of ``w``: ``c_j - a_ij c_i``."""
    ci = cols[i]
    out = []
    for j, cj in enumerate(cols):
        f = a[i][j]
        out.append(cj if f == 0 else tuple(u - f * v for u, v in zip(cj, ci)))
    return tuple(out)


def roots_by_reduced_words(g: CartanGraph, x: int, max_roots: int = DEFAULT_MAX_POS_ROOTS) -> WordRoots:
    """Positive roots at ``x`` read off as ``w(alpha_i)`` along reduced words ``w``.

    A word ``w`` is extended by ``i`` only when ``w(alpha_i)`` is positive,
    which keeps every explored word reduced.  Along each word the roots met
    must be pairwise different, and the longest word has one letter per
    positive root.
    """
    theta = g.theta
    start = (x, tuple(simple_root(theta, i) for i in range(theta)))
    seen = {start: 0}
    path_roots = {start: frozenset()}
    queue = deque([start])
    roots: set[Root] = set()
    problems: list[str] = []
    longest = 0
    while queue:
        state = queue.popleft()
        y, w = state
        depth = seen[state]
        longest = max(longest, depth)
        for i in range(theta):
            beta = w[i]
            if sign_of(beta) <= 0:
                continue
            if beta in path_roots[state]:
                problems.append(f"root {beta} repeats along a reduced word of length {depth + 1}")
            roots.add(beta)
            if len(roots) > max_roots:
                raise RootLimitExceeded(f"more than {max_roots} roots at point {x}")
            nxt = (g.r(i, y), _times_s(w, g.gcm(y), i))
            if nxt not in seen:
                seen[nxt] = depth + 1
                path_roots[nxt] = path_roots[state] | {beta}
                queue.append(nxt)
    if longest != len(roots):
        problems.append(f"longest word has length {longest}, expected {len(roots)}")
    return WordRoots(roots, longest, len(seen), problems)


@dataclass
class AxiomReport:
    failures: list[tuple[str, str]] = field(default_factory=list)
    checked: int = 0

    @property
    def ok(self) -> bool:
        return not self.failures

    def fail(self, axiom: str, witness: str) -> None:
        self.failures.append((axiom, witness))

    def summary(self) -> str:
        if self.ok:
            return f"{self.checked} conditions"
        return "; ".join(f"{a}: {w}" for a, w in self.failures[:3])


def _all_roots(data: RootSystemData, x: int) -> set[Root]:
    pos = data.positive[x]
    return set(pos) | {tuple(-v for v in b) for b in pos}


def m_ij(data: RootSystemData, x: int, i: int, j: int) -> int:
    """Number of positive roots at ``x`` supported on ``{i, j}``."""
    return sum(
        1 for b in data.positive[x] if all(v == 0 for k, v in enumerate(b) if k not in (i, j))
    )


def _rr_power_fixes(g: CartanGraph, x: int, i: int, j: int, m: int) -> bool:
    y = x
    for _ in range(m):
        y = g.r(i, g.r(j, y))
    return y == x


def check_root_axioms(g: CartanGraph, data: RootSystemData) -> AxiomReport:
    """The four root-system axioms, pointwise."""
    rep = AxiomReport()
    theta = g.theta
    counts = {data.count(x) for x in range(len(g))}
    rep.checked += 1
    if len(counts) != 1:
        rep.fail("equal_cardinality", f"positive root counts {sorted(counts)}")
    for x in range(len(g)):
        for b in data.positive[x]:
            rep.checked += 1
            if sign_of(b) != 1:
                rep.fail("R1", f"point {x}: {b} is not positive")
        for i in range(theta):
            rep.checked += 1
            on_axis = [b for b in data.positive[x] if all(v == 0 for k, v in enumerate(b) if k != i)]
            if on_axis != [simple_root(theta, i)]:
                rep.fail("R2", f"point {x}: multiples of alpha_{i + 1} are {on_axis}")
        full = _all_roots(data, x)
        a = g.gcm(x)
        for i in range(theta):
            rep.checked += 1
            img = {reflect_root(a, i, b) for b in full}
            if img != _all_roots(data, g.r(i, x)):
                rep.fail("R3", f"s_{i + 1} does not map point {x} onto point {g.r(i, x)}")
        for i in range(theta):
            for j in range(i + 1, theta):
                rep.checked += 1
                m = m_ij(data, x, i, j)
                if not _rr_power_fixes(g, x, i, j, m):
                    rep.fail("R4", f"(r_{i + 1} r_{j + 1})^{m} moves point {x}")
    return rep


def check_cartan_graph_axioms(g: CartanGraph, data: RootSystemData) -> AxiomReport:
    """Semi-Cartan conditions, real roots split into signs, and the ``l_ij`` relations."""
    rep = AxiomReport()
    for msg in semi_cartan_violations(g):
        rep.fail("semi_cartan", msg)
    for x in range(len(g)):
        rep.checked += 1
        full = _all_roots(data, x)
        if any(sign_of(b) == 0 for b in full):
            rep.fail("C1", f"point {x} has a mixed-sign real root")
        for i in range(g.theta):
            for j in range(g.theta):
                if i == j:
                    continue
                rep.checked += 1
                l = m_ij(data, x, i, j)
                if not _rr_power_fixes(g, x, i, j, l):
                    rep.fail("C2", f"(r_{i + 1} r_{j + 1})^{l} moves point {x}")
    return rep


def check_lemma_jik(g: CartanGraph, data: RootSystemData) -> AxiomReport:
    """``alpha_j + k alpha_i`` is a root exactly for ``0 <= k <= -a_ij``."""
    rep = AxiomReport()
    theta = g.theta
    for x in range(len(g)):
        a = g.gcm(x)
        for i in range(theta):
            for j in range(theta):
                if i == j:
                    continue
                for k in range(-a[i][j] + 3):
                    rep.checked += 1
                    beta = tuple(
                        (1 if t == j else 0) + (k if t == i else 0) for t in range(theta)
                    )
                    want = 0 <= k <= -a[i][j]
                    if data.contains(x, beta) != want:
                        rep.fail("jik", f"point {x}, i={i + 1}, j={j + 1}, k={k}")
    return rep
