"""Exact arithmetic in a finitely generated model of the unit group of a field.

The roots of unity of a field form a cyclic group, so all torsion lives in
a single ``Z/N``: with ``w`` a fixed primitive ``N``-th root of unity, a
declared generator of order ``d`` is ``w**(N // d)`` and ``-1`` is
``w**(N // 2)``.  ``N`` is the lcm of the declared orders, times 2 when
``p != 2``.  Free generators (order 0) contribute one integer exponent each.

Consequence: two declared torsion generators of the same order are equal.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from math import gcd, lcm
from typing import Iterable, Optional

SIGN_NAME = "-1"


def _is_prime(n: int) -> bool:
    if n < 2:
        return False
    k = 2
    while k * k <= n:
        if n % k == 0:
            return False
        k += 1
    return True


class GroupSpecError(ValueError):
    pass


class SpecMismatch(TypeError):
    """Raised when units from different group specs are combined."""


@dataclass(frozen=True)
class GroupSpec:
    """Characteristic plus the declared ``(name, order)`` generators.

    Build with :meth:`create`, which validates the orders against ``p``.
    """

    p: int
    generators: tuple[tuple[str, int], ...]

    @classmethod
    def create(cls, p: int, generators: Iterable[tuple[str, int]] = ()) -> "GroupSpec":
        if p != 0 and not _is_prime(p):
            raise GroupSpecError(f"characteristic must be 0 or a prime, got {p}")
        gens = []
        seen = {SIGN_NAME}
        for name, order in generators:
            if name in seen:
                raise GroupSpecError(f"duplicate generator {name!r}")
            seen.add(name)
            if order < 0 or order == 1:
                raise GroupSpecError(f"generator {name!r}: order must be 0 or >= 2, got {order}")
            if order and p and order % p == 0:
                raise GroupSpecError(f"generator {name!r}: order {order} divisible by p = {p}")
            gens.append((name, int(order)))
        return cls(p, tuple(gens))

    @property
    def has_sign(self) -> bool:
        return self.p != 2

    @property
    def torsion_order(self) -> int:
        n = 2 if self.has_sign else 1
        for _, d in self.generators:
            if d:
                n = lcm(n, d)
        return n

    @property
    def free_names(self) -> tuple[str, ...]:
        return tuple(n for n, d in self.generators if d == 0)

    def order_of(self, name: str) -> int:
        for n, d in self.generators:
            if n == name:
                return d
        raise KeyError(name)

    def has(self, name: str) -> bool:
        return any(n == name for n, _ in self.generators)

    def identity(self) -> "FieldUnit":
        return FieldUnit(self, (0,) * len(self.free_names), 0)

    def gen(self, name: str) -> "FieldUnit":
        """The generator called ``name``; ``"-1"`` is the identity when p = 2."""
        if name == SIGN_NAME:
            return self.sign()
        d = self.order_of(name)
        if d == 0:
            free = tuple(int(n == name) for n in self.free_names)
            return FieldUnit(self, free, 0)
        return FieldUnit(self, (0,) * len(self.free_names), self.torsion_order // d)

    def sign(self) -> "FieldUnit":
        n = self.torsion_order
        return FieldUnit(self, (0,) * len(self.free_names), n // 2 if self.has_sign else 0)

    def unit(self, free: Iterable[int], torsion: int) -> "FieldUnit":
        free = tuple(free)
        if len(free) != len(self.free_names):
            raise GroupSpecError(f"expected {len(self.free_names)} free exponents")
        return FieldUnit(self, free, torsion % self.torsion_order)


@dataclass(frozen=True)
class FieldUnit:
    """A unit in canonical form: free exponents plus a torsion exponent mod ``N``."""

    spec: GroupSpec = field(repr=False)
    free: tuple[int, ...]
    torsion: int

    def _check(self, other: "FieldUnit") -> None:
        if self.spec != other.spec:
            raise SpecMismatch("units belong to different group specs")

    def __mul__(self, other: "FieldUnit") -> "FieldUnit":
        self._check(other)
        return FieldUnit(
            self.spec,
            tuple(a + b for a, b in zip(self.free, other.free)),
            (self.torsion + other.torsion) % self.spec.torsion_order,
        )

    def __truediv__(self, other: "FieldUnit") -> "FieldUnit":
        return self * other.inverse()

    def __pow__(self, k: int) -> "FieldUnit":
        return FieldUnit(
            self.spec, tuple(a * k for a in self.free), self.torsion * k % self.spec.torsion_order
        )

    def __neg__(self) -> "FieldUnit":
        return self * self.spec.sign()

    def inverse(self) -> "FieldUnit":
        return self ** -1

    def is_one(self) -> bool:
        return self.torsion == 0 and not any(self.free)

    @property
    def exps(self) -> tuple[int, ...]:
        """Free exponents followed by the torsion exponent."""
        return self.free + (self.torsion,)

    def __str__(self) -> str:
        return format_unit(self)


def combine(a: FieldUnit, b: FieldUnit) -> FieldUnit:
    return a * b


def inverse(a: FieldUnit) -> FieldUnit:
    return a.inverse()


def power(u: FieldUnit, k: int) -> FieldUnit:
    return u ** k


def element_order(u: FieldUnit) -> Optional[int]:
    """Least ``d >= 1`` with ``u**d == 1``; ``None`` for infinite order."""
    if any(u.free):
        return None
    n = u.spec.torsion_order
    return n // gcd(n, u.torsion)


def min_power_hitting(q: FieldUnit, target: FieldUnit) -> Optional[int]:
    """Least ``m >= 0`` with ``q**m == target``, or None if there is none."""
    q._check(target)
    fixed: Optional[int] = None
    for a, b in zip(q.free, target.free):
        if a == 0:
            if b:
                return None
            continue
        if b % a:
            return None
        m = b // a
        if m < 0 or (fixed is not None and fixed != m):
            return None
        fixed = m
    n = q.spec.torsion_order
    a, b = q.torsion, target.torsion
    g = gcd(a, n)
    if b % g:
        return None
    n2 = n // g
    m0 = 0 if n2 == 1 else (b // g) * pow(a // g, -1, n2) % n2
    if fixed is not None:
        return fixed if fixed % n2 == m0 else None
    return m0


def qint_vanishes(q: FieldUnit, k: int) -> bool:
    """Whether the quantum integer ``(k)_q = 1 + q + ... + q**(k-1)`` is zero."""
    if k < 1:
        raise ValueError("k must be positive")
    if q.is_one():
        p = q.spec.p
        return p > 0 and k % p == 0
    return (q ** k).is_one()


def torsion_as_word(spec: GroupSpec, t: int) -> tuple[bool, list[tuple[str, int]]]:
    """Express ``w**t`` as ``(negated, [(name, exponent), ...])`` over declared generators.

    Prefers a single generator power, optionally negated; falls back to a
    product over several generators.  Raises ValueError if ``t`` lies outside
    the subgroup generated by the declared generators and ``-1``.
    """
    n = spec.torsion_order
    t %= n
    if t == 0:
        return False, []
    if spec.has_sign and t == n // 2:
        return True, []
    tors = [(name, d) for name, d in spec.generators if d]
    signs = [False, True] if spec.has_sign else [False]
    for negated in signs:
        s = (t - (n // 2 if negated else 0)) % n
        if s == 0:
            return negated, []
        for name, d in tors:
            step = n // d
            if s % step == 0:
                k = s // step
                if k > d // 2:
                    k -= d
                return negated, [(name, k)]
    # general combination: small brute force over generator exponents
    best = None

    def rec(idx, acc, word):
        nonlocal best
        if best is not None:
            return
        if idx == len(tors):
            for negated in signs:
                if (acc + (n // 2 if negated else 0)) % n == t:
                    best = (negated, [w for w in word if w[1]])
                    return
            return
        name, d = tors[idx]
        for k in range(d):
            rec(idx + 1, acc + k * (n // d), word + [(name, k)])

    rec(0, 0, [])
    if best is None:
        raise ValueError(f"torsion exponent {t} not generated by declared generators")
    return best


def format_unit(u: FieldUnit) -> str:
    """Compact text such as ``-q^-1*z^2``; the identity prints as ``1``."""
    parts = []
    for name, e in zip(u.spec.free_names, u.free):
        if e:
            parts.append(name if e == 1 else f"{name}^{e}")
    try:
        negated, word = torsion_as_word(u.spec, u.torsion)
    except ValueError:
        negated, word = False, [("w", u.torsion)]
    for name, e in word:
        parts.append(name if e == 1 else f"{name}^{e}")
    if not parts:
        return "-1" if negated else "1"
    return ("-" if negated else "") + "*".join(parts)
