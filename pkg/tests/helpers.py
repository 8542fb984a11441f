"""Shared generators and independent reference computations for the tests."""
import cmath
import random

from hypothesis import strategies as st

from diagroots.braiding import BraidingMatrix, NotIFinite, cartan_row, dynkin_of
from diagroots.unitgroup import GroupSpec

PRIMES = (0, 2, 3, 5, 7)


def torsion_orders(p):
    return [d for d in (2, 3, 4, 5, 6, 8, 9, 10, 12) if p == 0 or d % p]


@st.composite
def specs(draw, primes=PRIMES):
    p = draw(st.sampled_from(primes))
    gens = []
    for k in range(draw(st.integers(0, 2))):
        gens.append((f"g{k}", 0))
    for k in range(draw(st.integers(0, 2))):
        gens.append((f"z{k}", draw(st.sampled_from(torsion_orders(p)))))
    return GroupSpec.create(p, gens)


@st.composite
def units(draw, spec, bound=6):
    free = [draw(st.integers(-bound, bound)) for _ in spec.free_names]
    t = draw(st.integers(0, spec.torsion_order - 1))
    return spec.unit(free, t)


@st.composite
def spec_and_units(draw, n=2, primes=PRIMES):
    spec = draw(specs(primes))
    return (spec,) + tuple(draw(units(spec)) for _ in range(n))


# --- field models for oracles ---------------------------------------------

def primitive_root(p):
    for g in range(2, p):
        if all(pow(g, (p - 1) // f, p) != 1 for f in _prime_factors(p - 1)):
            return g
    return 1


def _prime_factors(n):
    out, k = set(), 2
    while k * k <= n:
        while n % k == 0:
            out.add(k)
            n //= k
        k += 1
    if n > 1:
        out.add(n)
    return out


def qint_in_field(u, k):
    """``1 + u + ... + u^(k-1)`` evaluated in an actual field, zero or not.

    Torsion goes to a primitive root of unity in F_p (or C for p = 0); free
    generators become independent indeterminates, so the sum is a Laurent
    polynomial whose coefficients are compared with zero.
    """
    spec = u.spec
    n = spec.torsion_order
    p = spec.p
    if p:
        assert (p - 1) % n == 0, "choose p with N | p - 1"
        w = pow(primitive_root(p), (p - 1) // n, p)
    coeffs = {}
    for j in range(k):
        mono = tuple(e * j for e in u.free)
        t = u.torsion * j % n
        if p:
            coeffs[mono] = (coeffs.get(mono, 0) + pow(w, t, p)) % p
        else:
            coeffs[mono] = coeffs.get(mono, 0) + cmath.exp(2j * cmath.pi * t / n)
    if p:
        return all(c == 0 for c in coeffs.values())
    return all(abs(c) < 1e-9 for c in coeffs.values())


# --- random i-finite braiding matrices --------------------------------------

def random_spec(rng, primes=PRIMES):
    p = rng.choice(primes)
    gens = [("g", 0)] if rng.random() < 0.6 else []
    for k in range(rng.randint(1, 2)):
        gens.append((f"z{k}", rng.choice(torsion_orders(p))))
    return GroupSpec.create(p, gens)


def random_unit(rng, spec, free_bound=3):
    free = [rng.randint(-free_bound, free_bound) for _ in spec.free_names]
    return spec.unit(free, rng.randrange(spec.torsion_order))


def random_i_finite(rng, primes=PRIMES, tries=500):
    """A braiding matrix of rank 2-4 and an index ``i`` at which it is i-finite.

    Vertex ``i`` gets a torsion label most of the time, and edge labels at
    ``i`` are often chosen as powers of ``q_ii`` so that every case of the
    reflection table is exercised.
    """
    for _ in range(tries):
        spec = random_spec(rng, primes)
        theta = rng.randint(2, 4)
        i = rng.randrange(theta)
        one = spec.identity()
        q = [[random_unit(rng, spec) if rng.random() < 0.5 else one for _ in range(theta)]
             for _ in range(theta)]
        for j in range(theta):
            q[j][j] = random_unit(rng, spec)
        r = rng.random()
        if r < 0.15:
            q[i][i] = one
        elif r < 0.9:
            q[i][i] = spec.unit([0] * len(spec.free_names), rng.randrange(spec.torsion_order))
        for j in range(theta):
            if j != i and rng.random() < 0.6:
                q[i][j] = q[i][i] ** -rng.randint(0, 4) * q[j][i].inverse()
        m = BraidingMatrix(spec, tuple(tuple(row) for row in q))
        try:
            cartan_row(dynkin_of(m), i)
        except NotIFinite:
            continue
        return m, i
    raise RuntimeError("no i-finite sample found")
