import random

import pytest
from hypothesis import given, settings, strategies as st

from diagroots.braiding import (
    A4, B4, BraidingMatrix, DynkinDiagram, InternalCaseGap, NotIFinite, cartan_entry,
    cartan_matrix, cartan_row, dynkin_of, is_gcm, is_indecomposable, reflect,
    reflect_diagram, reflect_diagram_cases,
)
from diagroots.unitgroup import GroupSpec

from helpers import random_i_finite


def chain(vs, es):
    return DynkinDiagram.build(vs, {(k, k + 1): e for k, e in enumerate(es)})


def test_dynkin_of_drops_trivial_products():
    spec = GroupSpec.create(5, [("z", 3)])
    z, one = spec.gen("z"), spec.identity()
    m = BraidingMatrix(spec, ((z, z), (z ** -1, z)))
    assert dynkin_of(m).edges == ()
    m = BraidingMatrix(spec, ((z, z), (one, z)))
    assert dynkin_of(m).edge(0, 1) == z


def test_row_one_diagram_from_matrix():
    spec = GroupSpec.create(7, [("q", 0)])
    q = spec.gen("q")
    d = chain([q] * 4, [q ** -1] * 3)
    assert dynkin_of(d.to_matrix()) == d
    assert str(d) == "v1=q v2=q v3=q v4=q | e12=q^-1 e23=q^-1 e34=q^-1"


def test_cartan_entry_examples():
    s5 = GroupSpec.create(5, [("z", 3), ("g", 0)])
    z, g = s5.gen("z"), s5.gen("g")
    assert cartan_entry(z, z ** -1) == -1
    assert cartan_entry(g, g) is None
    assert cartan_entry(s5.sign(), g) == -1
    s3 = GroupSpec.create(3)
    assert cartan_entry(s3.identity(), s3.sign()) == -2


def test_cartan_matrices_of_standard_chains():
    spec = GroupSpec.create(7, [("q", 0)])
    q = spec.gen("q")
    assert cartan_matrix(chain([q] * 4, [q ** -1] * 3)) == A4
    b4 = chain([q ** 2, q ** 2, q ** 2, q], [q ** -2] * 3)
    assert cartan_matrix(b4) == B4


def test_free_chain_is_not_i_finite():
    spec = GroupSpec.create(5, [("g", 0)])
    g = spec.gen("g")
    with pytest.raises(NotIFinite) as err:
        cartan_matrix(chain([g] * 4, [g] * 3))
    assert (err.value.i, err.value.j) == (0, 1)


def test_rank_two_reflection():
    spec = GroupSpec.create(5, [("z", 3)])
    z, m = spec.gen("z"), spec.sign()
    d = DynkinDiagram.build([m, z], {(0, 1): z ** -1})
    want = DynkinDiagram.build([m, m], {(0, 1): z})
    assert reflect_diagram(d, 0) == want
    assert reflect_diagram_cases(d, 0) == want


def test_fixed_diagram_when_edges_are_powers():
    spec = GroupSpec.create(7, [("q", 0)])
    q = spec.gen("q")
    d = chain([q] * 4, [q ** -1] * 3)
    for i in range(4):
        assert reflect_diagram(d, i) == d


def test_isolated_vertex_is_untouched():
    spec = GroupSpec.create(5, [("z", 4)])
    z = spec.gen("z")
    d = DynkinDiagram.build([z, z, z], {(1, 2): z})
    assert reflect_diagram_cases(d, 0) == d


def test_vertex_one_in_char_three():
    spec = GroupSpec.create(3, [("z", 4)])
    z, one = spec.gen("z"), spec.identity()
    d = DynkinDiagram.build([one, z, z], {(0, 1): z, (1, 2): z ** -1})
    a = cartan_row(d, 0)
    out = reflect_diagram_cases(d, 0)
    assert out.vertex[1] == z * z ** -a[1]
    assert out == reflect_diagram(d, 0)


def test_indecomposability():
    spec = GroupSpec.create(5, [("q", 0)])
    q = spec.gen("q")
    assert is_indecomposable(chain([q] * 4, [q ** -1] * 3))
    assert not is_indecomposable(DynkinDiagram.build([q] * 4, {(0, 1): q, (2, 3): q}))
    assert is_indecomposable(DynkinDiagram.build([q], {}))


def test_permuted_moves_vertices():
    spec = GroupSpec.create(5, [("q", 0)])
    q = spec.gen("q")
    d = chain([q, q ** 2, q ** 3, q ** 4], [q ** -1, q ** -2, q ** -3])
    e = d.permuted([3, 2, 1, 0])
    assert e.vertex == (q ** 4, q ** 3, q ** 2, q)
    assert e.edge(0, 1) == q ** -3


@pytest.mark.parametrize("seed", range(4))
def test_reflection_matches_case_table(seed):
    rng = random.Random(seed)
    for _ in range(250):
        m, i = random_i_finite(rng)
        assert dynkin_of(reflect(m, i)) == reflect_diagram_cases(dynkin_of(m), i)


@pytest.mark.parametrize("seed", range(2))
def test_reflection_is_involutive_on_diagrams(seed):
    rng = random.Random(100 + seed)
    for _ in range(200):
        m, i = random_i_finite(rng)
        r = reflect(m, i)
        try:
            rr = reflect(r, i)
        except NotIFinite:
            continue
        assert dynkin_of(rr) == dynkin_of(m)


@pytest.mark.parametrize("seed", range(2))
def test_cartan_row_is_stable(seed):
    rng = random.Random(200 + seed)
    for _ in range(200):
        m, i = random_i_finite(rng)
        assert cartan_row(dynkin_of(reflect(m, i)), i) == cartan_row(dynkin_of(m), i)


def test_twist_invariance():
    rng = random.Random(7)
    for _ in range(200):
        m, i = random_i_finite(rng)
        spec = m.spec
        # move part of each q_jk into q_kj without changing the products
        q = [list(r) for r in m.q]
        n = m.theta
        for j in range(n):
            for k in range(j + 1, n):
                t = spec.unit([rng.randint(-2, 2) for _ in spec.free_names],
                              rng.randrange(spec.torsion_order))
                q[j][k] = q[j][k] * t
                q[k][j] = q[k][j] / t
        m2 = BraidingMatrix(spec, tuple(tuple(r) for r in q))
        assert dynkin_of(m2) == dynkin_of(m)
        assert dynkin_of(reflect(m2, i)) == dynkin_of(reflect(m, i))


def test_zero_symmetry_of_cartan_rows():
    rng = random.Random(11)
    seen = 0
    while seen < 200:
        m, _ = random_i_finite(rng)
        try:
            a = cartan_matrix(m)
        except NotIFinite:
            continue
        seen += 1
        assert is_gcm(a)


def test_case_gap_is_an_assertion():
    assert issubclass(InternalCaseGap, AssertionError)
