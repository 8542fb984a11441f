import pytest

from diagroots.braiding import A4, DynkinDiagram
from diagroots.cartangraph import build_graph
from diagroots.classification import canonical_assignments, get_row, instantiate_row
from diagroots.rootsystem import (
    ExceededLimits, Finite, RootLimitExceeded, check_cartan_graph_axioms, check_lemma_jik,
    check_root_axioms, enumerate_roots, m_ij, reflect_root, roots_by_reduced_words, sign_of,
    simple_root,
)
from diagroots.unitgroup import GroupSpec


def row_graph(rid, k=0):
    row = get_row(rid)
    spec, asg = canonical_assignments(row)[k]
    return build_graph(instantiate_row(row, spec, asg)[0])


def roots_of(rid, k=0):
    g = row_graph(rid, k)
    v = enumerate_roots(g)
    assert isinstance(v, Finite)
    return g, v.data


def test_reflection_of_simple_roots():
    assert reflect_root(A4, 0, simple_root(4, 0)) == (-1, 0, 0, 0)
    assert reflect_root(A4, 0, simple_root(4, 1)) == (1, 1, 0, 0)
    assert reflect_root(A4, 0, simple_root(4, 3)) == (0, 0, 0, 1)


def test_sign_of():
    assert sign_of((0, 1, 2)) == 1
    assert sign_of((0, -1, 0)) == -1
    assert sign_of((1, -1, 0)) == 0
    assert sign_of((0, 0, 0)) == 0


def test_a4_has_ten_positive_roots():
    g, data = roots_of("1")
    assert data.count(0) == 10
    assert (1, 1, 1, 1) in data.positive[0]
    assert data.contains(0, (-1, -1, 0, 0))
    assert not data.contains(0, (1, 0, 1, 0))


@pytest.mark.parametrize("rid, n", [("2", 16), ("3", 16), ("4", 24), ("5", 12)])
def test_standard_rows_root_counts(rid, n):
    g, data = roots_of(rid)
    assert {data.count(x) for x in range(len(g))} == {n}


@pytest.mark.parametrize("limit", [512, 2048])
def test_infinite_type_exceeds_limits(limit):
    spec = GroupSpec.create(5, [("g", 0)])
    g = spec.gen("g")
    d = DynkinDiagram.build([g] * 4, {(0, 1): g ** -3, (1, 2): g ** -3, (2, 3): g ** -3})
    v = enumerate_roots(build_graph(d), max_pos_roots=limit)
    assert isinstance(v, ExceededLimits)
    assert v.limit == limit


@pytest.mark.parametrize("rid", ["1", "6", "14", "17", "22"])
def test_reduced_words_agree_with_saturation(rid):
    g, data = roots_of(rid)
    for x in range(len(g)):
        w = roots_by_reduced_words(g, x)
        assert w.ok, w.problems
        assert w.roots == set(data.positive[x])
        assert w.longest == data.count(x)


def test_reduced_words_respect_limit():
    g = row_graph("4")
    with pytest.raises(RootLimitExceeded):
        roots_by_reduced_words(g, 0, max_roots=5)


def test_rank_two_orders_on_path():
    g, data = roots_of("6")
    for x in range(len(g)):
        a = g.gcm(x)
        for i in range(4):
            for j in range(i + 1, 4):
                m = m_ij(data, x, i, j)
                if a[i][j] == 0:
                    assert m == 2
                else:
                    assert m >= 3
                y = x
                for _ in range(m):
                    y = g.r(i, g.r(j, y))
                assert y == x


def test_root_strings_follow_cartan_entries():
    # alpha_2 + k alpha_1 is a root for k = 0, 1 only in A4
    g, data = roots_of("1")
    assert data.contains(0, (1, 1, 0, 0))
    assert not data.contains(0, (2, 1, 0, 0))
    assert check_lemma_jik(g, data).ok


@pytest.mark.parametrize("rid", ["6", "9", "12", "15'", "18", "21"])
def test_axioms_hold(rid):
    g, data = roots_of(rid)
    assert check_root_axioms(g, data).ok
    assert check_cartan_graph_axioms(g, data).ok
    assert check_lemma_jik(g, data).ok


@pytest.mark.parametrize("rid", ["7", "13", "20"])
def test_equal_cardinality_across_points(rid):
    g, data = roots_of(rid)
    assert len({data.count(x) for x in range(len(g))}) == 1


def test_tampered_root_set_is_caught():
    g, data = roots_of("6")
    pos = list(data.positive)
    pos[1] = pos[1][:-1]
    bad = type(data)(tuple(pos))
    rep = check_root_axioms(g, bad)
    assert not rep.ok
    assert any(a == "equal_cardinality" for a, _ in rep.failures)
