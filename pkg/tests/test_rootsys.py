from fractions import Fraction
from itertools import combinations

import pytest
from hypothesis import given, settings, strategies as st

from cascade_kit.rootsys import (
    InvalidRootSystem,
    SimpleSystem,
    build_root_system,
    connected_components,
    diagram_involution,
    expected_positive_root_count,
)
from cascade_kit.integral_pairs import long_cascade_root

import oracles

CLASSICAL = [("A", n) for n in range(1, 8)] + [("B", n) for n in range(2, 8)] + \
    [("C", n) for n in range(2, 8)] + [("D", n) for n in range(4, 8)]
EXCEPTIONAL = ["E6", "E7", "E8", "F4", "G2"]
SMALL = [("A", n) for n in range(1, 7)] + [("B", n) for n in range(2, 7)] + \
    [("C", n) for n in range(2, 7)] + [("D", n) for n in range(4, 7)] + \
    [("E6", None), ("F4", None), ("G2", None)]


@pytest.mark.parametrize("letter,n", CLASSICAL)
def test_classical_roots_match_epsilon_model(letter, n):
    rs = build_root_system(letter, n)
    assert set(rs.positive_roots) == oracles.classical_positive_roots(letter, n)
    assert len(rs.positive_roots) == expected_positive_root_count(letter, n)


@pytest.mark.parametrize("letter,n", CLASSICAL)
def test_gram_is_epsilon_form_with_short_roots_of_length_two(letter, n):
    rs = build_root_system(letter, n)
    eg = oracles.eps_gram(letter, n)
    shortest = min(eg[i][i] for i in range(n))
    c = Fraction(2, shortest)
    assert [[Fraction(x) for x in row] for row in rs.gram] == [[c * x for x in row] for row in eg]


@pytest.mark.parametrize("label", EXCEPTIONAL)
def test_exceptional_roots_are_the_weyl_closure(label):
    rs = build_root_system(label)
    closure = oracles.weyl_closure(rs.cartan)
    assert set(rs.positive_roots) == {r for r in closure if all(x >= 0 for x in r)}
    assert len(closure) == 2 * len(rs.positive_roots)
    assert rs.highest_root == oracles.HIGHEST_EXCEPTIONAL[label]


@pytest.mark.parametrize("letter,n", SMALL)
def test_cartan_matrix_is_symmetrizable(letter, n):
    rs = build_root_system(letter, n)
    a, d = rs.cartan, rs.sym_diag
    for i in range(rs.rank):
        assert a[i][i] == 2
        for j in range(rs.rank):
            assert d[i] * a[i][j] == d[j] * a[j][i]
            if i != j:
                assert a[i][j] <= 0


def test_small_examples():
    a2 = build_root_system("A", 2)
    assert set(a2.positive_roots) == {(1, 0), (0, 1), (1, 1)}
    c3 = build_root_system("C", 3)
    assert len(c3.positive_roots) == 9 and (2, 2, 1) in c3.positive_roots
    assert len(build_root_system("G2").positive_roots) == 6


@pytest.mark.parametrize("bad", [("A", 0), ("B", 1), ("C", 1), ("D", 3), ("E", 5), ("X", 3), ("F4", 5)])
def test_illegal_types_are_rejected(bad):
    with pytest.raises(InvalidRootSystem):
        build_root_system(*bad)


def test_coroot_pairing_examples():
    c3 = build_root_system("C", 3)
    assert c3.coroot_pairing(c3.alpha(2), c3.alpha(3)) == -2
    c6 = build_root_system("C", 6)
    assert c6.coroot_pairing(c6.alpha(1), long_cascade_root(c6, 2)) == -2
    with pytest.raises(ValueError):
        c3.coroot_pairing((1, 0, 1), c3.alpha(1))


@pytest.mark.parametrize("n", range(2, 9))
def test_type_c_pairing_with_cascade(n):
    rs = build_root_system("C", n)
    for k in range(1, n + 1):
        for l in range(1, n + 1):
            want = 2 if l == k else (-2 if l == k + 1 else 0)
            assert rs.coroot_pairing(rs.alpha(k), long_cascade_root(rs, l)) == want


def test_connected_components_examples():
    c6 = build_root_system("C", 6)
    assert connected_components(c6, [c6.alpha(2), c6.alpha(4)]) == [[c6.alpha(2)], [c6.alpha(4)]]
    a3 = build_root_system("A", 3)
    assert len(connected_components(a3, [a3.alpha(1), a3.alpha(2)])) == 1
    piz = [(1, 1, 1, 0, 0, 0), (0, 1, 0, 0, 0, 0), (0, 0, 1, 1, 1, 0),
           (0, 0, 0, 1, 0, 0), (0, 0, 0, 0, 2, 1), (0, 0, 0, 0, 0, 1)]
    assert sorted(len(c) for c in connected_components(c6, piz)) == [3, 3]


def _expected_involution(letter, n):
    """-w0 on simple labels from the classification."""
    ident = {k: k for k in range(1, n + 1)}
    if letter == "A":
        return {k: n + 1 - k for k in range(1, n + 1)}
    if letter == "D" and n % 2:
        return {**ident, n - 1: n, n: n - 1}
    if letter == "E6":
        return {1: 6, 6: 1, 3: 5, 5: 3, 2: 2, 4: 4}
    return ident


@pytest.mark.parametrize("letter,n", SMALL + [("D", 5), ("E7", None), ("E8", None)])
def test_diagram_involution_matches_classification(letter, n):
    rs = build_root_system(letter, n)
    inv = diagram_involution(rs, SimpleSystem.from_indices(rs, range(1, rs.rank + 1)))
    got = {a.index(1) + 1: b.index(1) + 1 for a, b in inv.items()}
    assert got == _expected_involution(rs.type_label, rs.rank)


@pytest.mark.parametrize("letter,n", SMALL)
def test_involution_on_every_subset(letter, n):
    rs = build_root_system(letter, n)
    comps_of = {}
    for size in range(1, rs.rank + 1):
        for sub in combinations(range(1, rs.rank + 1), size):
            ss = SimpleSystem.from_indices(rs, sub)
            inv = diagram_involution(rs, ss)
            assert all(inv[inv[a]] == a for a in ss.elements)
            for comp in connected_components(rs, ss.elements):
                assert {inv[a] for a in comp} == set(comp)
            assert ss.gram_is_positive_definite()
            comps_of[sub] = True
    assert comps_of


def _roots(rs):
    return sorted(rs.positive_roots) + sorted(tuple(-x for x in r) for r in rs.positive_roots)


@settings(max_examples=150, deadline=None)
@given(st.sampled_from(SMALL), st.data())
def test_reflections_permute_roots_and_preserve_the_form(case, data):
    rs = build_root_system(*case)
    roots = _roots(rs)
    g = data.draw(st.sampled_from(roots))
    x = data.draw(st.sampled_from(roots))
    y = data.draw(st.sampled_from(roots))
    sx, sy = rs.reflect(g, x), rs.reflect(g, y)
    assert rs.is_root(sx)
    assert rs.reflect(g, sx) == x
    assert rs.form(sx, sy) == rs.form(x, y)
    assert rs.coroot_pairing(g, x).denominator == 1
    assert rs.coroot_pairing(g, g) == 2
    assert rs.reflect(g, g) == tuple(-c for c in g)
