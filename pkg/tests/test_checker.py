import copy
from itertools import combinations

import pytest

from cascade_kit.biparabolic import make_biparabolic, reduced_index_typeC_parabolic
from cascade_kit.checker import (
    EXCLUDED,
    INCONCLUSIVE,
    INTEGRAL_TRIVIALLY,
    NOT_APPLICABLE,
    HGamma,
    Verdict,
    check_half_set,
    check_with_explicit_hgamma,
    component_count_defect,
    count_check,
    factorization_test,
    h_gamma_basis,
    integrality_sweep,
    max_rank_guard,
    reduced_classes,
    reverify,
    type_a_shortcut,
    verdict_roundtrip,
)
from cascade_kit.diophantine import MonoidProblem, hilbert_basis
from cascade_kit.integral_pairs import reduce_half_set
from cascade_kit.rootsys import build_root_system
from cascade_kit.weights import GeneratorInfo, biparabolic_generators, typeC_parabolic_generators

import oracles


def proper_subsets(n):
    for size in range(n):
        yield from combinations(range(1, n + 1), size)


def test_h_gamma_examples():
    c6 = build_root_system("C", 6)
    assert h_gamma_basis(c6, [1, 2, 4, 5], [1, 3, 5]) == HGamma((c6.alpha(1), c6.alpha(5)))
    c3 = build_root_system("C", 3)
    assert h_gamma_basis(c3, [1, 2], [1]).coroot_basis == (c3.alpha(1),)
    c4 = build_root_system("C", 4)
    assert h_gamma_basis(c4, [2, 3, 4], [2]).dim == 0


def test_count_examples():
    c6 = build_root_system("C", 6)
    cr = count_check(c6, [1, 2, 4, 5], [1, 3, 5])
    assert (cr.rl, cr.rl_z, cr.dim_h_gamma, cr.stage) == (4, 6, 2, None)
    c4 = build_root_system("C", 4)
    cr = count_check(c4, [1, 3], [1])
    assert cr.diff < cr.dim_h_gamma and cr.stage == "CountFail"
    assert component_count_defect(c4, [1, 3], [1]) == 1
    cr = count_check(c4, [], [1, 3])
    assert cr.dim_h_gamma == 0 and cr.stage == "RLEqual"


@pytest.mark.parametrize("n", range(2, 7))
def test_orbit_count_agrees_with_the_component_formula(n):
    rs = build_root_system("C", n)
    for pi1 in proper_subsets(n):
        rl = reduced_index_typeC_parabolic(make_biparabolic(rs, pi1, range(1, n + 1)))
        for half in reduced_classes(rs, pi1):
            cr = count_check(rs, pi1, half)
            assert cr.rl == rl
            assert cr.diff == cr.formula_diff
            # the count fails exactly when some component is split into two even pieces
            if cr.dim_h_gamma:
                assert (cr.diff < cr.dim_h_gamma) == (component_count_defect(rs, pi1, half) > 0)


def test_factorization_unit_cases():
    res = factorization_test([(2,), (-1,), (-2,)], 1, 2, [(1, 0, 1), (1, 2, 0)])
    assert not res.passed and len(res.failures) == 3
    assert res.failures[0]["reason"] == "hatted factor with exponent > 1"
    res = factorization_test([(1,)], 1, 0, [])
    assert res.passed and res.partition == (0,)
    res = factorization_test([(1,), (1,)], 2, 0, [])
    assert not res.passed and res.failures[0]["reason"] == "pairings of Q are dependent"
    res = factorization_test([(1,), (-1,)], 1, 3, [(1, 1)])
    assert not res.passed and res.failures[0]["Q"] is None
    # q p^ with q in Q: passes
    res = factorization_test([(1,), (-1,)], 1, 1, [(1, 1)])
    assert res.passed and res.partition == (0,)


def test_c6_case_is_excluded_as_not_polynomial():
    c6 = build_root_system("C", 6)
    v = check_half_set(c6, [1, 2, 4, 5], [1, 3, 5])
    assert v.status == EXCLUDED and v.stage == "NotPolynomial"
    assert v.witness["hilbert_basis"] == [list(b) for b in oracles.brute_hilbert(
        [tuple(p) for p in v.witness["pairings"]], 8)]
    assert v.witness["h_gamma"] == [1, 5]
    assert reverify(v)


def test_c3_case_fails_factorization():
    c3 = build_root_system("C", 3)
    v = check_half_set(c3, [1, 2], [1])
    assert v.excluded and v.stage == "FactorizationFail"
    assert v.witness["hilbert_basis"] == [[1, 0, 1], [1, 2, 0]]
    assert reverify(v)


def test_empty_half_set_is_trivially_integral():
    for n in range(2, 6):
        rs = build_root_system("C", n)
        for pi1 in proper_subsets(n):
            assert check_half_set(rs, pi1, []).status == INTEGRAL_TRIVIALLY


def test_input_validation():
    c3 = build_root_system("C", 3)
    with pytest.raises(ValueError):
        check_half_set(c3, [1, 2, 3], [1])
    with pytest.raises(ValueError):
        check_half_set(c3, [1], [3])
    with pytest.raises(ValueError):
        check_half_set(c3, [4], [1])
    with pytest.raises(ValueError):
        check_half_set(build_root_system("B", 3), [1], [1])


def test_explicit_h_gamma_mode():
    c5 = build_root_system("C", 5)
    bg = biparabolic_generators(c5, [1, 2, 3, 4], [4, 5], [1, 4], [4], split=[2])
    v = check_with_explicit_hgamma(bg.generators, HGamma((c5.alpha(4),)), 4)
    assert v.stage == "NotPolynomial" and reverify(v)
    c3 = build_root_system("C", 3)
    gens = typeC_parabolic_generators(c3, [1, 2], [1]).generators
    v = check_with_explicit_hgamma(gens, HGamma((c3.alpha(1),)), 2)
    assert v.stage == "FactorizationFail"
    # a generator with nothing to pair against is its own basis and factors trivially
    lone = GeneratorInfo(((1,),), (0,), (0,), (0,), (), "p1")
    v = check_with_explicit_hgamma([lone], HGamma(()), 1)
    assert v.status == INCONCLUSIVE and v.witness["hilbert_basis"] == [[1]]
    with pytest.raises(ValueError):
        check_with_explicit_hgamma(gens, HGamma(()), 2)


@pytest.mark.parametrize("n", range(2, 7))
def test_verdicts_are_stable_under_reduction(n):
    rs = build_root_system("C", n)
    for pi1 in proper_subsets(n):
        seen = {}
        for size in range(1, n):
            for half in combinations(range(1, n), size):
                red = reduce_half_set(rs, pi1, half)
                if red not in seen:
                    seen[red] = check_half_set(rs, pi1, red).to_json()
                    seen[red]["witness"].pop("half_set")
                a = check_half_set(rs, pi1, half).to_json()
                assert a["witness"].pop("half_set") == list(half)
                assert a == seen[red]


def test_verdicts_are_stable_under_reduction_in_c6_orbits():
    rs = build_root_system("C", 6)
    for pi1 in ([1, 2, 4, 5], [2, 3, 4, 5, 6], [1, 3, 5], [2, 3]):
        for red in reduced_classes(rs, pi1):
            want = check_half_set(rs, pi1, red)
            for other in oracles.parity_orbit(rs.cartan, pi1, red):
                got = check_half_set(rs, pi1, other)
                assert (got.status, got.stage) == (want.status, want.stage)


@pytest.mark.parametrize("n", range(2, 6))
def test_every_verdict_reverifies_after_a_json_round_trip(n):
    rs = build_root_system("C", n)
    for pi1 in proper_subsets(n):
        rep = integrality_sweep(rs, pi1)
        assert rep.certified and not rep.inconclusive
        for v in rep.verdicts:
            assert verdict_roundtrip(v) == v
            assert reverify(v) and reverify(v.to_json())
            if v.stage in ("NotPolynomial", "FactorizationFail"):
                # reaching the monoid stages means the generator count rose by dim h_Gamma
                c = v.witness["counts"]
                assert len(v.witness["labels"]) == c["rl"] + c["dim_h_gamma"]


def test_tampered_witnesses_do_not_reverify():
    c3 = build_root_system("C", 3)
    v = check_half_set(c3, [1, 2], [1])
    bad = copy.deepcopy(v.to_json())
    bad["witness"]["partitions"] = bad["witness"]["partitions"][:1]
    assert not reverify(bad)
    bad = copy.deepcopy(v.to_json())
    bad["witness"]["hilbert_basis"][0] = [1, 1, 1]
    assert not reverify(bad)
    c6 = build_root_system("C", 6)
    w = check_half_set(c6, [1, 2, 4, 5], [1, 3, 5]).to_json()
    w["witness"]["relation"] = [w["witness"]["relation"][0]] * 2
    assert not reverify(w)
    c4 = build_root_system("C", 4)
    w = check_half_set(c4, [1, 3], [1]).to_json()
    assert w["stage"] == "CountFail"
    w["witness"]["counts"]["rl_z"] += 5
    assert not reverify(w)
    assert not reverify(Verdict(EXCLUDED, "Nonsense", {}))


def test_sweep_examples():
    c3 = build_root_system("C", 3)
    rep = integrality_sweep(c3, [1, 2])
    assert rep.classes == ((1,),) and rep.certified
    c6 = build_root_system("C", 6)
    rep = integrality_sweep(c6, [1, 2, 4, 5])
    assert rep.certified and (1, 3, 5) in rep.classes and len(rep.classes) == 7
    assert integrality_sweep(c6, [1, 2, 4, 5], jobs=2) == rep
    for n in range(2, 7):
        rep = integrality_sweep(build_root_system("C", n), [])
        assert {v.stage for v in rep.verdicts} == {"RLEqual"}


def test_sweep_guard(monkeypatch):
    c9 = build_root_system("C", 9)
    with pytest.raises(ValueError):
        integrality_sweep(c9, [1])
    monkeypatch.setenv("CASCADE_KIT_MAX_RANK", "3")
    assert max_rank_guard() == 3
    with pytest.raises(ValueError):
        integrality_sweep(build_root_system("C", 4), [1])
    assert integrality_sweep(build_root_system("C", 4), [1], max_rank=4).certified


def test_type_a_shortcut():
    c5 = build_root_system("C", 5)
    assert type_a_shortcut(c5, [1, 3], [1, 4]).status == INTEGRAL_TRIVIALLY
    c3 = build_root_system("C", 3)
    v = type_a_shortcut(c3, [1, 2], [1, 2, 3])
    assert v.status == NOT_APPLICABLE and v.witness["type"] == "C"
    a4 = build_root_system("A", 4)
    assert type_a_shortcut(a4, [1, 2, 4], [1, 2, 3, 4]).status == INTEGRAL_TRIVIALLY
    d5 = build_root_system("D", 5)
    assert type_a_shortcut(d5, [1, 2], [3, 4, 5]).status == INTEGRAL_TRIVIALLY
    assert type_a_shortcut(d5, [2, 3, 4, 5], [1]).status == NOT_APPLICABLE


def test_monoid_of_the_c3_case_is_free():
    # free but the factorization still fails
    assert hilbert_basis(MonoidProblem(((2,), (-1,), (-2,)))) == [(1, 0, 1), (1, 2, 0)]
