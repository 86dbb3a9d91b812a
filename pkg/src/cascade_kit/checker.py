"""Staged exclusion of non-integral adapted pairs for type C parabolics.

A half set (simple roots where h takes values in 1/2 + Z) is excluded when
the integral subalgebra it would define contradicts one of:

    RLEqual            h_Gamma is zero, so the reduced index cannot grow
    CountFail          it grows by less than dim h_Gamma
    NotPolynomial      the h_Gamma-invariant monomials are not a free monoid
    FactorizationFail  no split of the generators into scalar ones (Q) and
                       hatted ones (P^) lets every invariant generator carry
                       exactly one hatted factor, to the first power

Stages run in that order and the first failure wins. A half set surviving
all four is reported Inconclusive; nothing here proves non-integrality.
"""

from __future__ import annotations

import json
import os
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from itertools import combinations
from typing import Iterable, Sequence

from . import _linalg
from .biparabolic import index_involution, involution_orbits
from .diophantine import BudgetExceeded, MonoidProblem, hilbert_basis, is_free_monoid
from .integral_pairs import compute_pi1_z, reduce_half_set
from .rootsys import Root, RootSystem, SimpleSystem, build_root_system, component_type, index_components
from .weights import GeneratorInfo, h_gamma_indices, subsystem_orbits, typeC_parabolic_generators

INTEGRAL_TRIVIALLY = "IntegralTrivially"
EXCLUDED = "Excluded"
INCONCLUSIVE = "Inconclusive"
NOT_APPLICABLE = "NotApplicable"

STAGES = ("RLEqual", "CountFail", "NotPolynomial", "FactorizationFail")

DEFAULT_MAX_RANK = 8


def max_rank_guard() -> int:
    return int(os.environ.get("CASCADE_KIT_MAX_RANK", DEFAULT_MAX_RANK))


@dataclass(frozen=True)
class HGamma:
    coroot_basis: tuple[Root, ...]

    @property
    def dim(self) -> int:
        return len(self.coroot_basis)


@dataclass(frozen=True)
class Verdict:
    status: str
    stage: str | None = None
    witness: dict = field(default_factory=dict)

    @property
    def excluded(self) -> bool:
        return self.status == EXCLUDED

    def to_json(self) -> dict:
        return {"status": self.status, "stage": self.stage, "witness": self.witness}

    @classmethod
    def from_json(cls, obj: dict) -> "Verdict":
        return cls(obj["status"], obj.get("stage"), obj.get("witness", {}))


def _validate_typeC(rs: RootSystem, pi1: Iterable[int], half: Iterable[int]) -> tuple[tuple[int, ...], tuple[int, ...]]:
    if rs.type_label != "C":
        raise ValueError("the checker handles type C only")
    n = rs.rank
    p1 = tuple(sorted(set(pi1)))
    hs = tuple(sorted(set(half)))
    if any(not 1 <= k <= n for k in p1):
        raise ValueError(f"pi1 index outside [1, {n}]")
    if len(p1) == n:
        raise ValueError("pi1 must be a proper subset of pi")
    if any(not 1 <= k <= n - 1 for k in hs):
        raise ValueError(f"half set must lie in [1, {n - 1}]")
    return p1, hs


def h_gamma_basis(rs: RootSystem, pi1: Iterable[int], half: Iterable[int]) -> HGamma:
    """Coroots of the half roots in pi1, less alpha_{i_r} when beta_{i_r} lies in pi1^Z."""
    p1, hs = _validate_typeC(rs, pi1, half)
    data = compute_pi1_z(rs, p1, hs)
    return HGamma(tuple(rs.alpha(k) for k in h_gamma_indices(data, p1)))


# ---------------------------------------------------------------- counting


@dataclass(frozen=True)
class CountReport:
    rl: int
    rl_z: int
    dim_h_gamma: int
    s: int
    s_z: int
    formula_diff: int

    @property
    def diff(self) -> int:
        return self.rl_z - self.rl

    @property
    def stage(self) -> str | None:
        if self.dim_h_gamma == 0:
            return "RLEqual"
        if self.diff < self.dim_h_gamma:
            return "CountFail"
        return None


def _orbit_count(rs: RootSystem, ground: Sequence[Root], sub: SimpleSystem) -> int:
    return len(subsystem_orbits(rs, ground, sub, SimpleSystem(rs, [])))


def count_check(rs: RootSystem, pi1: Iterable[int], half: Iterable[int]) -> CountReport:
    """Reduced indices of q and q_Z by orbit counting, with the orbit-difference formula alongside.

    For a type C parabolic the reduced index is the number of orbits of the
    pi1 diagram involution (identity off pi1) on pi; likewise for q_Z on pi^Z.
    """
    p1, hs = _validate_typeC(rs, pi1, half)
    n = rs.rank
    data = compute_pi1_z(rs, p1, hs)
    rl = len(involution_orbits(n, index_involution(rs, p1)))
    rl_z = _orbit_count(rs, list(data.pi_z.elements), data.pi1_z)
    s = len(involution_orbits(n, index_involution(rs, p1))) - (n - len(p1))
    s_z = _orbit_count(rs, list(data.pi1_z.elements), data.pi1_z)
    dim = len(h_gamma_indices(data, p1))
    return CountReport(rl, rl_z, dim, s, s_z, (s_z - s) + dim)


def component_count_defect(rs: RootSystem, pi1: Iterable[int], half: Iterable[int]) -> int:
    """Number of type A components of pi1 split by their half index into two even-rank pieces."""
    n = rs.rank
    hs = set(half)
    bad = 0
    for comp in index_components(rs, pi1):
        inside = hs & set(comp)
        if not inside or comp[-1] == n:
            continue
        (t,) = inside
        m, r = t - comp[0], comp[-1] - t
        if m % 2 == 0 and r % 2 == 0:
            bad += 1
    return bad


# ---------------------------------------------------------------- factorization


@dataclass(frozen=True)
class FactorizationResult:
    passed: bool
    partition: tuple[int, ...] | None
    failures: tuple[dict, ...]


def _violation(element: Sequence[int], phat: set[int]) -> str | None:
    hat = [(i, e) for i, e in enumerate(element) if e and i in phat]
    if len(hat) == 0:
        return "no hatted factor"
    if len(hat) > 1:
        return "several hatted factors"
    if hat[0][1] != 1:
        return "hatted factor with exponent > 1"
    return None


def factorization_test(
    pairings: Sequence[Sequence[int]], dim: int, rl_q: int, basis: Sequence[Sequence[int]]
) -> FactorizationResult:
    """Search all Q of size ``dim`` with independent pairings and |P^| = rl_q.

    Passes with the first (lexicographic) partition under which every basis
    element has exactly one P^ factor, to the first power. Otherwise the
    witness lists, for each candidate Q, the first offending basis element.
    """
    k = len(pairings)
    failures = []
    if k - dim != rl_q:
        failures.append({"Q": None, "reason": f"{k} generators cannot split as {dim} + {rl_q}"})
        return FactorizationResult(False, None, tuple(failures))
    for q in combinations(range(k), dim):
        if dim and not _linalg.is_independent([pairings[i] for i in q]):
            failures.append({"Q": list(q), "reason": "pairings of Q are dependent"})
            continue
        phat = set(range(k)) - set(q)
        bad = None
        for j, b in enumerate(basis):
            why = _violation(b, phat)
            if why:
                bad = {"Q": list(q), "element": list(b), "index": j, "reason": why}
                break
        if bad is None:
            return FactorizationResult(True, q, tuple(failures))
        failures.append(bad)
    return FactorizationResult(False, None, tuple(failures))


def _monoid_stages(pairings: list[tuple[int, ...]], labels: list[str], dim: int, rl_q: int, extra: dict) -> Verdict:
    problem = MonoidProblem(tuple(pairings))
    basis = hilbert_basis(problem)
    if isinstance(basis, BudgetExceeded):
        return Verdict(INCONCLUSIVE, None, {**extra, "reason": f"degree budget {basis.budget} exceeded"})
    rep = is_free_monoid(problem, basis)
    witness = {
        **extra,
        "labels": labels,
        "pairings": [list(p) for p in pairings],
        "dim_h_gamma": dim,
        "rl_q": rl_q,
        "hilbert_basis": [list(b) for b in basis],
    }
    if not rep.free:
        witness["relation"] = [list(rep.relation[0]), list(rep.relation[1])]
        return Verdict(EXCLUDED, "NotPolynomial", witness)
    fact = factorization_test(pairings, dim, rl_q, basis)
    if not fact.passed:
        witness["partitions"] = list(fact.failures)
        return Verdict(EXCLUDED, "FactorizationFail", witness)
    witness["partition"] = list(fact.partition)
    return Verdict(INCONCLUSIVE, None, witness)


def check_with_explicit_hgamma(gens: Sequence[GeneratorInfo], hg: HGamma, rl_q: int) -> Verdict:
    """Polynomiality and factorization only, for caller-supplied data.

    The generators' pairing vectors must be taken against ``hg``.
    """
    pairings = [tuple(g.pairing_vector) for g in gens]
    if any(len(p) != hg.dim for p in pairings):
        raise ValueError("pairing vectors do not match dim h_Gamma")
    return _monoid_stages(pairings, [g.label for g in gens], hg.dim, rl_q, {})


def check_half_set(rs: RootSystem, pi1: Iterable[int], half: Iterable[int]) -> Verdict:
    """Run every stage on one half set (reduced first)."""
    p1, hs = _validate_typeC(rs, pi1, half)
    if not hs:
        return Verdict(INTEGRAL_TRIVIALLY, None, {"half_set": []})
    red = reduce_half_set(rs, p1, hs)
    base = {"type": rs.label, "pi1": list(p1), "half_set": list(hs), "reduced": list(red)}
    cr = count_check(rs, p1, red)
    counts = {"rl": cr.rl, "rl_z": cr.rl_z, "dim_h_gamma": cr.dim_h_gamma,
              "s": cr.s, "s_z": cr.s_z, "formula_diff": cr.formula_diff}
    if cr.formula_diff != cr.diff:
        raise AssertionError(f"orbit count {cr.diff} disagrees with the component formula {cr.formula_diff}")
    if cr.stage == "RLEqual" and cr.diff != 0:
        raise AssertionError("h_Gamma vanishes but the reduced index changed")
    if cr.stage:
        return Verdict(EXCLUDED, cr.stage, {**base, "counts": counts})
    tc = typeC_parabolic_generators(rs, p1, red)
    pairings = [g.pairing_vector for g in tc.generators]
    base["h_gamma"] = list(tc.coroot_indices)
    base["counts"] = counts
    return _monoid_stages(list(pairings), [g.label for g in tc.generators], cr.dim_h_gamma, cr.rl, base)


# ---------------------------------------------------------------- witnesses


def reverify(verdict: Verdict | dict) -> bool:
    """Check an exclusion witness from its own data (no recomputation of the pipeline)."""
    v = verdict if isinstance(verdict, Verdict) else Verdict.from_json(verdict)
    w = v.witness
    if v.status != EXCLUDED:
        return v.status in (INTEGRAL_TRIVIALLY, INCONCLUSIVE)
    if v.stage not in STAGES:
        return False
    if v.stage == "RLEqual":
        c = w["counts"]
        return c["dim_h_gamma"] == 0 and c["rl"] == c["rl_z"]
    if v.stage == "CountFail":
        c = w["counts"]
        return c["rl_z"] - c["rl"] < c["dim_h_gamma"]
    pairings = [tuple(p) for p in w["pairings"]]
    problem = MonoidProblem(tuple(pairings))
    basis = [tuple(b) for b in w["hilbert_basis"]]
    if not all(problem.contains(b) and any(b) for b in basis):
        return False
    if v.stage == "NotPolynomial":
        lhs, rhs = w["relation"]
        if lhs == rhs:
            return False
        left = [sum(c * b[j] for c, b in zip(lhs, basis)) for j in range(problem.k)]
        right = [sum(c * b[j] for c, b in zip(rhs, basis)) for j in range(problem.k)]
        return left == right
    if v.stage == "FactorizationFail":
        dim, rl_q, k = w["dim_h_gamma"], w["rl_q"], problem.k
        parts = w["partitions"]
        if k - dim != rl_q:
            return True
        want = [list(q) for q in combinations(range(k), dim)]
        if [p["Q"] for p in parts] != want:
            return False
        for p in parts:
            q = p["Q"]
            if p["reason"] == "pairings of Q are dependent":
                if dim and _linalg.is_independent([pairings[i] for i in q]):
                    return False
                continue
            phat = set(range(k)) - set(q)
            if _violation(p["element"], phat) is None or tuple(p["element"]) not in basis:
                return False
        return True
    return False


def verdict_roundtrip(verdict: Verdict) -> Verdict:
    return Verdict.from_json(json.loads(json.dumps(verdict.to_json())))


# ---------------------------------------------------------------- sweeps


@dataclass(frozen=True)
class CertificationReport:
    type_label: str
    rank: int
    pi1: tuple[int, ...]
    classes: tuple[tuple[int, ...], ...]
    verdicts: tuple[Verdict, ...]

    @property
    def inconclusive(self) -> list[tuple[tuple[int, ...], Verdict]]:
        return [(c, v) for c, v in zip(self.classes, self.verdicts) if v.status == INCONCLUSIVE]

    @property
    def certified(self) -> bool:
        return all(v.status in (EXCLUDED, INTEGRAL_TRIVIALLY) for v in self.verdicts)


def reduced_classes(rs: RootSystem, pi1: Iterable[int]) -> list[tuple[int, ...]]:
    """Distinct nonempty reduced half sets, sorted."""
    p1 = tuple(sorted(set(pi1)))
    n = rs.rank
    out = set()
    for mask in range(1, 1 << (n - 1)):
        hs = [k + 1 for k in range(n - 1) if mask >> k & 1]
        out.add(reduce_half_set(rs, p1, hs))
    return sorted(out)


def _check_task(args) -> Verdict:
    label, rank, p1, hs = args
    return check_half_set(build_root_system(label, rank), p1, hs)


def integrality_sweep(rs: RootSystem, pi1: Iterable[int], jobs: int = 1, max_rank: int | None = None) -> CertificationReport:
    """Check every reduced class of half sets for the parabolic with Levi pi1."""
    guard = max_rank_guard() if max_rank is None else max_rank
    if rs.rank > guard:
        raise ValueError(f"rank {rs.rank} exceeds the sweep guard {guard}")
    p1, _ = _validate_typeC(rs, pi1, [])
    classes = reduced_classes(rs, p1)
    tasks = [(rs.type_label, rs.rank, p1, c) for c in classes]
    if jobs > 1 and len(tasks) > 1:
        with ProcessPoolExecutor(max_workers=jobs) as pool:
            verdicts = list(pool.map(_check_task, tasks))
    else:
        verdicts = [_check_task(t) for t in tasks]
    return CertificationReport(rs.type_label, rs.rank, p1, tuple(classes), tuple(verdicts))


# ---------------------------------------------------------------- type A shortcut


def type_a_shortcut(rs: RootSystem, pi1: Iterable[int], pi2: Iterable[int]) -> Verdict:
    """IntegralTrivially when every component of pi1 and of pi2 is of type A.

    No standing-hypothesis check is made on (pi1, pi2).
    """
    for side in (pi1, pi2):
        for comp in index_components(rs, side):
            letter, _ = component_type(rs, SimpleSystem.from_indices(rs, comp))
            if letter != "A":
                return Verdict(NOT_APPLICABLE, None, {"component": comp, "type": letter})
    return Verdict(INTEGRAL_TRIVIALLY, None, {"reason": "all components of type A"})
