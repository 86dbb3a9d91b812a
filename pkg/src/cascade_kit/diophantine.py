"""Hilbert bases of {m in N^k : sum m_i a_i = 0} and the freeness test.

The solver is the Contejean-Devie completion: grow candidates one unit at a
time, only in directions that move the residual sum back towards zero, and
drop any candidate dominating an already found solution.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from itertools import combinations_with_replacement
from typing import Sequence

from . import _linalg

DEFAULT_BUDGET = 64


@dataclass(frozen=True)
class MonoidProblem:
    vectors: tuple[tuple[int, ...], ...]

    def __post_init__(self):
        if not self.vectors:
            raise ValueError("need at least one vector")
        d = len(self.vectors[0])
        if any(len(v) != d for v in self.vectors):
            raise ValueError("vectors must share one dimension")
        object.__setattr__(self, "vectors", tuple(tuple(int(x) for x in v) for v in self.vectors))

    @property
    def k(self) -> int:
        return len(self.vectors)

    @property
    def d(self) -> int:
        return len(self.vectors[0])

    def residual(self, m: Sequence[int]) -> tuple[int, ...]:
        return tuple(sum(c * v[j] for c, v in zip(m, self.vectors)) for j in range(self.d))

    def contains(self, m: Sequence[int]) -> bool:
        return all(c >= 0 for c in m) and not any(self.residual(m))


@dataclass(frozen=True)
class BudgetExceeded:
    budget: int
    partial: tuple[tuple[int, ...], ...]

    def __bool__(self) -> bool:
        return False


def _dominates(x: Sequence[int], y: Sequence[int]) -> bool:
    return all(a >= b for a, b in zip(x, y))


def hilbert_basis(problem: MonoidProblem, budget: int = DEFAULT_BUDGET):
    """Minimal nonzero solutions, sorted lexicographically.

    Returns ``BudgetExceeded`` if some candidate would need total degree
    above ``budget``; nothing is silently truncated.

    >>> hilbert_basis(MonoidProblem(((2,), (-1,), (-2,))))
    [(1, 0, 1), (1, 2, 0)]
    """
    k = problem.k
    vecs = problem.vectors
    basis: list[tuple[int, ...]] = []
    frontier = {tuple(int(i == j) for i in range(k)) for j in range(k)}
    degree = 1
    while frontier:
        if degree > budget:
            return BudgetExceeded(budget, tuple(sorted(basis)))
        nxt = set()
        found = []
        for x in sorted(frontier):
            r = problem.residual(x)
            if not any(r):
                found.append(x)
                continue
            for j in range(k):
                if sum(a * b for a, b in zip(r, vecs[j])) < 0:
                    y = list(x)
                    y[j] += 1
                    nxt.add(tuple(y))
        basis.extend(found)
        frontier = {y for y in nxt if not any(_dominates(y, b) for b in basis)}
        degree += 1
    return sorted(basis)


@dataclass(frozen=True)
class FreenessReport:
    free: bool
    basis: tuple[tuple[int, ...], ...]
    basis_rank: int
    lattice_rank: int
    relation: tuple[tuple[int, ...], tuple[int, ...]] | None
    search_relation: tuple[tuple[int, ...], tuple[int, ...]] | None = field(default=None)


def _kernel_relation(basis: Sequence[Sequence[int]]):
    """An integer linear relation among basis vectors, split as (lhs, rhs) coefficient vectors."""
    if not basis:
        return None
    cols = _linalg.transpose(basis)  # rows: coordinates, columns: basis elements
    ker = _linalg.nullspace(cols, len(basis))
    if not ker:
        return None
    v = ker[0]
    den = 1
    for x in v:
        den = den * x.denominator // _gcd(den, x.denominator)
    ints = [int(x * den) for x in v]
    lhs = tuple(max(c, 0) for c in ints)
    rhs = tuple(max(-c, 0) for c in ints)
    return lhs, rhs


def _gcd(a: int, b: int) -> int:
    while b:
        a, b = b, a % b
    return abs(a)


def _search_relation(basis: Sequence[Sequence[int]], max_degree: int):
    """Two distinct multisets of basis elements with equal sum, of exponent degree <= max_degree."""
    seen: dict[tuple[int, ...], tuple[int, ...]] = {}
    degs = [sum(b) for b in basis]
    m = len(basis)
    for size in range(1, max_degree + 1):
        for combo in combinations_with_replacement(range(m), size):
            if sum(degs[i] for i in combo) > max_degree:
                continue
            total = tuple(sum(basis[i][j] for i in combo) for j in range(len(basis[0])))
            coeffs = tuple(combo.count(i) for i in range(m))
            if total in seen and seen[total] != coeffs:
                return seen[total], coeffs
            seen.setdefault(total, coeffs)
    return None


def is_free_monoid(problem: MonoidProblem, basis: Sequence[Sequence[int]] | None = None) -> FreenessReport:
    """Whether the solution monoid is free on its Hilbert basis.

    Two routes are computed: linear independence of the basis (a relation
    among minimal generators exists iff they are dependent), and a direct
    scan for two monomials in the basis with the same exponent vector up to
    twice the largest basis degree. Disagreement raises.

    >>> is_free_monoid(MonoidProblem(((2,), (-2,), (1,), (1,), (-1,)))).free
    False
    """
    if basis is None:
        basis = hilbert_basis(problem)
    if isinstance(basis, BudgetExceeded):
        raise ValueError(f"Hilbert basis exceeded the degree budget {basis.budget}")
    basis = [tuple(b) for b in basis]
    brank = _linalg.rank(basis) if basis else 0
    lattice_rank = problem.k - _linalg.rank(problem.vectors) if problem.d else problem.k
    relation = _kernel_relation(basis)
    free = relation is None
    maxdeg = max((sum(b) for b in basis), default=0)
    found = _search_relation(basis, 2 * maxdeg) if basis else None
    if (found is None) != free:
        raise AssertionError(
            f"freeness routes disagree: independence says free={free}, scan found {found}")
    return FreenessReport(free, tuple(basis), brank, lattice_rank, relation, found)


def monomial(labels: Sequence[str], exponents: Sequence[int]) -> str:
    """Render an exponent vector as a product, e.g. p1p2^2."""
    parts = []
    for lab, e in zip(labels, exponents):
        if e == 1:
            parts.append(lab)
        elif e > 1:
            parts.append(f"{lab}^{e}")
    return "".join(parts) or "1"
