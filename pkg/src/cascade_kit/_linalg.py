"""Small exact linear algebra over the rationals.

Everything here works on lists of lists of ``Fraction`` (ints are accepted
and promoted). Matrices are row-major. Sizes in this package never exceed
a dozen or so, so plain Gaussian elimination is plenty.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Sequence

Matrix = list[list[Fraction]]


def to_matrix(rows: Sequence[Sequence]) -> Matrix:
    return [[Fraction(x) for x in row] for row in rows]


def transpose(m: Sequence[Sequence]) -> Matrix:
    if not m:
        return []
    return [[Fraction(m[i][j]) for i in range(len(m))] for j in range(len(m[0]))]


def rref(rows: Sequence[Sequence]) -> tuple[Matrix, list[int]]:
    """Reduced row echelon form and the list of pivot columns."""
    m = to_matrix(rows)
    if not m:
        return m, []
    ncols = len(m[0])
    pivots: list[int] = []
    r = 0
    for c in range(ncols):
        pivot = next((i for i in range(r, len(m)) if m[i][c] != 0), None)
        if pivot is None:
            continue
        m[r], m[pivot] = m[pivot], m[r]
        lead = m[r][c]
        m[r] = [x / lead for x in m[r]]
        for i in range(len(m)):
            if i != r and m[i][c] != 0:
                f = m[i][c]
                m[i] = [a - f * b for a, b in zip(m[i], m[r])]
        pivots.append(c)
        r += 1
        if r == len(m):
            break
    return m, pivots


def rank(rows: Sequence[Sequence]) -> int:
    return len(rref(rows)[1])


def nullspace(rows: Sequence[Sequence], ncols: int | None = None) -> Matrix:
    """Basis of {x : rows @ x = 0}."""
    if not rows:
        n = ncols or 0
        return [[Fraction(int(i == j)) for i in range(n)] for j in range(n)]
    m, pivots = rref(rows)
    n = len(m[0])
    free = [c for c in range(n) if c not in pivots]
    basis = []
    for f in free:
        v = [Fraction(0)] * n
        v[f] = Fraction(1)
        for row, p in zip(m, pivots):
            v[p] = -row[f]
        basis.append(v)
    return basis


def solve(a: Sequence[Sequence], b: Sequence) -> tuple[list[Fraction] | None, Matrix]:
    """Solve ``a @ x = b``.

    Returns ``(particular, kernel_basis)``; ``particular`` is None when the
    system is inconsistent. ``a`` needs at least one row.
    """
    ncols = len(a[0])
    aug = [list(row) + [bv] for row, bv in zip(a, b)]
    m, pivots = rref(aug)
    if ncols in pivots:
        return None, nullspace(a)
    x = [Fraction(0)] * ncols
    for row, p in zip(m, pivots):
        x[p] = row[ncols]
    return x, nullspace(a)


def solve_unique(a: Sequence[Sequence], b: Sequence) -> list[Fraction]:
    x, kernel = solve(a, b)
    if x is None or kernel:
        raise ValueError("system has no unique solution")
    return x


def mat_vec(m: Sequence[Sequence], v: Sequence) -> list[Fraction]:
    return [sum((Fraction(a) * b for a, b in zip(row, v)), Fraction(0)) for row in m]


def is_independent(vectors: Sequence[Sequence]) -> bool:
    return rank(vectors) == len(vectors)
