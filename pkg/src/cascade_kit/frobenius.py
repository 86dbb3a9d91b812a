"""The semisimple element h of an adapted pair for a Frobenius biparabolic.

h is stored by its coefficients on the simple coroots; its values on roots
are always recomputed from those coefficients.
"""

from __future__ import annotations

from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Sequence

from . import _linalg
from .biparabolic import (
    Biparabolic,
    index_involution,
    is_frobenius,
    make_biparabolic,
    subset_cascade,
)
from .rootsys import (
    Root,
    RootSystem,
    SimpleSystem,
    build_root_system,
    component_type,
    index_components,
)


@dataclass(frozen=True)
class AdaptedH:
    rs: RootSystem
    coroot_coeffs: tuple[Fraction, ...]

    def __call__(self, gamma: Sequence) -> Fraction:
        cartan = self.rs.cartan
        n = self.rs.rank
        return sum(
            (c * sum(Fraction(gamma[j]) * cartan[i][j] for j in range(n))
             for i, c in enumerate(self.coroot_coeffs) if c),
            Fraction(0),
        )

    @property
    def values_on_pi(self) -> tuple[Fraction, ...]:
        return tuple(self(self.rs.alpha(k)) for k in range(1, self.rs.rank + 1))


def h_from_values(rs: RootSystem, values: Sequence) -> AdaptedH:
    """The unique h with h(alpha_k) = values[k-1]."""
    n = rs.rank
    cart_t = [[rs.cartan[i][j] for i in range(n)] for j in range(n)]
    coeffs = _linalg.solve_unique(cart_t, [Fraction(v) for v in values])
    return AdaptedH(rs, tuple(coeffs))


@dataclass(frozen=True)
class ValueFamily:
    """Affine family of value vectors (h(alpha_1), ..., h(alpha_n))."""

    particular: tuple[Fraction, ...] | None
    kernel: tuple[tuple[Fraction, ...], ...]

    @property
    def consistent(self) -> bool:
        return self.particular is not None

    def determined(self, functional: Sequence) -> Fraction | None:
        """Value of sum_k functional[k] h(alpha_k) if it is constant on the family."""
        if any(sum(f * v for f, v in zip(functional, k)) for k in self.kernel):
            return None
        return sum((Fraction(f) * v for f, v in zip(functional, self.particular)), Fraction(0))


def solve_values(rs: RootSystem, roots: Sequence[Sequence[int]]) -> ValueFamily:
    """All value vectors with h(gamma) = 1 for every gamma in ``roots``."""
    if not roots:
        n = rs.rank
        eye = tuple(tuple(Fraction(int(i == j)) for j in range(n)) for i in range(n))
        return ValueFamily(tuple(Fraction(0) for _ in range(n)), eye)
    part, kernel = _linalg.solve([list(r) for r in roots], [1] * len(roots))
    return ValueFamily(None if part is None else tuple(part), tuple(map(tuple, kernel)))


def even_type_a_count(rs: RootSystem, indices: Iterable[int]) -> int:
    """Number of components of type A_{2m}, m > 0."""
    count = 0
    for comp in index_components(rs, indices):
        letter, r = component_type(rs, SimpleSystem.from_indices(rs, comp))
        if letter == "A" and r % 2 == 0:
            count += 1
    return count


def integrality_bound(bp: Biparabolic) -> int:
    return 1 + max(even_type_a_count(bp.rs, bp.pi1), even_type_a_count(bp.rs, bp.pi2))


@dataclass(frozen=True)
class FrobeniusH:
    h: AdaptedH
    basis: tuple[Root, ...]
    bound: int

    @property
    def values(self) -> tuple[Fraction, ...]:
        return self.h.values_on_pi

    @property
    def max_abs(self) -> Fraction:
        return max(abs(v) for v in self.values)


class NotFrobenius(ValueError):
    pass


def frobenius_h(bp: Biparabolic) -> FrobeniusH:
    """Solve h(beta) = 1 on B = -B_{pi1} u B_{pi2}.

    >>> from cascade_kit.rootsys import build_root_system
    >>> from cascade_kit.biparabolic import make_biparabolic
    >>> rs = build_root_system("G2")
    >>> [int(v) for v in frobenius_h(make_biparabolic(rs, [], [1, 2])).values]
    [1, -1]
    """
    ok, basis = is_frobenius(bp)
    if not ok:
        raise NotFrobenius(f"q({list(bp.pi1)}, {list(bp.pi2)}) is not Frobenius")
    fam = solve_values(bp.rs, basis)
    assert fam.consistent and not fam.kernel
    h = h_from_values(bp.rs, fam.particular)
    return FrobeniusH(h, tuple(basis), integrality_bound(bp))


# ---------------------------------------------------------------- support solver


@dataclass(frozen=True)
class SupportSet:
    roots: tuple[Root, ...]
    cartan_subspace: tuple[tuple[Fraction, ...], ...]

    def spans_dual(self, rs: RootSystem) -> bool:
        """Whether the roots, restricted to the subspace, span its dual."""
        m = _restriction_matrix(rs, self)
        k = len(self.cartan_subspace)
        return k == 0 or (bool(m) and _linalg.rank(m) == k)


def _restriction_matrix(rs: RootSystem, s: SupportSet) -> list[list[Fraction]]:
    return [[AdaptedH(rs, tuple(map(Fraction, v)))(g) for v in s.cartan_subspace] for g in s.roots]


@dataclass(frozen=True)
class SupportSolution:
    kind: str  # "unique", "none" or "family"
    h: AdaptedH | None
    kernel_dim: int = 0


def solve_h_on_support(rs: RootSystem, support: SupportSet) -> SupportSolution:
    """Solve h(gamma) = 1 for gamma in the support, h in the given coroot span."""
    basis = [tuple(map(Fraction, v)) for v in support.cartan_subspace]
    if basis and _linalg.rank(basis) != len(basis):
        raise ValueError("cartan subspace basis is not independent")
    zero = tuple(Fraction(0) for _ in range(rs.rank))
    if not support.roots:
        return SupportSolution("unique" if not basis else "family", AdaptedH(rs, zero), len(basis))
    if not basis:
        return SupportSolution("none", None)
    m = _restriction_matrix(rs, support)
    x, kernel = _linalg.solve(m, [1] * len(m))
    if x is None:
        return SupportSolution("none", None)
    coeffs = tuple(sum((xi * v[i] for xi, v in zip(x, basis)), Fraction(0)) for i in range(rs.rank))
    return SupportSolution("unique" if not kernel else "family", AdaptedH(rs, coeffs), len(kernel))


# ---------------------------------------------------------------- verdicts


@dataclass(frozen=True)
class IntegralityReport:
    integral: bool
    offending_roots: tuple[Root, ...]
    values_on_pi: tuple[Fraction, ...]
    bound: int | None
    within_bound: bool | None


def integrality_verdict(h: AdaptedH, rs: RootSystem | None = None, bound: int | None = None) -> IntegralityReport:
    rs = rs or h.rs
    bad = tuple(g for g in rs.positive_roots if h(g).denominator != 1)
    vals = h.values_on_pi
    within = None if bound is None else all(abs(v) <= bound for v in vals)
    return IntegralityReport(not bad, bad, vals, bound, within)


def roots_of_q(bp: Biparabolic) -> list[Root]:
    """Roots of q(pi1, pi2): positive roots on pi2 and negatives of positive roots on pi1."""
    out = []
    s1, s2 = set(bp.pi1), set(bp.pi2)
    for g in bp.rs.positive_roots:
        support = {k + 1 for k, c in enumerate(g) if c}
        if support <= s2:
            out.append(g)
        if support <= s1:
            out.append(tuple(-c for c in g))
    return out


@dataclass(frozen=True)
class DimensionReport:
    dim_a: int
    dim_a0: int
    dim_dual_minus1: int
    dim_dual_nonneg: int
    dim_dual_neg: int
    dim_dual_interval: int

    @property
    def eigenspace_identity(self) -> bool:
        return self.dim_a0 == self.dim_dual_minus1

    @property
    def half_dimension_identities(self) -> bool:
        # index 0: twice the nonnegative part plus the open interval part is dim a,
        # likewise for the negative part minus the interval part
        return (
            self.dim_a == 2 * self.dim_dual_nonneg + self.dim_dual_interval
            and self.dim_a == 2 * self.dim_dual_neg - self.dim_dual_interval
        )

    @property
    def holds(self) -> bool:
        return self.eigenspace_identity and self.half_dimension_identities


def dimension_identities_check(bp: Biparabolic, h: AdaptedH) -> DimensionReport:
    """Count ad h eigenvalues on q and its dual.

    The root vector of gamma has eigenvalue h(gamma); the matching dual vector
    has eigenvalue -h(gamma). The Cartan part sits at 0 on both sides.
    """
    n = bp.n
    vals = [h(g) for g in roots_of_q(bp)]
    return DimensionReport(
        dim_a=len(vals) + n,
        dim_a0=sum(1 for v in vals if v == 0) + n,
        dim_dual_minus1=sum(1 for v in vals if v == 1),
        dim_dual_nonneg=sum(1 for v in vals if v <= 0) + n,
        dim_dual_neg=sum(1 for v in vals if v > 0),
        dim_dual_interval=sum(1 for v in vals if 0 < v < 1),
    )


# ---------------------------------------------------------------- type A relations


def type_a_relations_hold(bp: Biparabolic, h: AdaptedH) -> list[str]:
    """Check the pair relations on every type A component; return violations.

    For a component of pi2 with involution orbit {a, a'}: a fixed gives
    h(a) = 1, a adjacent to a' gives h(a) + h(a') = 1, otherwise
    h(a) + h(a') = 0. On pi1 the same holds for -h.
    """
    rs = bp.rs
    bad = []
    for sign, side, inv in ((-1, bp.pi1, bp.i1), (1, bp.pi2, bp.i2)):
        for comp in index_components(rs, side):
            if component_type(rs, SimpleSystem.from_indices(rs, comp))[0] != "A":
                continue
            for k in comp:
                k2 = inv[k]
                if k2 < k:
                    continue
                if k2 == k:
                    got, want = sign * h(rs.alpha(k)), 1
                else:
                    got = sign * (h(rs.alpha(k)) + h(rs.alpha(k2)))
                    want = 1 if rs.form(rs.alpha(k), rs.alpha(k2)) != 0 else 0
                if got != want:
                    bad.append(f"component {comp}, orbit ({k},{k2}): {got} != {want}")
    return bad


# ---------------------------------------------------------------- sweeps


@dataclass(frozen=True)
class SweepRow:
    pi1: tuple[int, ...]
    pi2: tuple[int, ...]
    values: tuple[Fraction, ...]
    integral: bool
    bound: int
    within_bound: bool

    @property
    def value_set(self) -> tuple[Fraction, ...]:
        return tuple(sorted(set(self.values)))


def _mask_to_set(mask: int, n: int) -> tuple[int, ...]:
    return tuple(k + 1 for k in range(n) if mask >> k & 1)


def _sweep_chunk(args) -> list[SweepRow]:
    label, rank, mask1 = args
    rs = build_root_system(label, rank)
    n = rs.rank
    full = (1 << n) - 1
    rows = []
    for mask2 in range(1 << n):
        if mask1 | mask2 != full or mask1 & mask2 == full:
            continue
        bp = make_biparabolic(rs, _mask_to_set(mask1, n), _mask_to_set(mask2, n))
        ok, _ = is_frobenius(bp)
        if not ok:
            continue
        fh = frobenius_h(bp)
        rep = integrality_verdict(fh.h, rs, fh.bound)
        rows.append(SweepRow(bp.pi1, bp.pi2, fh.values, rep.integral, fh.bound, bool(rep.within_bound)))
    return rows


SWEEP_MAX_RANK = 9


def frobenius_sweep(rs: RootSystem, jobs: int = 1, max_rank: int = SWEEP_MAX_RANK) -> list[SweepRow]:
    """Every Frobenius q(pi1, pi2) with pi1 u pi2 = pi, ordered by bitmask (pi1, pi2)."""
    if rs.rank > max_rank:
        raise ValueError(f"rank {rs.rank} exceeds the sweep guard {max_rank}")
    tasks = [(rs.type_label, rs.rank, m) for m in range(1 << rs.rank)]
    if jobs > 1:
        with ProcessPoolExecutor(max_workers=jobs) as pool:
            chunks = list(pool.map(_sweep_chunk, tasks))
    else:
        chunks = [_sweep_chunk(t) for t in tasks]
    return [row for chunk in chunks for row in chunk]


@dataclass(frozen=True)
class BorelValues:
    """What h(beta) = 1 on the full cascade pins down when the Borel is not Frobenius."""

    determined: dict[int, Fraction]
    orbit_sums: dict[tuple[int, int], Fraction | None]


def borel_determined_values(rs: RootSystem) -> BorelValues:
    """Single values h(alpha_i) and sums over diagram-involution pairs fixed by the cascade.

    >>> e6 = build_root_system("E6")
    >>> bv = borel_determined_values(e6)
    >>> {i: int(v) for i, v in bv.determined.items()}
    {2: -1, 4: 1}
    """
    full = list(range(1, rs.rank + 1))
    fam = solve_values(rs, subset_cascade(rs, full).ordered_roots)
    inv = index_involution(rs, full)
    det, sums = {}, {}
    for i in full:
        v = fam.determined([int(j == i) for j in full])
        if v is not None:
            det[i] = v
        if i < inv[i]:
            sums[(i, inv[i])] = fam.determined([int(j in (i, inv[i])) for j in full])
    return BorelValues(det, sums)


def two_block_parabolic_values(p: int, q: int) -> tuple[Fraction, ...]:
    """h on pi for the parabolic of sl(p+q) whose Levi has blocks of sizes p and q."""
    rs = build_root_system("A", p + q - 1)
    pi = range(1, rs.rank + 1)
    bp = make_biparabolic(rs, [k for k in pi if k != p], pi)
    return frobenius_h(bp).values
