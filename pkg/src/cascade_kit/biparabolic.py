"""Biparabolic subalgebras q(pi1, pi2) given by two sets of simple roots.

Index sets are 1-based Bourbaki labels. The parabolic case is pi2 = pi.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable

from . import _linalg
from .cascade import Cascade, kostant_cascade
from .rootsys import RootSystem, SimpleSystem, diagram_involution, neg

_CASCADE_CACHE: dict = {}
_INVOLUTION_CACHE: dict = {}


class StandingHypothesisError(ValueError):
    pass


def subset_cascade(rs: RootSystem, indices: Iterable[int]) -> Cascade:
    key = (rs.label, frozenset(indices))
    if key not in _CASCADE_CACHE:
        _CASCADE_CACHE[key] = kostant_cascade(rs, SimpleSystem.from_indices(rs, key[1]))
    return _CASCADE_CACHE[key]


def index_involution(rs: RootSystem, indices: Iterable[int]) -> dict[int, int]:
    """Diagram involution of the sub-diagram ``indices``, extended by the identity to pi."""
    key = (rs.label, frozenset(indices))
    if key not in _INVOLUTION_CACHE:
        out = {k: k for k in range(1, rs.rank + 1)}
        if key[1]:
            ss = SimpleSystem.from_indices(rs, key[1])
            for a, b in diagram_involution(rs, ss).items():
                out[a.index(1) + 1] = b.index(1) + 1
        _INVOLUTION_CACHE[key] = out
    return dict(_INVOLUTION_CACHE[key])


def involution_orbits(n: int, *involutions: dict[int, int]) -> list[tuple[int, ...]]:
    """Orbits of the group generated by ``involutions`` on {1..n}, sorted by least element."""
    parent = list(range(n + 1))

    def find(x: int) -> int:
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    for inv in involutions:
        for a, b in inv.items():
            ra, rb = find(a), find(b)
            if ra != rb:
                parent[max(ra, rb)] = min(ra, rb)
    groups: dict[int, list[int]] = {}
    for k in range(1, n + 1):
        groups.setdefault(find(k), []).append(k)
    return sorted((tuple(g) for g in groups.values()), key=lambda g: g[0])


@dataclass(frozen=True)
class Biparabolic:
    rs: RootSystem
    pi1: tuple[int, ...]
    pi2: tuple[int, ...]
    i1: dict
    i2: dict
    orbits: tuple[tuple[int, ...], ...]

    @property
    def n(self) -> int:
        return self.rs.rank

    @property
    def is_parabolic(self) -> bool:
        return len(self.pi2) == self.n

    @property
    def pi_cap(self) -> tuple[int, ...]:
        return tuple(sorted(set(self.pi1) & set(self.pi2)))

    @property
    def pi_cup(self) -> tuple[int, ...]:
        """Complement of pi1 & pi2 in pi (roots lying in exactly one of the two)."""
        return tuple(k for k in range(1, self.n + 1) if k not in self.pi_cap)

    @property
    def orbits_backed(self) -> bool:
        """Whether the orbits index semi-invariant generators (parabolic, type A or C)."""
        return self.is_parabolic and self.rs.type_label in ("A", "C")


def make_biparabolic(rs: RootSystem, pi1: Iterable[int], pi2: Iterable[int]) -> Biparabolic:
    p1 = tuple(sorted(set(pi1)))
    p2 = tuple(sorted(set(pi2)))
    n = rs.rank
    for k in p1 + p2:
        if not 1 <= k <= n:
            raise ValueError(f"index {k} outside [1, {n}]")
    if set(p1) | set(p2) != set(range(1, n + 1)):
        raise StandingHypothesisError("pi1 and pi2 must together cover pi")
    if set(p1) & set(p2) == set(range(1, n + 1)):
        raise StandingHypothesisError("pi1 and pi2 cannot both equal pi")
    i1 = index_involution(rs, p1)
    i2 = index_involution(rs, p2)
    return Biparabolic(rs, p1, p2, i1, i2, tuple(involution_orbits(n, i1, i2)))


def orbit_decomposition(bp: Biparabolic) -> list[tuple[int, ...]]:
    return list(bp.orbits)


def frobenius_basis(bp: Biparabolic) -> list[tuple[int, ...]]:
    """B = -B_{pi1} together with B_{pi2}."""
    b1 = subset_cascade(bp.rs, bp.pi1).ordered_roots
    b2 = subset_cascade(bp.rs, bp.pi2).ordered_roots
    return [neg(b) for b in b1] + list(b2)


def is_frobenius(bp: Biparabolic) -> tuple[bool, list[tuple[int, ...]]]:
    """(True, B) iff B has |pi| elements and is linearly independent."""
    basis = frobenius_basis(bp)
    ok = len(basis) == bp.n and _linalg.rank(basis) == bp.n
    return ok, basis


def orbit_frobenius_criterion(bp: Biparabolic) -> bool:
    """No orbit inside pi1 & pi2 and every orbit meets the complement exactly once."""
    cap = set(bp.pi_cap)
    for orb in bp.orbits:
        outside = [k for k in orb if k not in cap]
        if len(outside) != 1:
            return False
    return True


def reduced_index_typeC_parabolic(bp: Biparabolic) -> int:
    if bp.rs.type_label != "C" or not bp.is_parabolic:
        raise ValueError("reduced index is only available for type C parabolics")
    return len(bp.orbits)
