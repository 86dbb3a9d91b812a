"""Root systems of the simple Lie algebras in Bourbaki numbering.

Roots are integer tuples over the simple-root basis, weights are tuples of
``Fraction`` over the same basis. Index sets handed in by users (``pi1``,
half sets, ...) are 1-based Bourbaki labels; vectors are 0-based tuples.

Normalization: in every type the shortest simple root has squared length 2,
so the Gram matrix is integral. Coroot pairings do not depend on this choice.

>>> rs = build_root_system("C", 3)
>>> len(rs.positive_roots)
9
>>> rs.coroot_pairing(rs.alpha(2), rs.alpha(3))
Fraction(-2, 1)
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from functools import cached_property
from typing import Iterable, Sequence

from . import _linalg

Root = tuple[int, ...]
Weight = tuple[Fraction, ...]

EXCEPTIONAL_RANK = {"E6": 6, "E7": 7, "E8": 8, "F4": 4, "G2": 2}
MIN_RANK = {"A": 1, "B": 2, "C": 2, "D": 4}


class InvalidRootSystem(ValueError):
    pass


def _diagram(type_label: str, n: int) -> tuple[list[int], list[tuple[int, int]]]:
    """Half squared lengths d_i and the edges (0-based) of the Dynkin diagram."""
    chain = [(i, i + 1) for i in range(n - 1)]
    if type_label == "A":
        return [1] * n, chain
    if type_label == "B":
        return [2] * (n - 1) + [1], chain
    if type_label == "C":
        return [1] * (n - 1) + [2], chain
    if type_label == "D":
        return [1] * n, [(i, i + 1) for i in range(n - 2)] + [(n - 3, n - 1)]
    if type_label in ("E6", "E7", "E8"):
        edges = [(0, 2), (1, 3)] + [(i, i + 1) for i in range(2, n - 1)]
        return [1] * n, edges
    if type_label == "F4":
        return [2, 2, 1, 1], chain
    if type_label == "G2":
        return [1, 3], chain
    raise InvalidRootSystem(f"unknown type {type_label!r}")


def expected_positive_root_count(type_label: str, n: int) -> int:
    return {
        "A": n * (n + 1) // 2,
        "B": n * n,
        "C": n * n,
        "D": n * (n - 1),
        "E6": 36,
        "E7": 63,
        "E8": 120,
        "F4": 24,
        "G2": 6,
    }[type_label]


def positive_roots_from_cartan(cartan: Sequence[Sequence[int]]) -> list[Root]:
    """All positive roots of the abstract root system with this Cartan matrix.

    ``cartan[i][j]`` is the pairing of the j-th simple root with the i-th
    simple coroot. Breadth-first closure of the simple roots under simple
    reflections, discarding negative images.
    """
    n = len(cartan)
    simple = [tuple(int(i == j) for j in range(n)) for i in range(n)]
    seen = set(simple)
    frontier = list(simple)
    while frontier:
        nxt = []
        for c in frontier:
            for i in range(n):
                k = sum(c[j] * cartan[i][j] for j in range(n))
                if k == 0:
                    continue
                img = tuple(c[j] - (k if j == i else 0) for j in range(n))
                if any(x < 0 for x in img) or img in seen:
                    continue
                seen.add(img)
                nxt.append(img)
        frontier = nxt
    return sorted(seen)


@dataclass(frozen=True)
class RootSystem:
    type_label: str
    rank: int
    cartan: tuple[tuple[int, ...], ...]
    sym_diag: tuple[int, ...]
    positive_roots: tuple[Root, ...] = field(repr=False)

    @property
    def label(self) -> str:
        if self.type_label in EXCEPTIONAL_RANK:
            return self.type_label
        return f"{self.type_label}{self.rank}"

    @cached_property
    def gram(self) -> tuple[tuple[int, ...], ...]:
        n = self.rank
        return tuple(
            tuple(self.sym_diag[i] * self.cartan[i][j] for j in range(n)) for i in range(n)
        )

    @cached_property
    def _root_set(self) -> frozenset[Root]:
        neg = (tuple(-x for x in r) for r in self.positive_roots)
        return frozenset(self.positive_roots).union(neg)

    @cached_property
    def highest_root(self) -> Root:
        return max(self.positive_roots, key=lambda r: (sum(r), r))

    def alpha(self, k: int) -> Root:
        """Simple root with Bourbaki label ``k`` (1-based)."""
        if not 1 <= k <= self.rank:
            raise IndexError(f"simple root index {k} outside [1, {self.rank}]")
        return tuple(int(j == k - 1) for j in range(self.rank))

    def simple_roots(self) -> list[Root]:
        return [self.alpha(k) for k in range(1, self.rank + 1)]

    def is_root(self, v: Sequence) -> bool:
        return tuple(v) in self._root_set

    def form(self, x: Sequence, y: Sequence) -> Fraction:
        g = self.gram
        n = self.rank
        total = Fraction(0)
        for i in range(n):
            if x[i] == 0:
                continue
            row = g[i]
            total += Fraction(x[i]) * sum(Fraction(row[j]) * y[j] for j in range(n) if y[j])
        return total

    def coroot_pairing(self, gamma: Sequence[int], lam: Sequence) -> Fraction:
        """gamma^vee(lam) = 2 (gamma, lam) / (gamma, gamma)."""
        if not self.is_root(gamma):
            raise ValueError(f"{tuple(gamma)} is not a root of {self.label}")
        return 2 * self.form(gamma, lam) / self.form(gamma, gamma)

    def reflect(self, gamma: Sequence[int], lam: Sequence) -> tuple:
        k = self.coroot_pairing(gamma, lam)
        out = tuple(Fraction(a) - k * b for a, b in zip(lam, gamma))
        if all(x.denominator == 1 for x in out):
            return tuple(int(x) for x in out)
        return out

    def coroot_values(self, coroot_coeffs: Sequence, lam: Sequence) -> Fraction:
        """Evaluate sum_i c_i alpha_i^vee on ``lam``."""
        return sum(
            (Fraction(c) * self.coroot_pairing(self.alpha(i + 1), lam)
             for i, c in enumerate(coroot_coeffs) if c),
            Fraction(0),
        )


def build_root_system(type_label: str, rank: int | None = None) -> RootSystem:
    """Construct the root system ``type_label`` of the given rank.

    Exceptional types may omit the rank. Raises ``InvalidRootSystem`` for
    illegal combinations such as ``("D", 3)``.
    """
    type_label = type_label.upper()
    if type_label in EXCEPTIONAL_RANK:
        fixed = EXCEPTIONAL_RANK[type_label]
        if rank is not None and rank != fixed:
            raise InvalidRootSystem(f"{type_label} has rank {fixed}, not {rank}")
        rank = fixed
    elif type_label in MIN_RANK:
        if rank is None or rank < MIN_RANK[type_label]:
            raise InvalidRootSystem(
                f"type {type_label} needs rank >= {MIN_RANK[type_label]}, got {rank}"
            )
    else:
        raise InvalidRootSystem(f"unknown type {type_label!r}")

    d, edges = _diagram(type_label, rank)
    gram = [[0] * rank for _ in range(rank)]
    for i in range(rank):
        gram[i][i] = 2 * d[i]
    for i, j in edges:
        gram[i][j] = gram[j][i] = -max(d[i], d[j])
    cartan = tuple(tuple(2 * gram[i][j] // gram[i][i] for j in range(rank)) for i in range(rank))
    roots = positive_roots_from_cartan(cartan)
    if len(roots) != expected_positive_root_count(type_label, rank):
        raise AssertionError(f"root enumeration failed for {type_label}{rank}")
    return RootSystem(type_label, rank, cartan, tuple(d), tuple(roots))


def parse_type(text: str) -> tuple[str, int | None]:
    """Split labels such as ``"C6"``, ``"E7"`` or ``"C"``."""
    t = text.strip().upper()
    if t in EXCEPTIONAL_RANK:
        return t, EXCEPTIONAL_RANK[t]
    if t[:1] in MIN_RANK:
        rest = t[1:]
        return t[:1], int(rest) if rest else None
    raise InvalidRootSystem(f"cannot parse type label {text!r}")


def height(root: Sequence[int]) -> int:
    return sum(root)


def add(*vs: Sequence) -> tuple:
    return tuple(sum(col) for col in zip(*vs))


def scale(c, v: Sequence) -> tuple:
    return tuple(c * x for x in v)


def neg(v: Sequence) -> tuple:
    return tuple(-x for x in v)


def is_positive(v: Sequence) -> bool:
    return any(v) and all(x >= 0 for x in v)


def segment(rs: RootSystem, i: int, j: int) -> Root:
    """s[i, j] = alpha_i + ... + alpha_j (1-based, inclusive)."""
    return tuple(int(i - 1 <= k <= j - 1) for k in range(rs.rank))


class SimpleSystem:
    """An ordered set of roots forming a base of the root subsystem they generate.

    Elements must pair non-positively with each other and be linearly
    independent. They may be non-simple ambient roots.
    """

    def __init__(self, rs: RootSystem, elements: Iterable[Sequence[int]]):
        elems = tuple(tuple(int(x) for x in e) for e in elements)
        for e in elems:
            if not rs.is_root(e):
                raise ValueError(f"{e} is not a root of {rs.label}")
        if len(set(elems)) != len(elems):
            raise ValueError("repeated element in simple system")
        for a in range(len(elems)):
            for b in range(a + 1, len(elems)):
                if rs.form(elems[a], elems[b]) > 0:
                    raise ValueError(f"{elems[a]} and {elems[b]} pair positively")
        if elems and _linalg.rank(elems) != len(elems):
            raise ValueError("elements are linearly dependent")
        self.rs = rs
        self.elements = elems

    @classmethod
    def from_indices(cls, rs: RootSystem, indices: Iterable[int]) -> "SimpleSystem":
        return cls(rs, [rs.alpha(k) for k in sorted(indices)])

    def __len__(self) -> int:
        return len(self.elements)

    def __iter__(self):
        return iter(self.elements)

    def __contains__(self, root) -> bool:
        return tuple(root) in self.elements

    def __eq__(self, other) -> bool:
        return isinstance(other, SimpleSystem) and set(self.elements) == set(other.elements)

    def __hash__(self) -> int:
        return hash(frozenset(self.elements))

    def __repr__(self) -> str:
        return f"SimpleSystem({self.rs.label}, {list(self.elements)})"

    @cached_property
    def cartan(self) -> tuple[tuple[int, ...], ...]:
        rs = self.rs
        out = []
        for a in self.elements:
            row = []
            for b in self.elements:
                v = rs.coroot_pairing(a, b)
                assert v.denominator == 1
                row.append(int(v))
            out.append(tuple(row))
        return tuple(out)

    @cached_property
    def positive_roots(self) -> tuple[Root, ...]:
        """Positive roots of the subsystem, in ambient coordinates."""
        out = []
        for c in positive_roots_from_cartan(self.cartan):
            v = add(*(scale(k, e) for k, e in zip(c, self.elements)))
            assert self.rs.is_root(v), "subsystem root outside the ambient system"
            out.append(v)
        return tuple(out)

    def gram_is_positive_definite(self) -> bool:
        """Sylvester's criterion on the leading minors of the Gram matrix."""
        g = [[self.rs.form(a, b) for b in self.elements] for a in self.elements]
        for k in range(1, len(g) + 1):
            if _det([row[:k] for row in g[:k]]) <= 0:
                return False
        return True


def _det(m: list[list[Fraction]]) -> Fraction:
    a = [list(map(Fraction, row)) for row in m]
    det = Fraction(1)
    n = len(a)
    for c in range(n):
        p = next((i for i in range(c, n) if a[i][c] != 0), None)
        if p is None:
            return Fraction(0)
        if p != c:
            a[c], a[p] = a[p], a[c]
            det = -det
        det *= a[c][c]
        for i in range(c + 1, n):
            f = a[i][c] / a[c][c]
            a[i] = [x - f * y for x, y in zip(a[i], a[c])]
    return det


def connected_components(rs: RootSystem, roots: Sequence[Sequence[int]]) -> list[list[Root]]:
    """Blocks of ``roots`` under the relation (a, b) != 0, in order of first appearance."""
    roots = [tuple(r) for r in roots]
    unseen = list(range(len(roots)))
    comps = []
    while unseen:
        start = unseen.pop(0)
        block = [start]
        stack = [start]
        while stack:
            a = stack.pop()
            for b in list(unseen):
                if rs.form(roots[a], roots[b]) != 0:
                    unseen.remove(b)
                    block.append(b)
                    stack.append(b)
        comps.append([roots[k] for k in sorted(block)])
    return comps


def index_components(rs: RootSystem, indices: Iterable[int]) -> list[list[int]]:
    """Connected components of a set of simple-root labels, each sorted."""
    idx = sorted(set(indices))
    comps = connected_components(rs, [rs.alpha(k) for k in idx])
    return [[r.index(1) + 1 for r in comp] for comp in comps]


def component_type(rs: RootSystem, ss: SimpleSystem) -> tuple[str, int]:
    """Classify a connected simple system as (letter, rank).

    Rank-2 doubly laced systems are reported as ``("B", 2)``.
    """
    n = len(ss)
    count = len(ss.positive_roots)
    lengths = {rs.form(e, e) for e in ss.elements}
    if len(lengths) == 1:
        if count == n * (n + 1) // 2:
            return "A", n
        if n == 6 and count == 36:
            return "E", 6
        if n == 7 and count == 63:
            return "E", 7
        if n == 8 and count == 120:
            return "E", 8
        return "D", n
    if n == 2 and count == 6:
        return "G", 2
    if n == 4 and count == 24:
        return "F", 4
    if n == 2:
        return "B", 2
    long_sq = max(lengths)
    n_long = sum(1 for e in ss.elements if rs.form(e, e) == long_sq)
    return ("C", n) if n_long == 1 else ("B", n)


def diagram_involution(rs: RootSystem, ss: SimpleSystem) -> dict[Root, Root]:
    """The involution -w of ``ss``, w the product of cascade reflections.

    >>> rs = build_root_system("A", 3)
    >>> inv = diagram_involution(rs, SimpleSystem.from_indices(rs, [1, 2, 3]))
    >>> inv[rs.alpha(1)] == rs.alpha(3)
    True
    """
    from .cascade import kostant_cascade

    casc = kostant_cascade(rs, ss).ordered_roots
    out = {}
    for a in ss.elements:
        v = a
        for b in casc:
            v = rs.reflect(b, v)
        img = tuple(-int(x) for x in v)
        if img not in ss.elements:
            raise AssertionError(f"-w({a}) = {img} not in the simple system")
        out[a] = img
    return out
