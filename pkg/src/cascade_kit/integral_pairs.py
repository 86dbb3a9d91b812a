"""Half sets and the integral simple systems pi^Z in classical types.

A half set lists the simple roots on which h takes a value in 1/2 + Z. The
roots with integral h-value form a subsystem; when it has full rank, its
simple system pi^Z (chosen inside N.pi) is computed here from closed
formulas, and independently by brute force from the extremal elements.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from itertools import product
from typing import Iterable, Sequence

from .cascade import kostant_cascade
from .rootsys import (
    Root,
    RootSystem,
    SimpleSystem,
    add,
    connected_components,
    index_components,
    segment,
)


class Inadmissible:
    """Marker value: no regular integral pair exists for this half set."""

    def __init__(self, reason: str):
        self.reason = reason

    def __repr__(self) -> str:
        return f"Inadmissible({self.reason!r})"

    def __bool__(self) -> bool:
        return False


# ---------------------------------------------------------------- epsilon basis


def epsilon_simple_roots(rs: RootSystem) -> list[list[int]]:
    """Simple roots of B_n, C_n, D_n in the standard orthonormal basis."""
    n, t = rs.rank, rs.type_label
    rows = []
    for i in range(n - 1):
        v = [0] * n
        v[i], v[i + 1] = 1, -1
        rows.append(v)
    last = [0] * n
    if t == "B":
        last[n - 1] = 1
    elif t == "C":
        last[n - 1] = 2
    elif t == "D":
        last[n - 2] = last[n - 1] = 1
    else:
        raise ValueError("epsilon coordinates only for types B, C, D")
    rows.append(last)
    return rows


def from_epsilon(rs: RootSystem, eps: Sequence) -> tuple[Fraction, ...]:
    """Simple-root coordinates of a vector given in the epsilon basis."""
    from . import _linalg

    simple = epsilon_simple_roots(rs)
    cols = [[simple[j][i] for j in range(rs.rank)] for i in range(rs.rank)]
    return tuple(_linalg.solve_unique(cols, eps))


def eps_root(rs: RootSystem, terms: dict[int, int]) -> Root:
    """Root sum_k c_k eps_k from 1-based ``terms``, as an integer root vector."""
    eps = [0] * rs.rank
    for k, c in terms.items():
        eps[k - 1] += c
    v = from_epsilon(rs, eps)
    root = tuple(int(x) for x in v)
    assert all(x.denominator == 1 for x in v) and rs.is_root(root), (terms, v)
    return root


def long_cascade_root(rs: RootSystem, i: int) -> Root:
    """beta_i = 2 eps_i = 2 alpha_i + ... + 2 alpha_{n-1} + alpha_n in type C."""
    return eps_root(rs, {i: 2})


# ---------------------------------------------------------------- brute force


def half_sum_even(root: Sequence[int], half: Iterable[int]) -> bool:
    return sum(root[k - 1] for k in half) % 2 == 0


def integral_positive_roots(rs: RootSystem, half: Iterable[int]) -> list[Root]:
    """Positive roots with integral h-value when h is in 1/2 + Z exactly on ``half``."""
    half = list(half)
    return [g for g in rs.positive_roots if half_sum_even(g, half)]


def extremal_integral_roots(rs: RootSystem, half: Iterable[int]) -> list[Root]:
    """Integral positive roots that are not a sum of two integral positive roots."""
    roots = integral_positive_roots(rs, half)
    pool = set(roots)
    out = []
    for g in roots:
        if not any(tuple(a - b for a, b in zip(g, x)) in pool for x in roots if x != g):
            out.append(g)
    return out


# ---------------------------------------------------------------- closed formulas


def _check_half(rs: RootSystem, half: Iterable[int]) -> list[int]:
    hs = sorted(set(half))
    for k in hs:
        if not 1 <= k <= rs.rank:
            raise ValueError(f"half set index {k} outside [1, {rs.rank}]")
    return hs


def _sum_extra_root(rs: RootSystem, hs: list[int]) -> Root | Inadmissible:
    """The extremal eps_i + eps_j (j = i_r) completing pi^Z in types B and D."""
    r = len(hs)
    j = hs[-1]
    if j - 1 >= 1 and j - 1 not in hs:
        i = j - 1
    elif r >= 3 and hs[-2] == j - 1:
        i = hs[-3]
    else:
        return Inadmissible(f"no extremal eps_i + eps_{j} for half set {hs}")
    return eps_root(rs, {i: 1, j: 1})


def compute_pi_z(rs: RootSystem, half: Iterable[int]) -> SimpleSystem | Inadmissible:
    """pi^Z for a half set, or ``Inadmissible`` when it cannot have full rank.

    >>> from cascade_kit.rootsys import build_root_system
    >>> rs = build_root_system("C", 3)
    >>> compute_pi_z(rs, [1]).elements
    ((2, 2, 1), (0, 1, 0), (0, 0, 1))
    """
    hs = _check_half(rs, half)
    n, t = rs.rank, rs.type_label
    pi = list(range(1, n + 1))
    if not hs:
        return SimpleSystem.from_indices(rs, pi)
    if t == "A":
        return Inadmissible("in type A only the empty half set has full rank")
    if t == "B" and n == 2:
        ext = extremal_integral_roots(rs, hs)
        if len(ext) < n:
            return Inadmissible("integral subsystem has smaller rank")
        return SimpleSystem(rs, sorted(ext, key=lambda g: (g.index(next(x for x in g if x)), g)))
    if t not in ("B", "C", "D"):
        raise ValueError("closed formulas only for classical types")

    rest = [rs.alpha(k) for k in pi if k not in hs]
    if t == "D" and (n - 1 in hs) != (n in hs):
        return Inadmissible("exactly one of the fork roots is a half root")
    if t == "D" and n - 1 in hs:
        # both fork roots are half roots
        # the integral roots split into two D-type blocks, one holding eps_n
        # and one holding eps_{n-1}; each needs a second member
        if len(hs) == 2:
            return Inadmissible("eps_n is alone in its block")
        i0 = hs[-3]
        if n - 2 not in hs:
            b = n - 2
        elif len(hs) >= 4:
            b = hs[-4]
        else:
            return Inadmissible("eps_{n-1} is alone in its block")
        gammas = [segment(rs, hs[j], hs[j + 1]) for j in range(len(hs) - 2)]
        gammas.append(add(segment(rs, i0, n - 2), rs.alpha(n)))
        extra = eps_root(rs, {b: 1, n - 1: 1})
    else:
        gammas = [segment(rs, hs[j], hs[j + 1]) for j in range(len(hs) - 1)]
        if t == "C":
            if hs[-1] == n:
                return Inadmissible("alpha_n cannot be a half root in type C")
            extra = long_cascade_root(rs, hs[-1])
        else:
            extra = _sum_extra_root(rs, hs)
            if isinstance(extra, Inadmissible):
                return extra
    elems = gammas + rest + [extra]
    elems.sort(key=lambda g: (_start(g), g))
    return SimpleSystem(rs, elems)


def _start(root: Sequence[int]) -> int:
    """1-based index of the first nonzero coefficient."""
    return next(k for k, c in enumerate(root) if c) + 1


# ---------------------------------------------------------------- type C structure


def split_indices(n: int, half: Iterable[int]) -> tuple[list[int], list[int]]:
    """The left/right partition of [1, n] cut at the half indices.

    Alternating runs (i_{2j}, i_{2j+1}] go left and (i_{2j+1}, i_{2j+2}] go
    right, with i_0 = 0 and i_{r+1} = n.
    """
    cuts = [0] + sorted(half) + [n]
    left, right = [], []
    for j in range(len(cuts) - 1):
        block = list(range(cuts[j] + 1, cuts[j + 1] + 1))
        (left if j % 2 == 0 else right).extend(block)
    return left, right


def side_of(n: int, half: Iterable[int], k: int) -> str:
    left, _ = split_indices(n, half)
    return "left" if k in left else "right"


def element_for_index(rs: RootSystem, half: Iterable[int], k: int) -> Root:
    """The element of pi^Z (type C) whose support starts at index k."""
    hs = sorted(half)
    if k not in hs:
        return rs.alpha(k)
    pos = hs.index(k)
    if pos + 1 < len(hs):
        return segment(rs, k, hs[pos + 1])
    return long_cascade_root(rs, k)


def cascade_roots_C(rs: RootSystem) -> list[Root]:
    return [long_cascade_root(rs, i) for i in range(1, rs.rank + 1)]


@dataclass(frozen=True)
class SplitI:
    left: tuple[int, ...]
    right: tuple[int, ...]
    left_cascade: tuple[Root, ...]
    right_cascade: tuple[Root, ...]


def split_I(rs: RootSystem, half: Iterable[int]) -> SplitI:
    """Index partition and the cascades of both components of pi^Z.

    The cascades are computed by recursion on each component and checked
    against {beta_t : t in the matching index set}.
    """
    if rs.type_label != "C":
        raise ValueError("split_I is for type C")
    hs = _check_half(rs, half)
    left, right = split_indices(rs.rank, hs)
    pz = compute_pi_z(rs, hs)
    if isinstance(pz, Inadmissible):
        raise ValueError(pz.reason)
    pieces = {"left": [], "right": []}
    for g in pz.elements:
        pieces[side_of(rs.rank, hs, _start(g))].append(g)
    casc = {}
    for side, elems in pieces.items():
        casc[side] = kostant_cascade(rs, SimpleSystem(rs, elems)).ordered_roots if elems else ()
    betas = cascade_roots_C(rs)
    want_l = {betas[t - 1] for t in left}
    want_r = {betas[t - 1] for t in right}
    if set(casc["left"]) != want_l or set(casc["right"]) != want_r:
        raise AssertionError("component cascades disagree with the index partition")
    return SplitI(tuple(left), tuple(right), tuple(casc["left"]), tuple(casc["right"]))


# ---------------------------------------------------------------- reduction


def _x_vector(n: int, half: Iterable[int]) -> list[int]:
    """0/1 classes of h(eps_k) mod 1 (1 meaning 1/2), normalized x_1 = 0."""
    hs = set(half)
    x = [0]
    for k in range(1, n):
        x.append(x[-1] ^ (1 if k in hs else 0))
    return x


def _half_from_x(x: Sequence[int]) -> tuple[int, ...]:
    return tuple(k + 1 for k in range(len(x) - 1) if x[k] != x[k + 1])


def levi_blocks(rs: RootSystem, pi1: Iterable[int]) -> list[list[int]]:
    """Blocks of epsilon indices permuted by the Weyl group of pi1 (type C).

    A type A component [l, k] moves eps_l .. eps_{k+1}; the component
    containing alpha_n moves eps_l .. eps_n (sign changes are invisible mod 1).
    """
    n = rs.rank
    blocks = []
    for comp in index_components(rs, pi1):
        lo, hi = comp[0], comp[-1]
        blocks.append(list(range(lo, n + 1)) if hi == n else list(range(lo, hi + 2)))
    return blocks


def _block_arrangements(x: Sequence[int], blocks: list[list[int]]):
    """Every x' with each block sorted up or down, keeping block counts."""
    choices = []
    for b in blocks:
        ones = sum(x[k - 1] for k in b)
        up = [0] * (len(b) - ones) + [1] * ones
        choices.append((up, up[::-1]))
    for pick in product(*choices):
        y = list(x)
        for b, vals in zip(blocks, pick):
            for k, v in zip(b, vals):
                y[k - 1] = v
        yield y


def reduce_half_set(rs: RootSystem, pi1: Iterable[int], half: Iterable[int]) -> tuple[int, ...]:
    """Canonical representative of a half set under the Weyl group of pi1.

    Each block of epsilon coordinates moved by a component of pi1 is sorted,
    which leaves at most one half index per component. Among the sorted
    arrangements (and the global shift by 1/2, which changes nothing) the
    lexicographically smallest half set is returned, so the result only
    depends on the Weyl orbit.

    >>> from cascade_kit.rootsys import build_root_system
    >>> rs = build_root_system("C", 3)
    >>> reduce_half_set(rs, [1, 2], [2])
    (1,)
    """
    if rs.type_label != "C":
        raise ValueError("reduction is implemented for type C")
    hs = _check_half(rs, half)
    if not hs:
        return ()
    if hs[-1] == rs.rank:
        raise ValueError("alpha_n cannot be a half root in type C")
    blocks = levi_blocks(rs, pi1)
    x = _x_vector(rs.rank, hs)
    best = None
    for base in (x, [1 - v for v in x]):
        for y in _block_arrangements(base, blocks):
            cand = _half_from_x(y)
            if best is None or cand < best:
                best = cand
    return best


def reduction_word(rs: RootSystem, pi1: Iterable[int], half: Iterable[int]) -> list[int]:
    """A word in the simple reflections of pi1 realizing the reduction.

    The returned labels read as s_{w[0]} ... s_{w[-1]} (rightmost applied
    first); the element maps the integral roots of ``half`` onto those of
    ``reduce_half_set(rs, pi1, half)``.
    """
    hs = _check_half(rs, half)
    n = rs.rank
    target = _x_vector(n, reduce_half_set(rs, pi1, hs))
    blocks = levi_blocks(rs, pi1)
    x = _x_vector(n, hs)
    inside = {k for b in blocks for k in b}
    for y in (x, [1 - v for v in x]):
        if all(sorted(y[k - 1] for k in b) == sorted(target[k - 1] for k in b) for b in blocks) \
                and all(y[k - 1] == target[k - 1] for k in range(1, n + 1) if k not in inside):
            break
    else:
        raise AssertionError("reduced representative is not in the same orbit")
    y = list(y)
    word: list[int] = []
    for b in blocks:
        for p in b:
            if y[p - 1] == target[p - 1]:
                continue
            q = next(q for q in b if q > p and y[q - 1] == target[p - 1])
            for k in range(q - 1, p - 1, -1):
                y[k - 1], y[k] = y[k], y[k - 1]
                word.insert(0, k)
    if y != target:
        raise AssertionError("reduction left coordinates outside pi1 unmatched")
    return word


def is_reduced(rs: RootSystem, pi1: Iterable[int], half: Iterable[int]) -> bool:
    """At most one half index inside each component of pi1."""
    hs = set(half)
    return all(len(hs & set(comp)) <= 1 for comp in index_components(rs, pi1))


# ---------------------------------------------------------------- pi1^Z


@dataclass(frozen=True)
class IntegralPairData:
    half_set: tuple[int, ...]
    pi_z: SimpleSystem
    pi_z_left: tuple[Root, ...]
    pi_z_right: tuple[Root, ...]
    I_left: tuple[int, ...]
    I_right: tuple[int, ...]
    pi1_z: SimpleSystem
    pi1_z_components: tuple[tuple[tuple[Root, ...], str], ...]
    beta_ir_in_pi1z: bool
    reduced_half_set: tuple[int, ...]

    @property
    def pi_z_ordered(self) -> tuple[Root, ...]:
        """pi^Z listed left component first, each by starting index."""
        return self.pi_z_left + self.pi_z_right


class NotReduced(ValueError):
    pass


def compute_pi1_z(rs: RootSystem, pi1: Iterable[int], half: Iterable[int]) -> IntegralPairData:
    """pi1^Z and its component structure for a type C parabolic.

    pi1^Z keeps the simple roots of pi1 that are not half roots, plus
    beta_{i_r} when [i_r, n] lies in pi1. ``half`` must already be reduced.
    """
    if rs.type_label != "C":
        raise ValueError("compute_pi1_z is for type C")
    p1 = sorted(set(pi1))
    hs = tuple(_check_half(rs, half))
    if not is_reduced(rs, p1, hs):
        raise NotReduced(f"half set {list(hs)} is not reduced for pi1={p1}; call reduce_half_set first")
    n = rs.rank
    pz = compute_pi_z(rs, hs)
    assert not isinstance(pz, Inadmissible)
    sp = split_I(rs, hs)
    left = tuple(g for g in pz.elements if _start(g) in sp.left)
    right = tuple(g for g in pz.elements if _start(g) in sp.right)
    elems = [rs.alpha(k) for k in p1 if k not in hs]
    beta_in = bool(hs) and all(k in p1 for k in range(hs[-1], n + 1))
    if beta_in:
        elems.append(long_cascade_root(rs, hs[-1]))
    elems.sort(key=lambda g: (_start(g), g))
    p1z = SimpleSystem(rs, elems)
    comps = []
    for comp in connected_components(rs, p1z.elements):
        sides = {side_of(n, hs, _start(g)) for g in comp}
        assert len(sides) == 1
        comps.append((tuple(comp), sides.pop()))
    reduced = tuple(k for k in hs if not (beta_in and k == hs[-1]))
    return IntegralPairData(hs, pz, left, right, sp.left, sp.right, p1z, tuple(comps), beta_in, reduced)


def weyl_word_action(rs: RootSystem, word: Sequence[int], root: Sequence[int]) -> Root:
    """Apply s_{word[0]} ... s_{word[-1]} (rightmost first) to a root."""
    v = tuple(root)
    for k in reversed(word):
        v = rs.reflect(rs.alpha(k), v)
    return tuple(int(x) for x in v)
