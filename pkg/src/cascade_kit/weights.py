"""Weights of semi-invariant generators from involution orbits.

For a generator attached to an orbit G the weight is

    delta_G = sum over a in G of 2 (w_a(pi2 side) - w_a(pi1 side))

where w_a(S) is the fundamental weight of a inside span(S), taken as 0 when
a is not in S. Weights are vectors in simple-root coordinates of the ambient
root system, exact Fractions throughout.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Sequence

from . import _linalg
from .integral_pairs import (
    IntegralPairData,
    _start,
    compute_pi1_z,
    long_cascade_root,
)
from .rootsys import Root, RootSystem, SimpleSystem, diagram_involution, index_components

Weight = tuple[Fraction, ...]


def fundamental_weight(rs: RootSystem, ss: SimpleSystem, alpha: Sequence[int]) -> Weight:
    """The weight in span(ss) dual to ``alpha`` under the coroots of ss.

    >>> from cascade_kit.rootsys import build_root_system
    >>> rs = build_root_system("A", 2)
    >>> fundamental_weight(rs, SimpleSystem.from_indices(rs, [1, 2]), (1, 0))
    (Fraction(2, 3), Fraction(1, 3))
    """
    alpha = tuple(alpha)
    if alpha not in ss:
        return tuple(Fraction(0) for _ in range(rs.rank))
    elems = ss.elements
    m = len(elems)
    # row k: coroot of e_k paired with each e_i
    a = [[2 * rs.form(elems[k], elems[i]) / rs.form(elems[k], elems[k]) for i in range(m)]
         for k in range(m)]
    rhs = [Fraction(int(e == alpha)) for e in elems]
    coeffs = _linalg.solve_unique(a, rhs)
    out = [Fraction(0)] * rs.rank
    for c, e in zip(coeffs, elems):
        for j in range(rs.rank):
            out[j] += c * e[j]
    return tuple(out)


@dataclass(frozen=True)
class OrbitSpec:
    """An orbit of simple roots; ``copies=2`` marks a pair of generators of equal weight."""

    roots: tuple[Root, ...]
    copies: int = 1


@dataclass(frozen=True)
class GeneratorInfo:
    orbit: tuple[Root, ...]
    weight: Weight
    plus_part: Weight
    minus_part: Weight
    pairing_vector: tuple[int, ...]
    label: str


def _vec_add(x, y, c=1):
    return tuple(a + c * b for a, b in zip(x, y))


def _orbit_sum(rs: RootSystem, ss: SimpleSystem, orbit: Iterable[Root]) -> Weight:
    total = tuple(Fraction(0) for _ in range(rs.rank))
    for a in orbit:
        total = _vec_add(total, fundamental_weight(rs, ss, a), 2)
    return total


def pairing_vector(rs: RootSystem, weight: Sequence, coroots: Sequence[Root]) -> tuple[int, ...]:
    out = []
    for g in coroots:
        v = rs.coroot_pairing(g, weight)
        if v.denominator != 1:
            raise AssertionError(f"non-integral pairing {v} of {g} with {tuple(weight)}")
        out.append(int(v))
    return tuple(out)


def generator_weights(
    rs: RootSystem,
    pi1_side: SimpleSystem,
    pi2_side: SimpleSystem,
    orbits: Sequence,
    coroots: Sequence[Root] = (),
) -> list[GeneratorInfo]:
    """One entry per generator, labelled p1, p2, ... in the order of ``orbits``.

    Items of ``orbits`` are tuples of roots or ``OrbitSpec``. A split orbit
    (copies=2) yields two generators p_k and p_k' each carrying half of the
    orbit sum.
    """
    gens = []
    for idx, item in enumerate(orbits, start=1):
        spec = item if isinstance(item, OrbitSpec) else OrbitSpec(tuple(tuple(a) for a in item))
        plus = _orbit_sum(rs, pi2_side, spec.roots)
        minus = _orbit_sum(rs, pi1_side, spec.roots)
        if spec.copies != 1:
            plus = tuple(x / spec.copies for x in plus)
            minus = tuple(x / spec.copies for x in minus)
        weight = _vec_add(plus, minus, -1)
        pv = pairing_vector(rs, weight, coroots)
        for c in range(spec.copies):
            gens.append(GeneratorInfo(spec.roots, weight, plus, minus, pv, f"p{idx}" + "'" * c))
    return gens


def pairing_table(
    rs: RootSystem,
    gens: Sequence[GeneratorInfo],
    coroots: Sequence[Root],
    vanishing: Sequence[Root] = (),
) -> list[tuple[int, ...]]:
    """Rows of coroot pairings; also checks every weight kills the ``vanishing`` coroots."""
    for g in gens:
        for a in vanishing:
            if rs.coroot_pairing(a, g.weight) != 0:
                raise AssertionError(f"weight of {g.label} does not vanish on {a}")
    return [pairing_vector(rs, g.weight, coroots) for g in gens]


def subsystem_orbits(
    rs: RootSystem,
    ground: Sequence[Root],
    pi1_side: SimpleSystem,
    pi2_side: SimpleSystem,
) -> list[tuple[Root, ...]]:
    """Orbits on ``ground`` of the two diagram involutions (identity off their systems).

    Orbits are listed by the position in ``ground`` of their first element.
    """
    ground = [tuple(g) for g in ground]
    pos = {g: i for i, g in enumerate(ground)}
    parent = list(range(len(ground)))

    def find(x):
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    for ss in (pi1_side, pi2_side):
        if not len(ss):
            continue
        for a, b in diagram_involution(rs, ss).items():
            ra, rb = find(pos[a]), find(pos[b])
            if ra != rb:
                parent[max(ra, rb)] = min(ra, rb)
    groups: dict[int, list[Root]] = {}
    for i, g in enumerate(ground):
        groups.setdefault(find(i), []).append(g)
    return [tuple(groups[k]) for k in sorted(groups)]


# ---------------------------------------------------------------- type C parabolics


def h_gamma_indices(data: IntegralPairData, pi1: Iterable[int]) -> tuple[int, ...]:
    """Half indices lying in pi1, dropping i_r when beta_{i_r} is in pi1^Z."""
    p1 = set(pi1)
    return tuple(k for k in data.reduced_half_set if k in p1)


@dataclass(frozen=True)
class TypeCGenerators:
    data: IntegralPairData
    pi1: tuple[int, ...]
    orbits: tuple[tuple[Root, ...], ...]
    generators: tuple[GeneratorInfo, ...]
    coroot_indices: tuple[int, ...]


def typeC_parabolic_generators(
    rs: RootSystem, pi1: Iterable[int], half: Iterable[int], coroot_indices: Sequence[int] | None = None
) -> TypeCGenerators:
    """Generators of the integral parabolic q_Z with pi2 = pi.

    Orbits run over pi^Z in the order left component then right component,
    each by starting index, which is the row order used in the printed
    tables. Pairings are against the h_Gamma coroots unless
    ``coroot_indices`` is given.
    """
    p1 = tuple(sorted(set(pi1)))
    data = compute_pi1_z(rs, p1, half)
    ground = list(data.pi_z_ordered)
    orbits = subsystem_orbits(rs, ground, data.pi1_z, data.pi_z)
    if coroot_indices is None:
        coroot_indices = h_gamma_indices(data, p1)
    coroots = [rs.alpha(k) for k in coroot_indices]
    gens = generator_weights(rs, data.pi1_z, data.pi_z, orbits, coroots)
    pairing_table(rs, gens, coroots, vanishing=data.pi1_z.elements)
    return TypeCGenerators(data, p1, tuple(orbits), tuple(gens), tuple(coroot_indices))


# ---------------------------------------------------------------- rendering


def _coords_in(basis: Sequence[Sequence], v: Sequence) -> list[Fraction]:
    return _linalg.solve_unique(_linalg.transpose(basis), [Fraction(x) for x in v])


def _fmt_coeff(c: Fraction, first: bool) -> str:
    sign = "-" if c < 0 else ("" if first else "+")
    a = abs(c)
    body = "" if a == 1 else (str(a) if a.denominator == 1 else f"({a})")
    return sign + body


def render_combination(coeffs: Sequence[Fraction], symbol: str) -> str:
    """Write sum c_k symbol_k, e.g. '2α4+α5'; all-negative sums come out as '-(...)'."""
    nz = [(k + 1, Fraction(c)) for k, c in enumerate(coeffs) if c]
    if not nz:
        return "0"
    if all(c < 0 for _, c in nz) and len(nz) > 1:
        return "-(" + render_combination([-Fraction(c) for c in coeffs], symbol) + ")"
    return "".join(_fmt_coeff(c, i == 0) + f"{symbol}{k}" for i, (k, c) in enumerate(nz))


def render_alpha(weight: Sequence) -> str:
    return render_combination(list(weight), "α")


def render_beta_alpha(rs: RootSystem, gen: GeneratorInfo) -> str:
    """Type C form: the plus part in the cascade basis beta, minus the pi1 side part in alpha."""
    betas = [long_cascade_root(rs, t) for t in range(1, rs.rank + 1)]
    plus = render_combination(_coords_in(betas, gen.plus_part), "β")
    if not any(gen.minus_part):
        return plus
    minus = render_combination(list(gen.minus_part), "α")
    if minus.startswith("-"):
        return plus + "+" + minus[1:] if not minus.startswith("-(") else plus + "+" + minus[2:-1]
    if "+" in minus or "-" in minus[1:]:
        minus = f"({minus})"
    return plus + "-" + minus


# ---------------------------------------------------------------- closed forms


@dataclass(frozen=True)
class Component:
    """A component [l, k] of pi1 together with its half index (or None)."""

    lo: int
    hi: int
    half: int | None
    next_lo: int  # l of the next component, n + 1 for the last one


def pi1_components(rs: RootSystem, pi1: Iterable[int], half: Iterable[int]) -> list[Component]:
    hs = set(half)
    comps = index_components(rs, pi1)
    out = []
    for i, c in enumerate(comps):
        inside = sorted(hs & set(c))
        if len(inside) > 1:
            raise ValueError("half set is not reduced")
        nxt = comps[i + 1][0] if i + 1 < len(comps) else rs.rank + 1
        out.append(Component(c[0], c[-1], inside[0] if inside else None, nxt))
    return out


def generator_index(tc: TypeCGenerators) -> dict[int, GeneratorInfo]:
    """Map each k in [1, n] to the generator whose orbit's least start index is k."""
    out = {}
    for g in tc.generators:
        if g.label.endswith("'"):
            continue
        k = min(_start(a) for a in g.orbit)
        out[k] = g
    return out


def cascade_pairing(k: int, part: Sequence[int], upto: int) -> int:
    """alpha_k^vee of sum of beta_t over t in ``part`` with t <= upto."""
    sel = {t for t in part if t <= upto}
    return 2 * (k in sel) - 2 * (k + 1 in sel)


def left_neighbour(k: int, part: Sequence[int]) -> bool:
    return k not in part and k + 1 in part


def exact_plus_value(tc: TypeCGenerators, iu: int, gen: GeneratorInfo) -> int:
    """alpha_{iu}^vee of the plus part by cascade subsums.

    The plus part is the sum over the orbit of the beta_t with t in the part
    of the start s of each element and t <= s; the coroot of alpha_k takes
    2 on beta_k, -2 on beta_{k+1} and 0 on every other beta.
    """
    total = 0
    for a in gen.orbit:
        s = _start(a)
        part = tc.data.I_left if s in tc.data.I_left else tc.data.I_right
        total += cascade_pairing(iu, part, s)
    return total


def in_stated_domain(half: Iterable[int], iu: int, start: int) -> bool:
    """No half index strictly between i_u and ``start``.

    Past a further half index the parts alternate again and the sign of the
    plus pairing flips, so the case tables below only apply up to there.
    """
    return not any(iu < h < start for h in half)


def same_component_plus_value(tc: TypeCGenerators, comp: Component, k: int) -> int | None:
    """The value of alpha_{i_u}^vee(w_p^+) asserted for p = p_u^k, k in the component range."""
    iu = comp.half
    size = len(generator_index(tc)[k].orbit)
    if k < iu:
        return 0
    if k == iu:
        return 2
    return -2 * size


def same_component_minus_value(tc: TypeCGenerators, rs: RootSystem, comp: Component, k: int) -> int:
    """The value of alpha_{i_u}^vee(w_p^-) asserted for p = p_u^k."""
    iu = comp.half
    gen = generator_index(tc)[k]
    size = len(gen.orbit)
    if comp.hi == rs.rank:
        if k < iu:
            return 0
        if k == iu:
            return 2
        return -2 * size
    if k == iu or k > comp.hi:
        return 0
    return -1 if size == 1 else -2


def same_component_total_value(tc: TypeCGenerators, rs: RootSystem, comp: Component, k: int) -> int:
    """The value of alpha_{i_u}^vee(w_p) asserted for p = p_u^k."""
    iu = comp.half
    if comp.hi == rs.rank:
        return 0
    size = len(generator_index(tc)[k].orbit)
    if k < iu:
        return 1 if size == 1 else 2
    if k == iu:
        return 2
    if k <= comp.hi:
        return -1 if size == 1 else -2
    return -2


def cross_component_plus_value(tc: TypeCGenerators, iu: int, gen: GeneratorInfo) -> int:
    """For p in another component: -2|p| when i_u is a left neighbour of I(p), else 0.

    The neighbour relation is taken against the cascade subsum that defines
    the plus part, that is against the elements of I(p) not exceeding the
    start of p.
    """
    s = min(_start(a) for a in gen.orbit)
    part = tc.data.I_left if s in tc.data.I_left else tc.data.I_right
    trunc = [t for t in part if t <= s]
    return -2 * len(gen.orbit) if left_neighbour(iu, trunc) else 0


def direct_pairing(rs: RootSystem, iu: int, vec: Sequence) -> int:
    v = rs.coroot_pairing(rs.alpha(iu), vec)
    assert v.denominator == 1
    return int(v)


# ---------------------------------------------------------------- general biparabolics


def _in_span(root: Sequence[int], indices: set[int]) -> bool:
    return all(c == 0 or (k + 1) in indices for k, c in enumerate(root))


@dataclass(frozen=True)
class BiparabolicGenerators:
    pi_z: tuple[Root, ...]
    pi1_z: SimpleSystem
    pi2_z: SimpleSystem
    orbits: tuple[tuple[Root, ...], ...]
    generators: tuple[GeneratorInfo, ...]


def biparabolic_generators(
    rs: RootSystem,
    pi1: Iterable[int],
    pi2: Iterable[int],
    half: Iterable[int],
    coroot_indices: Sequence[int],
    split: Iterable[int] = (),
) -> BiparabolicGenerators:
    """Generators of q_Z for an arbitrary (pi1, pi2), with pi_i^Z = pi^Z in N pi_i.

    Orbits are numbered from 1 in order of least starting index; those listed
    in ``split`` are turned into two generators of equal weight. Which orbits
    split is input data here, not something derived.
    """
    from .integral_pairs import Inadmissible, compute_pi_z

    pz = compute_pi_z(rs, half)
    if isinstance(pz, Inadmissible):
        raise ValueError(pz.reason)
    ground = sorted(pz.elements, key=lambda g: (_start(g), g))
    s1, s2 = set(pi1), set(pi2)
    pi1_z = SimpleSystem(rs, [g for g in ground if _in_span(g, s1)])
    pi2_z = SimpleSystem(rs, [g for g in ground if _in_span(g, s2)])
    orbits = subsystem_orbits(rs, ground, pi1_z, pi2_z)
    sp = set(split)
    if any(not 1 <= i <= len(orbits) for i in sp):
        raise ValueError(f"split orbit numbers must lie in [1, {len(orbits)}]")
    specs = [OrbitSpec(o, 2 if i in sp else 1) for i, o in enumerate(orbits, start=1)]
    coroots = [rs.alpha(k) for k in coroot_indices]
    gens = generator_weights(rs, pi1_z, pi2_z, specs, coroots)
    return BiparabolicGenerators(tuple(ground), pi1_z, pi2_z, tuple(orbits), tuple(gens))
