"""Kostant cascades of strongly orthogonal roots.

For a connected simple system take its highest root, keep the simple roots
orthogonal to it and recurse on each connected piece. Works for simple
systems made of non-simple ambient roots as well, since the subsystem is
enumerated through its own Cartan matrix.
"""

from __future__ import annotations

from dataclasses import dataclass

from .rootsys import (
    Root,
    RootSystem,
    SimpleSystem,
    add,
    connected_components,
    positive_roots_from_cartan,
    scale,
)


@dataclass(frozen=True)
class Cascade:
    ordered_roots: tuple[Root, ...]
    parent: SimpleSystem
    # (component, highest root) for every step of the recursion
    stages: tuple[tuple[tuple[Root, ...], Root], ...]

    def __len__(self) -> int:
        return len(self.ordered_roots)

    def __iter__(self):
        return iter(self.ordered_roots)


def highest_root(rs: RootSystem, ss: SimpleSystem) -> Root:
    """The unique maximal root of the subsystem spanned by a connected ``ss``."""
    if len(ss) == 0:
        raise ValueError("highest root of an empty system")
    if len(connected_components(rs, ss.elements)) != 1:
        raise ValueError("highest root needs a connected simple system")
    coords = positive_roots_from_cartan(ss.cartan)
    top = max(coords, key=lambda c: (sum(c), c))
    return add(*(scale(k, e) for k, e in zip(top, ss.elements)))


def kostant_cascade(rs: RootSystem, ss: SimpleSystem) -> Cascade:
    order = {e: i for i, e in enumerate(ss.elements)}
    roots: list[Root] = []
    stages = []

    def visit(elems: list[Root]) -> None:
        comps = connected_components(rs, elems)
        comps.sort(key=lambda comp: min(order[e] for e in comp))
        for comp in comps:
            beta = highest_root(rs, SimpleSystem(rs, comp))
            roots.append(beta)
            stages.append((tuple(comp), beta))
            rest = [a for a in comp if rs.form(a, beta) == 0]
            if rest:
                visit(rest)

    if len(ss):
        visit(list(ss.elements))
    return Cascade(tuple(roots), ss, tuple(stages))


def cascade_reflection_product(rs: RootSystem, casc: Cascade, lam):
    """Apply the product of the (commuting) cascade reflections to ``lam``."""
    v = lam
    for b in casc.ordered_roots:
        v = rs.reflect(b, v)
    return v


def is_strongly_orthogonal(rs: RootSystem, roots) -> bool:
    roots = list(roots)
    for i in range(len(roots)):
        for j in range(i + 1, len(roots)):
            a, b = roots[i], roots[j]
            if rs.is_root(add(a, b)) or rs.is_root(tuple(x - y for x, y in zip(a, b))):
                return False
    return True
