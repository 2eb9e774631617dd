"""Finite effect groupoids ``(R; *, ', 0, 1)`` with a total product table."""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from functools import cached_property
from typing import Iterable, Optional

from .algebra import (
    AxiomReport,
    AxiomResult,
    Element,
    InvalidStructure,
    OrderRelation,
    _check_shape,
)


@dataclass(frozen=True)
class EffectGroupoid:
    size: int
    dot: tuple[tuple[int, ...], ...]
    inv: tuple[int, ...]
    zero: int
    one: int
    names: Optional[tuple[str, ...]] = field(default=None, compare=False)

    def __post_init__(self):
        object.__setattr__(self, "dot", tuple(tuple(row) for row in self.dot))
        object.__setattr__(self, "inv", tuple(self.inv))
        if self.names is not None:
            object.__setattr__(self, "names", tuple(self.names))
        _check_shape(self.size, self.dot, self.inv, self.zero, self.one, self.names, partial=False)

    def mul(self, a: Element, b: Element) -> Element:
        return self.dot[a][b]

    def name(self, i: Element) -> str:
        return self.names[i] if self.names else str(i)

    @cached_property
    def order(self) -> OrderRelation:
        return groupoid_order(self)

    def key(self) -> tuple:
        return (tuple(itertools.chain.from_iterable(self.dot)), self.inv)


def check_ng_axioms(G: EffectGroupoid) -> AxiomReport:
    return AxiomReport(tuple(_ng_results(G)))


def _ng_results(G: EffectGroupoid):
    n, d, i = G.size, G.dot, G.inv
    zero, one = G.zero, G.one
    rng = range(n)
    pairs = list(itertools.product(rng, repeat=2))

    w = next((x for x in rng if d[one][x] != x or d[x][one] != x), None)
    yield AxiomResult("NG0", w is None, None if w is None else (w,))

    w = next((x for x in rng if i[i[x]] != x), None)
    yield AxiomResult("NG1", w is None, None if w is None else (w,))

    w = next((x for x in rng if d[x][zero] != zero or d[zero][x] != zero), None)
    yield AxiomResult("NG2", w is None, None if w is None else (w,))

    yield AxiomResult("NG3", i[zero] == one, None if i[zero] == one else (zero,))

    # x(yx') = 0 = (yx')x
    w = next(
        ((x, y) for x, y in pairs
         if d[x][d[y][i[x]]] != zero or d[d[y][i[x]]][x] != zero),
        None,
    )
    yield AxiomResult("NG4", w is None, w)

    # xy = y[(y'x')'x']'
    w = next(
        ((x, y) for x, y in pairs
         if d[x][y] != d[y][i[d[i[d[i[y]][i[x]]]][i[x]]]]),
        None,
    )
    yield AxiomResult("NG5", w is None, w)

    # x(y'x)' = (y'x)'x = (x'y)'y
    w = None
    for x, y in pairs:
        u = i[d[i[y]][x]]
        a, b, c = d[x][u], d[u][x], d[i[d[i[x]][y]]][y]
        if not (a == b == c):
            w = (x, y)
            break
    yield AxiomResult("NG6", w is None, w)

    # [(xy')'y']'z = [((xz)(yz)')'(yz)']'
    w = None
    for x, y, z in itertools.product(rng, repeat=3):
        lhs = d[i[d[i[d[x][i[y]]]][i[y]]]][z]
        xz, yz = d[x][z], d[y][z]
        rhs = i[d[i[d[xz][i[yz]]]][i[yz]]]
        if lhs != rhs:
            w = (x, y, z)
            break
    yield AxiomResult("NG7", w is None, w)

    w, detail = None, ""
    for x, y, z in itertools.product(rng, repeat=3):
        if d[i[x]][i[y]] != zero or d[i[d[x][y]]][i[z]] != zero:
            continue
        failed = []
        if d[i[y]][i[z]] != zero:
            failed.append("y'z'=0")
        if d[i[x]][i[d[y][z]]] != zero:
            failed.append("x'(yz)'=0")
        if d[d[x][y]][z] != d[x][d[y][z]]:
            failed.append("(xy)z=x(yz)")
        if failed:
            w, detail = (x, y, z), "conclusions failed: " + " ".join(failed)
            break
    yield AxiomResult("NG8", w is None, w, detail)


def is_effect_groupoid(G: EffectGroupoid) -> bool:
    return all(r.passed for r in _ng_results(G))


def validate_groupoid(G: EffectGroupoid) -> EffectGroupoid:
    report = check_ng_axioms(G)
    if not report.ok:
        raise InvalidStructure("effect groupoid axioms fail: " + "; ".join(report.lines()))
    return G


def groupoid_order(G: EffectGroupoid) -> OrderRelation:
    """``a <= b`` iff ``a * b' = 0``."""
    n = G.size
    leq = tuple(
        tuple(G.dot[a][G.inv[b]] == G.zero for b in range(n)) for a in range(n)
    )
    rel = OrderRelation(n, leq)
    problem = rel.poset_violation()
    if problem:
        raise InvalidStructure(f"groupoid order is not a poset: {problem}")
    return rel


def groupoid_meet(G: EffectGroupoid, a: Element, b: Element) -> Element:
    d, i = G.dot, G.inv
    return d[i[d[i[a]][b]]][b]


def groupoid_join(G: EffectGroupoid, a: Element, b: Element) -> Element:
    i = G.inv
    return i[groupoid_meet(G, i[a], i[b])]


def is_idempotent(G: EffectGroupoid) -> bool:
    return all(G.dot[x][x] == x for x in range(G.size))


def is_commutative(G: EffectGroupoid) -> bool:
    d = G.dot
    return all(d[x][y] == d[y][x] for x, y in itertools.product(range(G.size), repeat=2))


def is_associative(G: EffectGroupoid) -> bool:
    d = G.dot
    return all(
        d[d[x][y]][z] == d[x][d[y][z]]
        for x, y, z in itertools.product(range(G.size), repeat=3)
    )


def subuniverse_closure(G: EffectGroupoid, seed: Iterable[Element] = ()) -> frozenset[int]:
    closed = set(seed) | {G.zero, G.one}
    frontier = list(closed)
    while frontier:
        new = set()
        for a in frontier:
            new.add(G.inv[a])
            for b in closed:
                new.add(G.dot[a][b])
                new.add(G.dot[b][a])
        new -= closed
        closed |= new
        frontier = list(new)
    return frozenset(closed)


def _commutative_on(G: EffectGroupoid, subset: Iterable[int]) -> bool:
    s = sorted(subset)
    d = G.dot
    return all(d[a][b] == d[b][a] for a, b in itertools.combinations(s, 2))


def blocks(G: EffectGroupoid) -> list[tuple[int, ...]]:
    """Maximal commutative sub-effect groupoids, as sorted element tuples.

    Depth-first growth from the closure of {0, 1}: every commutative closed
    subset is reachable by adding one element at a time, and a subset is
    maximal exactly when no single extension stays commutative.
    """
    start = subuniverse_closure(G)
    if not _commutative_on(G, start):
        return []
    seen = {start}
    stack = [start]
    maximal = set()
    while stack:
        s = stack.pop()
        extended = False
        for y in range(G.size):
            if y in s:
                continue
            t = subuniverse_closure(G, s | {y})
            if not _commutative_on(G, t):
                continue
            extended = True
            if t not in seen:
                seen.add(t)
                stack.append(t)
        if not extended:
            maximal.add(tuple(sorted(s)))
    return sorted(maximal)


def restrict(G: EffectGroupoid, subset: Iterable[int]) -> EffectGroupoid:
    """The sub-effect groupoid on ``subset``, re-indexed in increasing order."""
    elems = sorted(subset)
    index = {e: k for k, e in enumerate(elems)}
    try:
        dot = [[index[G.dot[a][b]] for b in elems] for a in elems]
        inv = [index[G.inv[a]] for a in elems]
        zero, one = index[G.zero], index[G.one]
    except KeyError as exc:
        raise InvalidStructure(f"subset is not closed: {exc.args[0]} escapes") from None
    names = tuple(G.names[a] for a in elems) if G.names else tuple(str(a) for a in elems)
    return EffectGroupoid(len(elems), dot, inv, zero, one, names)
