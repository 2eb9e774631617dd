"""Finite effect algebras given by a partial addition table.

Elements are dense indices ``0..n-1``. An undefined sum is ``None`` in the
table; there is no sentinel element.
"""

from __future__ import annotations

import itertools
import os
from dataclasses import dataclass, field
from functools import cached_property
from typing import Optional, Sequence

Element = int

DEFAULT_MAX_SIZE = 64


def max_size() -> int:
    return int(os.environ.get("LEA_MAX_ALGEBRA_SIZE", DEFAULT_MAX_SIZE))


class MalformedTable(ValueError):
    """Raised when a table has the wrong shape or out-of-range entries.

    This is a structural problem and is kept apart from axiom failures.
    """


class InvalidStructure(ValueError):
    """A structure that was assumed valid turned out not to be."""


@dataclass(frozen=True)
class AxiomResult:
    name: str
    passed: bool
    witness: Optional[tuple] = None
    detail: str = ""


@dataclass(frozen=True)
class AxiomReport:
    results: tuple[AxiomResult, ...]

    @property
    def ok(self) -> bool:
        return all(r.passed for r in self.results)

    def __getitem__(self, name: str) -> AxiomResult:
        for r in self.results:
            if r.name == name:
                return r
        raise KeyError(name)

    def failures(self) -> list[AxiomResult]:
        return [r for r in self.results if not r.passed]

    def lines(self) -> list[str]:
        out = []
        for r in self.results:
            if r.passed:
                out.append(f"{r.name} PASS")
            else:
                extra = f" {r.detail}" if r.detail else ""
                out.append(f"{r.name} FAIL witness={_fmt_witness(r.witness)}{extra}")
        return out

    def to_dict(self) -> dict:
        return {
            "ok": self.ok,
            "axioms": [
                {
                    "name": r.name,
                    "passed": r.passed,
                    "witness": list(r.witness) if r.witness is not None else None,
                    "detail": r.detail,
                }
                for r in self.results
            ],
        }


def _fmt_witness(w) -> str:
    if w is None:
        return "-"
    return ",".join(str(x) for x in w)


@dataclass(frozen=True)
class OrderRelation:
    size: int
    leq: tuple[tuple[bool, ...], ...]

    def __call__(self, a: Element, b: Element) -> bool:
        return self.leq[a][b]

    def poset_violation(self) -> Optional[str]:
        n, le = self.size, self.leq
        for a in range(n):
            if not le[a][a]:
                return f"not reflexive at {a}"
        for a, b in itertools.product(range(n), repeat=2):
            if a != b and le[a][b] and le[b][a]:
                return f"not antisymmetric at {a},{b}"
        for a, b, c in itertools.product(range(n), repeat=3):
            if le[a][b] and le[b][c] and not le[a][c]:
                return f"not transitive at {a},{b},{c}"
        return None

    def lattice(self) -> Optional[tuple[tuple[tuple[int, ...], ...], tuple[tuple[int, ...], ...]]]:
        """Meet and join tables, or None if some pair lacks a glb or lub."""
        n, le = self.size, self.leq
        meet = [[0] * n for _ in range(n)]
        join = [[0] * n for _ in range(n)]
        for a, b in itertools.product(range(n), repeat=2):
            lower = [c for c in range(n) if le[c][a] and le[c][b]]
            glb = [c for c in lower if all(le[d][c] for d in lower)]
            upper = [c for c in range(n) if le[a][c] and le[b][c]]
            lub = [c for c in upper if all(le[c][d] for d in upper)]
            if not glb or not lub:
                return None
            meet[a][b] = glb[0]
            join[a][b] = lub[0]
        return tuple(map(tuple, meet)), tuple(map(tuple, join))


@dataclass(frozen=True)
class EffectAlgebra:
    size: int
    plus: tuple[tuple[Optional[int], ...], ...]
    inv: tuple[int, ...]
    zero: int
    one: int
    names: Optional[tuple[str, ...]] = field(default=None, compare=False)

    def __post_init__(self):
        object.__setattr__(self, "plus", tuple(tuple(row) for row in self.plus))
        object.__setattr__(self, "inv", tuple(self.inv))
        if self.names is not None:
            object.__setattr__(self, "names", tuple(self.names))
        _check_shape(self.size, self.plus, self.inv, self.zero, self.one, self.names, partial=True)

    def add(self, a: Element, b: Element) -> Optional[Element]:
        return self.plus[a][b]

    def name(self, i: Element) -> str:
        return self.names[i] if self.names else str(i)

    @cached_property
    def order(self) -> OrderRelation:
        return induced_order(self)

    @cached_property
    def lattice(self):
        return lattice_structure(self)

    def meet(self, a: Element, b: Element) -> Element:
        lat = self.lattice
        if lat is None:
            raise InvalidStructure("effect algebra is not a lattice")
        return lat[0][a][b]

    def join(self, a: Element, b: Element) -> Element:
        lat = self.lattice
        if lat is None:
            raise InvalidStructure("effect algebra is not a lattice")
        return lat[1][a][b]


def _check_shape(n, table, inv, zero, one, names, partial: bool) -> None:
    if not isinstance(n, int) or n < 1:
        raise MalformedTable(f"size must be a positive integer, got {n!r}")
    if n > max_size():
        raise MalformedTable(f"size {n} exceeds the configured maximum {max_size()}")
    if len(table) != n or any(len(row) != n for row in table):
        raise MalformedTable(f"table must be {n}x{n}")
    if len(inv) != n:
        raise MalformedTable(f"inv must have {n} entries, got {len(inv)}")
    if names is not None and len(names) != n:
        raise MalformedTable(f"names must have {n} entries, got {len(names)}")
    for i, row in enumerate(table):
        for j, v in enumerate(row):
            if v is None:
                if not partial:
                    raise MalformedTable(f"undefined entry at ({i},{j}) in a total table")
            elif not (isinstance(v, int) and 0 <= v < n):
                raise MalformedTable(f"entry {v!r} at ({i},{j}) out of range")
    for i, v in enumerate(inv):
        if not (isinstance(v, int) and 0 <= v < n):
            raise MalformedTable(f"inv entry {v!r} at {i} out of range")
    for label, v in (("zero", zero), ("one", one)):
        if not (isinstance(v, int) and 0 <= v < n):
            raise MalformedTable(f"{label} = {v!r} out of range")


def check_effect_axioms(E: EffectAlgebra) -> AxiomReport:
    n, p, inv = E.size, E.plus, E.inv
    rng = range(n)
    results = []

    w = next(
        ((x, y) for x, y in itertools.product(rng, repeat=2)
         if p[x][y] is not None and p[y][x] != p[x][y]),
        None,
    )
    results.append(AxiomResult("E1", w is None, w))

    # One direction only: (x+y)+z defined forces x+(y+z) defined and equal.
    w = None
    for x, y, z in itertools.product(rng, repeat=3):
        s = p[x][y]
        if s is None or p[s][z] is None:
            continue
        t = p[y][z]
        if t is None or p[x][t] != p[s][z]:
            w = (x, y, z)
            break
    results.append(AxiomResult("E2", w is None, w))

    w = next((x for x in rng if p[x][inv[x]] != E.one), None)
    results.append(AxiomResult(
        "E3", w is None, None if w is None else (w,),
        "" if w is None else "x+x' is not 1",
    ))
    w = None
    for x in rng:
        others = [y for y in rng if p[x][y] == E.one and y != inv[x]]
        if others:
            w = (x, others[0])
            break
    results.append(AxiomResult(
        "E3-unique", w is None, w,
        "" if w is None else "second complement",
    ))

    w = next((x for x in rng if p[x][E.one] is not None and x != E.zero), None)
    results.append(AxiomResult("E4", w is None, None if w is None else (w,)))
    return AxiomReport(tuple(results))


def induced_order(E: EffectAlgebra) -> OrderRelation:
    n = E.size
    leq = [[False] * n for _ in range(n)]
    for a in range(n):
        for c in range(n):
            b = E.plus[a][c]
            if b is not None:
                leq[a][b] = True
    rel = OrderRelation(n, tuple(map(tuple, leq)))
    problem = rel.poset_violation()
    if problem is None:
        if not all(leq[E.zero][x] and leq[x][E.one] for x in range(n)):
            problem = "zero/one are not the bounds"
    if problem:
        raise InvalidStructure(f"induced relation is not a bounded poset: {problem}")
    return rel


def ominus(E: EffectAlgebra, a: Element, b: Element) -> Optional[Element]:
    """``b - a``, i.e. ``(a + b')'``, or None when ``a + b'`` is undefined."""
    s = E.plus[a][E.inv[b]]
    return None if s is None else E.inv[s]


def lattice_structure(E: EffectAlgebra):
    return E.order.lattice()


def check_meet_translation(E: EffectAlgebra) -> bool:
    n, p = E.size, E.plus
    for a, b, c in itertools.product(range(n), repeat=3):
        ac, bc = p[a][c], p[b][c]
        if ac is None or bc is None:
            continue
        lhs = p[E.meet(a, b)][c]
        if lhs is None or lhs != E.meet(ac, bc):
            return False
    return True


def is_orthoalgebra(E: EffectAlgebra) -> bool:
    return all(E.plus[x][x] is None or x == E.zero for x in range(E.size))


def is_mv_effect(E: EffectAlgebra) -> bool:
    n, inv = E.size, E.inv
    for x, y in itertools.product(range(n), repeat=2):
        lhs = E.plus[E.meet(x, inv[y])][y]
        rhs = E.plus[E.meet(y, inv[x])][x]
        if lhs is None or rhs is None or lhs != rhs:
            return False
    return True


def validate_effect(E: EffectAlgebra) -> EffectAlgebra:
    report = check_effect_axioms(E)
    if not report.ok:
        raise InvalidStructure("effect algebra axioms fail: " + "; ".join(report.lines()))
    return E


def from_sums(
    size: int,
    sums: dict[tuple[int, int], int],
    inv: Sequence[int],
    zero: int = 0,
    one: Optional[int] = None,
    names: Optional[Sequence[str]] = None,
) -> EffectAlgebra:
    """Build an effect algebra from the defined sums, filling in the zero laws and symmetry."""
    one = size - 1 if one is None else one
    table: list[list[Optional[int]]] = [[None] * size for _ in range(size)]
    for i in range(size):
        table[zero][i] = i
        table[i][zero] = i
    for (a, b), s in sums.items():
        table[a][b] = s
        table[b][a] = s
    return EffectAlgebra(size, table, tuple(inv), zero, one, tuple(names) if names else None)
