"""Translations between lattice effect algebras and effect groupoids."""

from __future__ import annotations

from .algebra import (
    EffectAlgebra,
    InvalidStructure,
    is_mv_effect,
    is_orthoalgebra,
)
from .groupoid import EffectGroupoid, is_commutative, is_idempotent


class NotALattice(InvalidStructure):
    pass


def groupoid_from_effect(E: EffectAlgebra) -> EffectGroupoid:
    """``x * y := ((x' meet y) + y')'``."""
    if E.lattice is None:
        raise NotALattice("groupoid translation needs a lattice effect algebra")
    n, inv = E.size, E.inv
    dot = [[0] * n for _ in range(n)]
    for x in range(n):
        for y in range(n):
            s = E.plus[E.meet(inv[x], y)][inv[y]]
            if s is None:
                raise InvalidStructure(
                    f"sum ({inv[x]} meet {y}) + {inv[y]} undefined; the algebra is inconsistent"
                )
            dot[x][y] = inv[s]
    return EffectGroupoid(n, dot, inv, E.zero, E.one, E.names)


def effect_from_groupoid(G: EffectGroupoid) -> EffectAlgebra:
    """``x + y := (x' * y')'`` provided ``x * y = 0``."""
    n, d, inv = G.size, G.dot, G.inv
    plus = [
        [inv[d[inv[x]][inv[y]]] if d[x][y] == G.zero else None for y in range(n)]
        for x in range(n)
    ]
    return EffectAlgebra(n, plus, inv, G.zero, G.one, G.names)


def _same_effect(a: EffectAlgebra, b: EffectAlgebra) -> bool:
    return (a.size, a.plus, a.inv, a.zero, a.one) == (b.size, b.plus, b.inv, b.zero, b.one)


def _same_groupoid(a: EffectGroupoid, b: EffectGroupoid) -> bool:
    return (a.size, a.dot, a.inv, a.zero, a.one) == (b.size, b.dot, b.inv, b.zero, b.one)


def verify_round_trip_effect(E: EffectAlgebra) -> bool:
    return _same_effect(effect_from_groupoid(groupoid_from_effect(E)), E)


def verify_round_trip_groupoid(G: EffectGroupoid) -> bool:
    return _same_groupoid(groupoid_from_effect(effect_from_groupoid(G)), G)


def check_orthoalgebra_equivalence(E: EffectAlgebra) -> bool:
    return is_orthoalgebra(E) == is_idempotent(groupoid_from_effect(E))


def check_mv_equivalence(E: EffectAlgebra) -> bool:
    return is_mv_effect(E) == is_commutative(groupoid_from_effect(E))
