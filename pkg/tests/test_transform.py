import itertools

import pytest

from lea import models
from lea.algebra import EffectAlgebra, check_effect_axioms, induced_order, ominus
from lea.groupoid import check_ng_axioms, groupoid_order, is_commutative, is_idempotent
from lea.transform import (
    NotALattice,
    check_mv_equivalence,
    check_orthoalgebra_equivalence,
    effect_from_groupoid,
    groupoid_from_effect,
    verify_round_trip_effect,
    verify_round_trip_groupoid,
)

from conftest import B2_G, BOOL4_G, HSUM_G, L3_G, L4_G

PAIRS = [
    (models.b2, B2_G),
    (models.l3, L3_G),
    (models.l4, L4_G),
    (models.boolean4, BOOL4_G),
    (models.horizontal_sum, HSUM_G),
]
IDS = ["b2", "l3", "l4", "bool4", "hsum"]


def interval_effect(gens, u):
    """Unit interval [0, u] of the numerical monoid generated by gens."""
    cone = {0}
    for _ in range(u + 1):
        cone |= {m + g for m in cone for g in gens if m + g <= u}
    elems = [x for x in sorted(cone) if u - x in cone]
    idx = {x: i for i, x in enumerate(elems)}
    plus = [[idx.get(x + y) for y in elems] for x in elems]
    inv = [idx[u - x] for x in elems]
    return EffectAlgebra(len(elems), plus, inv, 0, len(elems) - 1)


@pytest.mark.parametrize("make,hand", PAIRS, ids=IDS)
def test_forward_matches_hand_table(make, hand):
    G = groupoid_from_effect(make())
    assert G.dot == hand.dot and G.inv == hand.inv
    assert check_ng_axioms(G).ok


@pytest.mark.parametrize("make,hand", PAIRS, ids=IDS)
def test_backward_matches_model(make, hand):
    E = effect_from_groupoid(hand)
    assert E.plus == make().plus
    assert check_effect_axioms(E).ok and E.lattice is not None


def test_forward_examples():
    l3 = groupoid_from_effect(models.l3())
    assert l3.dot[1][1] == 0 and l3.dot[1][2] == l3.dot[2][1] == 1
    b4 = groupoid_from_effect(models.boolean4())
    assert b4.dot[1][1] == 1 and b4.dot[1][2] == 0
    b2 = groupoid_from_effect(models.b2())
    assert b2.dot[1][1] == 1


def test_backward_examples():
    assert effect_from_groupoid(L3_G).plus[1][1] == 2
    hs = effect_from_groupoid(HSUM_G)
    assert hs.plus[1][2] is None and hs.plus[1][1] == 3


@pytest.mark.parametrize("make,hand", PAIRS, ids=IDS)
def test_round_trips(make, hand):
    assert verify_round_trip_effect(make())
    assert verify_round_trip_groupoid(hand)


def test_refuses_non_lattice():
    E = interval_effect((2, 3), 8)
    assert E.size == 7
    assert check_effect_axioms(E).ok
    assert E.lattice is None
    with pytest.raises(NotALattice):
        groupoid_from_effect(E)


@pytest.mark.parametrize("make", [m for m, _ in PAIRS], ids=IDS)
def test_order_preserved(make):
    E = make()
    assert induced_order(E).leq == groupoid_order(groupoid_from_effect(E)).leq


def _catalog_effects(catalog):
    return [effect_from_groupoid(G) for G in catalog.models()]


def test_order_preserved_catalog(catalog5):
    for G in catalog5.models():
        assert induced_order(effect_from_groupoid(G)).leq == groupoid_order(G).leq


def test_ominus_translation(catalog5):
    for E in _catalog_effects(catalog5):
        G = groupoid_from_effect(E)
        for a, b in itertools.product(range(E.size), repeat=2):
            if E.order(a, b):
                assert ominus(E, a, b) == G.dot[b][E.inv[a]]


def test_partiality_criterion(catalog5):
    for E in _catalog_effects(catalog5):
        G = groupoid_from_effect(E)
        for a, b in itertools.product(range(E.size), repeat=2):
            assert (E.plus[a][b] is not None) == (G.dot[a][b] == G.zero)


def test_characterization_examples():
    b4, l3, b2, hs = models.boolean4(), models.l3(), models.b2(), models.horizontal_sum()
    assert is_idempotent(groupoid_from_effect(b4)) and check_orthoalgebra_equivalence(b4)
    assert not is_idempotent(groupoid_from_effect(l3)) and check_orthoalgebra_equivalence(l3)
    assert is_idempotent(groupoid_from_effect(b2)) and check_orthoalgebra_equivalence(b2)
    assert is_commutative(groupoid_from_effect(l3)) and check_mv_equivalence(l3)
    assert not is_commutative(groupoid_from_effect(hs)) and check_mv_equivalence(hs)
    assert check_mv_equivalence(b2)


def test_characterizations_catalog(catalog5):
    for E in _catalog_effects(catalog5):
        assert check_orthoalgebra_equivalence(E)
        assert check_mv_equivalence(E)
