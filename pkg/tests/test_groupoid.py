import itertools

import pytest

from lea.algebra import MalformedTable
from lea.groupoid import (
    EffectGroupoid,
    blocks,
    check_ng_axioms,
    groupoid_join,
    groupoid_meet,
    groupoid_order,
    is_associative,
    is_commutative,
    is_idempotent,
    restrict,
    subuniverse_closure,
)

from conftest import B2_G, BOOL4_G, HSUM_G, L3_G, L4_G

HAND = {"b2": B2_G, "l3": L3_G, "l4": L4_G, "bool4": BOOL4_G, "hsum": HSUM_G}


@pytest.mark.parametrize("name", sorted(HAND))
def test_hand_tables_pass(name):
    report = check_ng_axioms(HAND[name])
    assert report.ok, report.lines()
    assert [r.name for r in report.results] == [f"NG{k}" for k in range(9)]


def test_unit_failure():
    bad = EffectGroupoid(2, [[0, 0], [0, 0]], [1, 0], 0, 1)
    r = check_ng_axioms(bad)
    assert not r["NG0"].passed and r["NG0"].witness == (1,)


def test_ng4_failure():
    # L3 with a * a = a: x = y = a gives a * (a * a') = a * a = a != 0
    bad = EffectGroupoid(3, [[0, 0, 0], [0, 1, 1], [0, 1, 2]], [2, 1, 0], 0, 2)
    r = check_ng_axioms(bad)
    assert not r["NG4"].passed and r["NG4"].witness == (1, 1)


def test_ng8_reports_failed_conclusions():
    # a' = b, b * b = b, other middle products 0. At x = y = b, z = a both
    # hypotheses hold (a * a = 0, b' * a' = a * b = 0) but x' * (y * z)' = a * 1 = a.
    bad = EffectGroupoid(
        4,
        [[0, 0, 0, 0], [0, 0, 0, 1], [0, 0, 2, 2], [0, 1, 2, 3]],
        [3, 2, 1, 0], 0, 3,
    )
    r = check_ng_axioms(bad)
    assert not r["NG8"].passed
    assert r["NG8"].witness == (2, 2, 1)
    assert r["NG8"].detail == "conclusions failed: x'(yz)'=0"


def test_malformed_groupoid():
    with pytest.raises(MalformedTable):
        EffectGroupoid(2, [[0, None], [0, 1]], [1, 0], 0, 1)
    with pytest.raises(MalformedTable):
        EffectGroupoid(2, [[0, 0, 0], [0, 1]], [1, 0], 0, 1)


@pytest.mark.parametrize("name", sorted(HAND))
def test_order_bounds(name):
    G = HAND[name]
    le = groupoid_order(G)
    for x in range(G.size):
        assert le(G.zero, x) and le(x, G.one)


def test_l3_order_is_chain():
    le = groupoid_order(L3_G)
    assert le(0, 1) and le(1, 2) and not le(1, 0) and not le(2, 1)


def test_hsum_incomparable():
    le = groupoid_order(HSUM_G)
    assert HSUM_G.dot[1][HSUM_G.inv[2]] == 2
    assert not le(1, 2) and not le(2, 1)


def test_meet_examples():
    for G in HAND.values():
        for x in range(G.size):
            assert groupoid_meet(G, x, G.one) == x
    assert groupoid_meet(HSUM_G, 1, 2) == 0
    assert groupoid_meet(L4_G, 1, 2) == 1


@pytest.mark.parametrize("name", sorted(HAND))
def test_meet_join_are_lattice_ops(name):
    G = HAND[name]
    le = groupoid_order(G)
    rng = range(G.size)
    for a, b in itertools.product(rng, repeat=2):
        m, j = groupoid_meet(G, a, b), groupoid_join(G, a, b)
        lower = [c for c in rng if le(c, a) and le(c, b)]
        upper = [c for c in rng if le(a, c) and le(b, c)]
        assert m in lower and all(le(c, m) for c in lower)
        assert j in upper and all(le(j, c) for c in upper)


def test_predicates():
    assert is_idempotent(BOOL4_G) and is_commutative(BOOL4_G) and is_associative(BOOL4_G)
    assert is_commutative(L3_G) and not is_idempotent(L3_G)
    assert not is_commutative(HSUM_G)
    assert HSUM_G.dot[1][2] == 2 and HSUM_G.dot[2][1] == 1


def test_closure():
    assert subuniverse_closure(L3_G) == {0, 2}
    assert subuniverse_closure(L3_G, {1}) == {0, 1, 2}
    assert subuniverse_closure(HSUM_G, {1}) == {0, 1, 3}
    assert subuniverse_closure(L4_G, {1}) == {0, 1, 2, 3}


def test_closure_is_closed(catalog5):
    for G in catalog5.models():
        for x in range(G.size):
            s = subuniverse_closure(G, {x})
            assert all(G.inv[a] in s for a in s)
            assert all(G.dot[a][b] in s for a in s for b in s)
            # least: closing again adds nothing
            assert subuniverse_closure(G, s) == s


def test_blocks_examples():
    assert blocks(BOOL4_G) == [(0, 1, 2, 3)]
    assert blocks(L4_G) == [(0, 1, 2, 3)]
    assert blocks(HSUM_G) == [(0, 1, 3), (0, 2, 3)]


def _brute_blocks(G):
    """Maximal commutative closed subsets by scanning every subset."""
    n = G.size
    closed = []
    for mask in range(1 << n):
        s = {i for i in range(n) if mask >> i & 1}
        if G.zero not in s or G.one not in s:
            continue
        if any(G.inv[a] not in s for a in s) or any(G.dot[a][b] not in s for a in s for b in s):
            continue
        if all(G.dot[a][b] == G.dot[b][a] for a in s for b in s):
            closed.append(frozenset(s))
    maximal = [s for s in closed if not any(s < t for t in closed)]
    return sorted(tuple(sorted(s)) for s in maximal)


def test_blocks_match_subset_scan(catalog5):
    for G in catalog5.models():
        assert blocks(G) == _brute_blocks(G)


def test_blocks_cover_and_are_mv(catalog5):
    for G in catalog5.models():
        bs = blocks(G)
        assert set().union(*bs) == set(range(G.size))
        for b in bs:
            H = restrict(G, b)
            assert check_ng_axioms(H).ok
            assert is_commutative(H) and is_associative(H)


def test_commutative_implies_associative(catalog5):
    for G in catalog5.models():
        if is_commutative(G):
            assert is_associative(G)
            assert blocks(G) == [tuple(range(G.size))]


def test_identities_pointwise(catalog5):
    for G in catalog5.models():
        d, i = G.dot, G.inv
        rng = range(G.size)
        for x, y in itertools.product(rng, repeat=2):
            assert d[x][y] == d[y][i[d[i[d[i[y]][i[x]]]][i[x]]]]
            u = i[d[i[y]][x]]
            assert d[x][u] == d[u][x] == d[i[d[i[x]][y]]][y]
        for x, y, z in itertools.product(rng, repeat=3):
            lhs = d[i[d[i[d[x][i[y]]]][i[y]]]][z]
            rhs = i[d[i[d[d[x][z]][i[d[y][z]]]]][i[d[y][z]]]]
            assert lhs == rhs
