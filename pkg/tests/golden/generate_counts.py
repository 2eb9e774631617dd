"""Regenerate tests/golden/counts.json.

    python3 tests/golden/generate_counts.py

Sizes 1-4 come from the unpruned groupoid filter (``brute_force_keys``; sizes
1-3 also with every cell free). Size 5 comes from a separate search over
partial sum tables of lattice effect algebras, which never touches the
groupoid code; the translation theorems make the two counts equal.
"""

from __future__ import annotations

import itertools
import json
import pathlib
import sys

from lea.algebra import EffectAlgebra, check_effect_axioms
from lea.enumeration import brute_force_keys

OUT = pathlib.Path(__file__).with_name("counts.json")


def _involutions(n):
    for perm in itertools.permutations(range(1, n - 1)):
        inv = (n - 1, *perm, 0)
        if all(inv[inv[i]] == i for i in range(n)):
            yield inv


def _ea_key(n, plus, inv, perm):
    back = [0] * n
    for old, new in enumerate(perm):
        back[new] = old
    flat = []
    for i in range(n):
        for j in range(n):
            v = plus[back[i]][back[j]]
            flat.append(-1 if v is None else perm[v])
    return tuple(flat), tuple(perm[inv[back[i]]] for i in range(n))


def lattice_effect_algebras(n):
    """Isomorphism classes of lattice effect algebras on n elements (0 and n-1 fixed)."""
    top = n - 1
    middle = list(range(1, top))
    pairs = [(i, j) for i in middle for j in middle if i <= j]
    perms = []
    for targets in itertools.permutations(middle):
        perm = list(range(n))
        for src, dst in zip(middle, targets):
            perm[src] = dst
        perms.append(perm)
    found = set()
    for inv in _involutions(n):
        for values in itertools.product([None, *range(n)], repeat=len(pairs)):
            plus = [[None] * n for _ in range(n)]
            for a in range(n):
                plus[0][a] = plus[a][0] = a
            for (i, j), v in zip(pairs, values):
                plus[i][j] = plus[j][i] = v
            E = EffectAlgebra(n, plus, inv, 0, top)
            if not check_effect_axioms(E).ok or E.lattice is None:
                continue
            found.add(min(_ea_key(n, E.plus, inv, p) for p in perms))
    return len(found)


def main():
    counts = {}
    for n in range(1, 5):
        counts[str(n)] = len(brute_force_keys(n))
        if n <= 3:
            assert len(brute_force_keys(n, full_tables=True)) == counts[str(n)]
    counts["5"] = lattice_effect_algebras(5)
    data = {
        "generated_by": "python3 tests/golden/generate_counts.py",
        "sources": {
            "1-3": "brute_force_keys(n, full_tables=True)",
            "4": "brute_force_keys(4)",
            "5": "lattice effect algebras by partial sum table search",
        },
        "counts": counts,
    }
    OUT.write_text(json.dumps(data, indent=2) + "\n", encoding="utf-8")
    json.dump(data, sys.stdout, indent=2)
    print()


if __name__ == "__main__":
    main()
