"""Isomorphism-reduced enumeration of small effect groupoids and the catalog file.

The search fixes ``zero = 0`` and ``one = n - 1``, picks the involution in a
standard form (fixed points first, then adjacent pairs), pins the cells that
NG0, NG2 and NG4 force, and fills the remaining cells row by row. After each
assignment every NG4-NG8 instance whose value is already determined is
checked, using ``n`` as an "unknown" marker that propagates through lookups.
"""

from __future__ import annotations

import hashlib
import itertools
import os
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from typing import Iterator, Optional

import numpy as np

from .algebra import InvalidStructure
from .groupoid import (
    EffectGroupoid,
    blocks,
    check_ng_axioms,
    is_associative,
    is_commutative,
    is_effect_groupoid,
    is_idempotent,
)
from .textio import FormatError, format_structure, parse_structure

DEFAULT_CAP = 6
CATALOG_HEADER = "lea-catalog v1"


def size_cap() -> int:
    return int(os.environ.get("LEA_MAX_SIZE", DEFAULT_CAP))


# --- canonical forms -------------------------------------------------------


def relabel(G: EffectGroupoid, perm: dict[int, int]) -> EffectGroupoid:
    """Apply the bijection ``perm`` (old index -> new index)."""
    n = G.size
    dot = [[0] * n for _ in range(n)]
    inv = [0] * n
    for a in range(n):
        inv[perm[a]] = perm[G.inv[a]]
        for b in range(n):
            dot[perm[a]][perm[b]] = perm[G.dot[a][b]]
    names = None
    if G.names:
        names = [""] * n
        for a in range(n):
            names[perm[a]] = G.names[a]
    return EffectGroupoid(n, dot, inv, perm[G.zero], perm[G.one], names)


def _relabel_key(G: EffectGroupoid, perm: list[int]) -> tuple:
    n = G.size
    back = [0] * n
    for old, new in enumerate(perm):
        back[new] = old
    flat = tuple(perm[G.dot[back[i]][back[j]]] for i in range(n) for j in range(n))
    inv = tuple(perm[G.inv[back[i]]] for i in range(n))
    return flat, inv


def canonical_form(G: EffectGroupoid) -> EffectGroupoid:
    """Least relabeling by (flattened table, involution) with zero -> 0, one -> n-1."""
    n = G.size
    if n == 1:
        return EffectGroupoid(1, G.dot, G.inv, 0, 0)
    if G.zero == G.one:
        raise InvalidStructure("zero equals one in a groupoid with more than one element")
    middle = [x for x in range(n) if x not in (G.zero, G.one)]
    best = None
    for targets in itertools.permutations(range(1, n - 1)):
        perm = [0] * n
        perm[G.zero] = 0
        perm[G.one] = n - 1
        for src, dst in zip(middle, targets):
            perm[src] = dst
        key = _relabel_key(G, perm)
        if best is None or key < best:
            best = key
    flat, inv = best
    dot = [flat[i * n:(i + 1) * n] for i in range(n)]
    return EffectGroupoid(n, dot, inv, 0, n - 1)


def is_isomorphic(G1: EffectGroupoid, G2: EffectGroupoid) -> bool:
    if G1.size != G2.size:
        return False
    return canonical_form(G1).key() == canonical_form(G2).key()


# --- pruned search ---------------------------------------------------------


def standard_involutions(n: int) -> list[tuple[int, ...]]:
    """One involution per conjugacy class on the middle elements, with inv[0] = n-1."""
    if n == 1:
        return [(0,)]
    m = n - 2
    out = []
    for fixed in range(m % 2, m + 1, 2):
        inv = list(range(n))
        inv[0], inv[n - 1] = n - 1, 0
        for k in range(1 + fixed, n - 1, 2):
            inv[k], inv[k + 1] = k + 1, k
        out.append(tuple(inv))
    return out


class _PartialChecker:
    """Vectorised NG4-NG8 check on a table whose unknown cells hold ``n``."""

    def __init__(self, n: int, inv: tuple[int, ...]):
        self.n = n
        self.inv = np.array(list(inv) + [n], dtype=np.int64)
        x, y = np.meshgrid(np.arange(n), np.arange(n), indexing="ij")
        self.px, self.py = x.ravel(), y.ravel()
        x, y, z = np.meshgrid(np.arange(n), np.arange(n), np.arange(n), indexing="ij")
        self.tx, self.ty, self.tz = x.ravel(), y.ravel(), z.ravel()

    def ok(self, T: np.ndarray) -> bool:
        U = self.n
        I = self.inv

        def known(a):
            return a != U

        def differ(a, b):
            return known(a) & known(b) & (a != b)

        x, y = self.px, self.py
        yx = T[y, I[x]]
        a, b = T[x, yx], T[yx, x]
        if np.any((known(a) & (a != 0)) | (known(b) & (b != 0))):
            return False
        lhs = T[x, y]
        rhs = T[y, I[T[I[T[I[y], I[x]]], I[x]]]]
        if np.any(differ(lhs, rhs)):
            return False
        u = I[T[I[y], x]]
        a, b, c = T[x, u], T[u, x], T[I[T[I[x], y]], y]
        if np.any(differ(a, b) | differ(b, c) | differ(a, c)):
            return False

        x, y, z = self.tx, self.ty, self.tz
        iy = I[y]
        xz, yz = T[x, z], T[y, z]
        lhs = T[I[T[I[T[x, iy]], iy]], z]
        rhs = I[T[I[T[xz, I[yz]]], I[yz]]]
        if np.any(differ(lhs, rhs)):
            return False
        xy = T[x, y]
        hyp = (T[I[x], iy] == 0) & (T[I[xy], I[z]] == 0)
        c1 = T[iy, I[z]]
        c2 = T[I[x], I[yz]]
        l3, r3 = T[xy, z], T[x, yz]
        bad = (known(c1) & (c1 != 0)) | (known(c2) & (c2 != 0)) | differ(l3, r3)
        return not np.any(hyp & bad)


def _search_involution(n: int, inv: tuple[int, ...]) -> list[tuple]:
    """Canonical keys of all effect groupoids with this involution."""
    U = n
    T = np.full((n + 1, n + 1), U, dtype=np.int64)
    top = n - 1
    for a in range(n):
        T[0, a] = T[a, 0] = 0
        T[top, a] = a
        T[a, top] = a
    T[0, top] = T[top, 0] = 0
    for x in range(1, top):
        T[x, inv[x]] = 0
        T[inv[x], x] = 0
    cells = [(i, j) for i in range(1, top) for j in range(1, top) if T[i, j] == U]
    checker = _PartialChecker(n, inv)
    if not checker.ok(T):
        return []
    found = set()

    def rec(k: int):
        if k == len(cells):
            G = EffectGroupoid(n, T[:n, :n].tolist(), inv, 0, top)
            if is_effect_groupoid(G):
                found.add(canonical_form(G).key())
            return
        i, j = cells[k]
        for v in range(n):
            T[i, j] = v
            if checker.ok(T):
                rec(k + 1)
        T[i, j] = U

    rec(0)
    return sorted(found)


def _search_task(args):
    n, inv = args
    return _search_involution(n, inv)


def _from_key(n: int, key: tuple) -> EffectGroupoid:
    flat, inv = key
    return EffectGroupoid(n, [flat[i * n:(i + 1) * n] for i in range(n)], inv, 0, n - 1)


def enumerate_size(n: int, jobs: int = 1) -> list[EffectGroupoid]:
    tasks = [(n, inv) for inv in standard_involutions(n)]
    if jobs > 1 and len(tasks) > 1:
        with ProcessPoolExecutor(max_workers=jobs) as pool:
            parts = list(pool.map(_search_task, tasks))
    else:
        parts = [_search_task(t) for t in tasks]
    keys = sorted(set(itertools.chain.from_iterable(parts)))
    return [_from_key(n, k) for k in keys]


# --- unpruned oracle -------------------------------------------------------


def _all_involutions(n: int) -> Iterator[tuple[int, ...]]:
    for perm in itertools.permutations(range(n)):
        if all(perm[perm[i]] == i for i in range(n)):
            yield perm


def brute_force_keys(n: int, full_tables: bool = False) -> list[tuple]:
    """Canonical keys of every effect groupoid on ``{0..n-1}``, by plain filtering.

    Every involution and every choice of zero is tried. With ``full_tables`` all
    ``n**(n*n)`` tables are filtered; otherwise only the cells outside the zero
    and one rows/columns are free (those borders are fixed by NG0 and NG2) and
    everything else is left to the axiom check.
    """
    found = set()
    for inv in _all_involutions(n):
        for zero in range(n):
            one = inv[zero]
            if n > 1 and one == zero:
                continue
            if full_tables:
                free = [(i, j) for i in range(n) for j in range(n)]
            else:
                free = [(i, j) for i in range(n) for j in range(n) if i not in (zero, one) and j not in (zero, one)]
            base = [[0] * n for _ in range(n)]
            for a in range(n):
                base[zero][a] = base[a][zero] = zero
            for a in range(n):
                base[one][a] = a
                base[a][one] = a
            base[zero][one] = base[one][zero] = zero
            for values in itertools.product(range(n), repeat=len(free)):
                for (i, j), v in zip(free, values):
                    base[i][j] = v
                G = EffectGroupoid(n, base, inv, zero, one)
                if is_effect_groupoid(G):
                    found.add(canonical_form(G).key())
    return sorted(found)


# --- catalog ----------------------------------------------------------------


@dataclass(frozen=True)
class Catalog:
    bound: int
    entries: dict[int, tuple[EffectGroupoid, ...]]

    def models(self) -> Iterator[EffectGroupoid]:
        for n in sorted(self.entries):
            yield from self.entries[n]

    def counts(self) -> dict[int, int]:
        return {n: len(self.entries[n]) for n in sorted(self.entries)}

    def restricted(self, bound: int) -> "Catalog":
        return Catalog(min(bound, self.bound), {n: e for n, e in self.entries.items() if n <= bound})

    def __len__(self) -> int:
        return sum(self.counts().values())


def model_flags(G: EffectGroupoid) -> dict:
    return {
        "commutative": is_commutative(G),
        "idempotent": is_idempotent(G),
        "associative": is_associative(G),
        "blocks": len(blocks(G)),
    }


def enumerate_groupoids(bound: int, jobs: int = 1) -> Catalog:
    cap = size_cap()
    if not 1 <= bound <= cap:
        raise ValueError(f"size bound must be between 1 and {cap}, got {bound}")
    return Catalog(bound, {n: tuple(enumerate_size(n, jobs)) for n in range(1, bound + 1)})


class CatalogError(ValueError):
    pass


def _flags_line(G: EffectGroupoid) -> str:
    f = model_flags(G)
    yn = {True: "yes", False: "no"}
    return (
        f"# commutative={yn[f['commutative']]} idempotent={yn[f['idempotent']]} "
        f"associative={yn[f['associative']]} blocks={f['blocks']}"
    )


def format_catalog(c: Catalog) -> str:
    body = [f"bound: {c.bound}"]
    for n in sorted(c.entries):
        for k, G in enumerate(c.entries[n]):
            body.append("---")
            body.append(f"# entry size={n} index={k}")
            body.append(_flags_line(G))
            body.append(format_structure(G).rstrip("\n"))
    body_text = "\n".join(body) + "\n"
    digest = hashlib.sha256(body_text.encode("utf-8")).hexdigest()
    counts = " ".join(f"{n}={m}" for n, m in c.counts().items())
    return f"{CATALOG_HEADER}\n{body_text}===\ncounts: {counts}\nchecksum: sha256:{digest}\n"


def parse_catalog(text: str) -> Catalog:
    if not text.startswith(CATALOG_HEADER + "\n"):
        first = text.split("\n", 1)[0]
        if first.startswith("lea-catalog"):
            raise CatalogError(f"unsupported catalog version {first!r}")
        raise CatalogError("not a catalog file (missing header)")
    rest = text[len(CATALOG_HEADER) + 1:]
    body_text, sep, footer = rest.rpartition("===\n")
    if not sep:
        raise CatalogError("truncated catalog: footer missing")
    flines = footer.splitlines()
    if len(flines) != 2 or not flines[0].startswith("counts:") or not flines[1].startswith("checksum: sha256:"):
        raise CatalogError("truncated or malformed catalog footer")
    digest = hashlib.sha256(body_text.encode("utf-8")).hexdigest()
    if flines[1] != f"checksum: sha256:{digest}":
        raise CatalogError("checksum mismatch")

    chunks = body_text.split("---\n")
    head = chunks[0].strip()
    if not head.startswith("bound:"):
        raise CatalogError("missing bound line")
    try:
        bound = int(head.split(":", 1)[1])
    except ValueError:
        raise CatalogError(f"bad bound line {head!r}") from None
    entries: dict[int, list[EffectGroupoid]] = {n: [] for n in range(1, bound + 1)}
    for k, chunk in enumerate(chunks[1:]):
        try:
            G = parse_structure(chunk)
        except FormatError as exc:
            raise CatalogError(f"entry {k}: {exc}") from None
        if not isinstance(G, EffectGroupoid):
            raise CatalogError(f"entry {k}: not an effect groupoid")
        report = check_ng_axioms(G)
        if not report.ok:
            failed = ", ".join(r.name for r in report.failures())
            raise CatalogError(f"entry {k}: axiom(s) {failed} fail")
        if G.size not in entries:
            raise CatalogError(f"entry {k}: size {G.size} exceeds bound {bound}")
        if canonical_form(G).key() != G.key():
            raise CatalogError(f"entry {k}: not in canonical form")
        entries[G.size].append(G)
    for n, es in entries.items():
        keys = [G.key() for G in es]
        if keys != sorted(set(keys)):
            raise CatalogError(f"size {n}: entries not strictly ordered")
    c = Catalog(bound, {n: tuple(es) for n, es in entries.items()})
    expected = "counts: " + " ".join(f"{n}={m}" for n, m in c.counts().items())
    if flines[0] != expected:
        raise CatalogError(f"footer counts {flines[0]!r} do not match entries")
    return c


def write_catalog(c: Catalog, path) -> None:
    with open(path, "w", encoding="utf-8", newline="\n") as fh:
        fh.write(format_catalog(c))


def read_catalog(path) -> Catalog:
    with open(path, encoding="utf-8", newline="") as fh:
        return parse_catalog(fh.read())


_cache: dict[int, Catalog] = {}


def cached_catalog(bound: int) -> Catalog:
    """Enumerate once per process; later calls reuse the largest catalog built so far."""
    for b, c in _cache.items():
        if b >= bound:
            return c.restricted(bound)
    c = enumerate_groupoids(bound)
    _cache[bound] = c
    return c


def find_isomorphic(c: Catalog, G: EffectGroupoid) -> Optional[int]:
    key = canonical_form(G).key()
    for k, H in enumerate(c.entries.get(G.size, ())):
        if H.key() == key:
            return k
    return None
