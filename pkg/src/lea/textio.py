"""Line-based text format for effect algebras and effect groupoids.

::

    kind: effect-algebra
    size: 3
    names: 0 a 1
    zero: 0
    one: 2
    inv: 2 1 0
    table:
    0 1 2
    1 2 -
    2 - -

``-`` marks an undefined sum (effect algebras only); ``#`` starts a comment.
"""

from __future__ import annotations

from typing import Union

from .algebra import EffectAlgebra, MalformedTable
from .groupoid import EffectGroupoid

Structure = Union[EffectAlgebra, EffectGroupoid]

KIND_EFFECT = "effect-algebra"
KIND_GROUPOID = "effect-groupoid"


class FormatError(ValueError):
    pass


def _strip(line: str) -> str:
    return line.split("#", 1)[0].strip()


def _ints(text: str, what: str) -> list[int]:
    try:
        return [int(tok) for tok in text.split()]
    except ValueError:
        raise FormatError(f"{what}: expected integers, got {text!r}") from None


def parse_structure(text: str) -> Structure:
    lines = [_strip(ln) for ln in text.splitlines()]
    lines = [ln for ln in lines if ln]
    return _parse_lines(lines)


def _parse_lines(lines: list[str]) -> Structure:
    fields: dict[str, str] = {}
    rows: list[str] = []
    k = 0
    while k < len(lines):
        key, sep, value = lines[k].partition(":")
        if not sep:
            raise FormatError(f"expected 'key: value', got {lines[k]!r}")
        key = key.strip()
        if key in fields:
            raise FormatError(f"duplicate field {key!r}")
        if key == "table":
            rows = lines[k + 1:]
            fields[key] = ""
            break
        if key not in ("kind", "size", "names", "zero", "one", "inv"):
            raise FormatError(f"unknown field {key!r}")
        fields[key] = value.strip()
        k += 1

    for req in ("kind", "size", "zero", "one", "inv", "table"):
        if req not in fields:
            raise FormatError(f"missing field {req!r}")
    kind = fields["kind"]
    if kind not in (KIND_EFFECT, KIND_GROUPOID):
        raise FormatError(f"unknown kind {kind!r}")
    try:
        n = int(fields["size"])
    except ValueError:
        raise FormatError(f"size: expected an integer, got {fields['size']!r}") from None
    if len(rows) != n:
        raise FormatError(f"table: expected {n} rows, got {len(rows)}")
    table = []
    for r, row in enumerate(rows):
        cells = row.split()
        if len(cells) != n:
            raise FormatError(f"table row {r}: expected {n} entries, got {len(cells)}")
        parsed = []
        for c in cells:
            if c == "-":
                if kind == KIND_GROUPOID:
                    raise FormatError(f"table row {r}: '-' is not allowed in a groupoid")
                parsed.append(None)
            else:
                try:
                    parsed.append(int(c))
                except ValueError:
                    raise FormatError(f"table row {r}: bad entry {c!r}") from None
        table.append(parsed)
    inv = _ints(fields["inv"], "inv")
    zero = _ints(fields["zero"], "zero")
    one = _ints(fields["one"], "one")
    if len(zero) != 1 or len(one) != 1:
        raise FormatError("zero and one take a single index")
    names = tuple(fields["names"].split()) if "names" in fields else None
    cls = EffectAlgebra if kind == KIND_EFFECT else EffectGroupoid
    try:
        return cls(n, table, inv, zero[0], one[0], names)
    except MalformedTable as exc:
        raise FormatError(str(exc)) from None


def format_structure(s: Structure) -> str:
    if isinstance(s, EffectAlgebra):
        kind, table = KIND_EFFECT, s.plus
    else:
        kind, table = KIND_GROUPOID, s.dot
    width = len(str(s.size - 1))
    out = [f"kind: {kind}", f"size: {s.size}"]
    if s.names:
        out.append("names: " + " ".join(s.names))
    out += [
        f"zero: {s.zero}",
        f"one: {s.one}",
        "inv: " + " ".join(map(str, s.inv)),
        "table:",
    ]
    for row in table:
        out.append(" ".join(("-" if v is None else str(v)).rjust(width) for v in row))
    return "\n".join(out) + "\n"


def read_structure(path) -> Structure:
    with open(path, encoding="utf-8") as fh:
        return parse_structure(fh.read())


def write_structure(s: Structure, path) -> None:
    with open(path, "w", encoding="utf-8") as fh:
        fh.write(format_structure(s))
