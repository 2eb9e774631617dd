"""Formula and sequent syntax.

Concrete grammar (``*`` is left-associative, ``~`` binds tighter than ``*``)::

    formula := unary ('*' unary)*
    unary   := '~' unary | atom
    atom    := VAR | 'bot' | 'top' | '(' formula ')'
    sequent := formula '|-' formula

Variables match ``[a-z][a-zA-Z0-9_]*`` minus the keywords. The symbols
``¬ · ⊥ ⊤ ⊢`` are accepted as aliases.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from typing import Iterator, Union


@dataclass(frozen=True)
class Var:
    name: str


@dataclass(frozen=True)
class Meta:
    """A rule metavariable; only appears in rule schemes."""

    name: str


@dataclass(frozen=True)
class Prod:
    left: "Formula"
    right: "Formula"


@dataclass(frozen=True)
class Neg:
    body: "Formula"


@dataclass(frozen=True)
class Bot:
    pass


@dataclass(frozen=True)
class Top:
    pass


Formula = Union[Var, Meta, Prod, Neg, Bot, Top]

BOT = Bot()
TOP = Top()
KEYWORDS = frozenset({"bot", "top"})


@dataclass(frozen=True)
class Sequent:
    lhs: Formula
    rhs: Formula

    def __str__(self) -> str:
        return print_sequent(self)


class ParseError(ValueError):
    def __init__(self, message: str, pos: int):
        super().__init__(f"{message} at position {pos}")
        self.pos = pos


_TOKEN = re.compile(
    r"\s*(?:"
    r"(?P<turnstile>\|-|⊢)"
    r"|(?P<meta>\?[A-Za-z][A-Za-z0-9_]*)"
    r"|(?P<word>[a-z][a-zA-Z0-9_]*)"
    r"|(?P<op>[~¬*·()⊥⊤])"
    r")"
)
_ALIASES = {"¬": "~", "·": "*", "⊥": "bot", "⊤": "top", "⊢": "|-"}


def _tokenize(text: str) -> list[tuple[str, str, int]]:
    tokens = []
    pos = 0
    text_len = len(text)
    while pos < text_len:
        if text[pos].isspace():
            pos += 1
            continue
        m = _TOKEN.match(text, pos)
        if not m or m.end() == pos:
            raise ParseError(f"unexpected character {text[pos]!r}", pos)
        kind = m.lastgroup
        value = m.group(kind)
        start = m.start(kind)
        value = _ALIASES.get(value, value)
        if kind == "op" and value in ("bot", "top"):
            kind = "word"
        tokens.append((kind, value, start))
        pos = m.end()
    tokens.append(("end", "", text_len))
    return tokens


class _Parser:
    def __init__(self, text: str, allow_meta: bool):
        self.tokens = _tokenize(text)
        self.k = 0
        self.allow_meta = allow_meta

    def peek(self):
        return self.tokens[self.k]

    def take(self):
        tok = self.tokens[self.k]
        self.k += 1
        return tok

    def expect(self, value: str):
        kind, v, pos = self.take()
        if v != value:
            shown = "end of input" if kind == "end" else repr(v)
            raise ParseError(f"expected {value!r}, found {shown}", pos)

    def formula(self) -> Formula:
        f = self.unary()
        while self.peek()[1] == "*":
            self.take()
            f = Prod(f, self.unary())
        return f

    def unary(self) -> Formula:
        if self.peek()[1] == "~":
            self.take()
            return Neg(self.unary())
        return self.atom()

    def atom(self) -> Formula:
        kind, value, pos = self.take()
        if kind == "word":
            if value == "bot":
                return BOT
            if value == "top":
                return TOP
            return Var(value)
        if kind == "meta":
            if not self.allow_meta:
                raise ParseError(f"metavariable {value!r} not allowed here", pos)
            return Meta(value[1:])
        if value == "(":
            f = self.formula()
            self.expect(")")
            return f
        shown = "end of input" if kind == "end" else repr(value)
        raise ParseError(f"expected a formula, found {shown}", pos)

    def finish(self):
        kind, value, pos = self.peek()
        if kind != "end":
            raise ParseError(f"unexpected {value!r}", pos)


def parse_formula(text: str, allow_meta: bool = False) -> Formula:
    p = _Parser(text, allow_meta)
    f = p.formula()
    p.finish()
    return f


def parse_sequent(text: str, allow_meta: bool = False) -> Sequent:
    p = _Parser(text, allow_meta)
    lhs = p.formula()
    p.expect("|-")
    rhs = p.formula()
    p.finish()
    return Sequent(lhs, rhs)


def print_formula(f: Formula) -> str:
    if isinstance(f, Var):
        return f.name
    if isinstance(f, Meta):
        return "?" + f.name
    if isinstance(f, Bot):
        return "bot"
    if isinstance(f, Top):
        return "top"
    if isinstance(f, Neg):
        body = print_formula(f.body)
        return "~(" + body + ")" if isinstance(f.body, Prod) else "~" + body
    if isinstance(f, Prod):
        right = print_formula(f.right)
        if isinstance(f.right, Prod):
            right = "(" + right + ")"
        return print_formula(f.left) + " * " + right
    raise TypeError(f"not a formula: {f!r}")


def print_sequent(s: Sequent) -> str:
    return f"{print_formula(s.lhs)} |- {print_formula(s.rhs)}"


def subformulas(f: Formula) -> Iterator[Formula]:
    yield f
    if isinstance(f, Prod):
        yield from subformulas(f.left)
        yield from subformulas(f.right)
    elif isinstance(f, Neg):
        yield from subformulas(f.body)


def variables(*formulas: Formula) -> list[str]:
    """Distinct variable names in order of first occurrence."""
    seen: dict[str, None] = {}
    for f in formulas:
        for g in subformulas(f):
            if isinstance(g, Var):
                seen.setdefault(g.name, None)
    return list(seen)


def chi(phi: Formula, psi: Formula) -> Formula:
    """``~(~(phi * ~psi) * ~psi)``, the join of ``phi`` and ``psi``."""
    return Neg(Prod(Neg(Prod(phi, Neg(psi))), Neg(psi)))


def chi_literal(phi: Formula, psi: Formula) -> Formula:
    """``~(~(phi * ~phi) * ~phi)``; ignores ``psi``."""
    return Neg(Prod(Neg(Prod(phi, Neg(phi))), Neg(phi)))
