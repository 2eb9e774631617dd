"""Primitive rules of the calculus as schemes over metavariables.

Two-way axioms (``A -||- B``) are split into ``<id>/lr`` (``A |- B``) and
``<id>/rl`` (``B |- A``). ``ass3`` carries premises and is split the same way.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from typing import Optional

from .formula import (
    Formula,
    Meta,
    Neg,
    Prod,
    Sequent,
    chi,
    chi_literal,
    parse_sequent,
    subformulas,
)

CHI_NG7 = "ng7"
CHI_LITERAL = "literal"


@dataclass(frozen=True)
class Rule:
    name: str
    premises: tuple[Sequent, ...]
    conclusion: Sequent

    @property
    def arity(self) -> int:
        return len(self.premises)

    def metavariables(self) -> list[str]:
        seen: dict[str, None] = {}
        for s in (*self.premises, self.conclusion):
            for side in (s.lhs, s.rhs):
                for g in subformulas(side):
                    if isinstance(g, Meta):
                        seen.setdefault(g.name, None)
        return list(seen)


def _s(text: str) -> Sequent:
    return parse_sequent(text, allow_meta=True)


# (name, lhs, rhs) of the two-way axioms, without premises.
_TWO_WAY_AXIOMS = [
    ("DN", "~~?phi", "?phi"),
    ("1-l", "top * ?phi", "?phi"),
    ("1-r", "?phi * top", "?phi"),
    ("0-l", "bot * ?phi", "bot"),
    ("0-r", "?phi * bot", "bot"),
    ("ol", "bot", "?phi * (?psi * ~?phi)"),
    ("or", "bot", "(?psi * ~?phi) * ?phi"),
    ("cm", "?phi * ~(~?psi * ?phi)", "~(~?psi * ?phi) * ?phi"),
    ("mc", "~(~?psi * ?phi) * ?phi", "~(~?phi * ?psi) * ?psi"),
    ("ocm", "?phi * ?psi", "?psi * ~(~(~?psi * ~?phi) * ~?phi)"),
]

_INFERENCE = [
    ("neg-r", ["?phi |- ~?psi"], "?psi |- ~?phi"),
    ("itm1", ["?phi |- ?psi", "?psi |- ?phi"], "?phi * ?mu |- ?psi * ?mu"),
    ("itm2", ["?phi |- ?psi", "?psi |- ?phi"], "?mu * ?phi |- ?mu * ?psi"),
    ("m-bot", ["?phi * ~?psi |- bot"], "?phi |- ?psi"),
    ("bot-m", ["?phi |- ?psi"], "?phi * ~?psi |- bot"),
    ("cut", ["?phi |- ?psi", "?psi |- ?chi"], "?phi |- ?chi"),
    ("ass1", ["~?phi |- ?psi", "~(?phi * ?psi) |- ?mu"], "~?psi |- ?mu"),
    ("ass2", ["~?phi |- ?psi", "~(?phi * ?psi) |- ?mu"], "~?phi |- ?psi * ?mu"),
]

_ASS3 = ("ass3", ["~?phi |- ?psi", "~(?phi * ?psi) |- ?mu"], "(?phi * ?psi) * ?mu", "?phi * (?psi * ?mu)")

ALIASES = {
    "¬-r": "neg-r",
    "m-⊥": "m-bot",
    "⊥-m": "bot-m",
}

AXIOM_NAMES = [name for name, _, _ in _TWO_WAY_AXIOMS] + ["mds"]
INFERENCE_NAMES = [name for name, _, _ in _INFERENCE] + ["ass3"]


def _mds(chi_form: str) -> tuple[Formula, Formula]:
    build = chi if chi_form == CHI_NG7 else chi_literal
    phi, psi, mu = Meta("phi"), Meta("psi"), Meta("mu")
    return Prod(build(phi, psi), mu), build(Prod(phi, mu), Prod(psi, mu))


@lru_cache(maxsize=None)
def rule_table(chi_form: str = CHI_NG7) -> dict[str, Rule]:
    if chi_form not in (CHI_NG7, CHI_LITERAL):
        raise ValueError(f"unknown chi form {chi_form!r}")
    table: dict[str, Rule] = {}

    def two_way(name, lhs, rhs, premises=()):
        table[f"{name}/lr"] = Rule(f"{name}/lr", tuple(premises), Sequent(lhs, rhs))
        table[f"{name}/rl"] = Rule(f"{name}/rl", tuple(premises), Sequent(rhs, lhs))

    for name, lhs, rhs in _TWO_WAY_AXIOMS:
        s = _s(f"{lhs} |- {rhs}")
        two_way(name, s.lhs, s.rhs)
    two_way("mds", *_mds(chi_form))
    for name, prem, concl in _INFERENCE:
        table[name] = Rule(name, tuple(_s(p) for p in prem), _s(concl))
    name, prem, lhs, rhs = _ASS3
    s = _s(f"{lhs} |- {rhs}")
    two_way(name, s.lhs, s.rhs, [_s(p) for p in prem])
    return table


def resolve_rule_name(name: str) -> str:
    base, sep, direction = name.partition("/")
    base = ALIASES.get(base, base)
    return base + sep + direction


def match(pattern: Formula, formula: Formula, subst: dict[str, Formula]) -> Optional[dict[str, Formula]]:
    """Extend ``subst`` so that ``pattern`` instantiates to ``formula``; None if impossible."""
    if isinstance(pattern, Meta):
        bound = subst.get(pattern.name)
        if bound is None:
            out = dict(subst)
            out[pattern.name] = formula
            return out
        return subst if bound == formula else None
    if type(pattern) is not type(formula):
        return None
    if isinstance(pattern, Prod):
        s = match(pattern.left, formula.left, subst)
        return None if s is None else match(pattern.right, formula.right, s)
    if isinstance(pattern, Neg):
        return match(pattern.body, formula.body, subst)
    return subst if pattern == formula else None


def match_sequent(pattern: Sequent, seq: Sequent, subst: dict[str, Formula]) -> Optional[dict[str, Formula]]:
    s = match(pattern.lhs, seq.lhs, subst)
    return None if s is None else match(pattern.rhs, seq.rhs, s)


def instantiate(pattern: Formula, subst: dict[str, Formula]) -> Formula:
    if isinstance(pattern, Meta):
        return subst[pattern.name]
    if isinstance(pattern, Prod):
        return Prod(instantiate(pattern.left, subst), instantiate(pattern.right, subst))
    if isinstance(pattern, Neg):
        return Neg(instantiate(pattern.body, subst))
    return pattern


def instantiate_sequent(pattern: Sequent, subst: dict[str, Formula]) -> Sequent:
    return Sequent(instantiate(pattern.lhs, subst), instantiate(pattern.rhs, subst))
