"""Derived rules, expanded into trees of primitive rule instances."""

from __future__ import annotations

from typing import Union

from .formula import BOT, TOP, Formula, Neg, Prod, Sequent
from .proof import ProofNode

DERIVED_RULES = ("Ax", "tnb/lr", "tnb/rl", "ntb/lr", "ntb/rl", "bot", "top", "neg-neg", "neg-l")
_ALIASES = {"¬-¬": "neg-neg", "¬-l": "neg-l"}


class UnknownRule(ValueError):
    pass


def _n(rule: str, lhs: Formula, rhs: Formula, *premises: ProofNode) -> ProofNode:
    return ProofNode(rule, Sequent(lhs, rhs), premises)


def _cut(left: ProofNode, right: ProofNode) -> ProofNode:
    return _n("cut", left.conclusion.lhs, right.conclusion.rhs, left, right)


def _m_bot(premise: ProofNode) -> ProofNode:
    # premise: phi * ~psi |- bot
    lhs = premise.conclusion.lhs
    return _n("m-bot", lhs.left, lhs.right.body, premise)


def _itm2(mu: Formula, forward: ProofNode, backward: ProofNode) -> ProofNode:
    # forward: phi |- psi, backward: psi |- phi; gives mu * phi |- mu * psi
    phi, psi = forward.conclusion.lhs, forward.conclusion.rhs
    return _n("itm2", Prod(mu, phi), Prod(mu, psi), forward, backward)


def ax(phi: Formula) -> ProofNode:
    """``phi |- phi`` from (ol) with psi = top, then (m-bot)."""
    t_neg = Prod(TOP, Neg(phi))
    ol = _n("ol/rl", Prod(phi, t_neg), BOT)
    to_unit = _n("1-l/rl", Neg(phi), t_neg)
    from_unit = _n("1-l/lr", t_neg, Neg(phi))
    widened = _itm2(phi, to_unit, from_unit)
    return _m_bot(_cut(widened, ol))


def bot(phi: Formula) -> ProofNode:
    return _m_bot(_n("0-l/lr", Prod(BOT, Neg(phi)), BOT))


def tnb_lr() -> ProofNode:
    """``top |- ~bot``."""
    nnb = Neg(Neg(BOT))
    swap = _itm2(TOP, _n("DN/lr", nnb, BOT), _n("DN/rl", BOT, nnb))
    return _m_bot(_cut(swap, _n("0-r/lr", Prod(TOP, BOT), BOT)))


def tnb_rl() -> ProofNode:
    """``~bot |- top``."""
    body = Prod(Neg(BOT), Neg(TOP))
    unit = _n("1-l/rl", body, Prod(TOP, body))
    ol = _n("ol/rl", Prod(TOP, body), BOT)
    return _m_bot(_cut(unit, ol))


def ntb_lr() -> ProofNode:
    """``~top |- bot``."""
    to_nnt = _cut(tnb_rl(), _n("DN/rl", TOP, Neg(Neg(TOP))))
    flipped = _n("neg-r", Neg(TOP), Neg(Neg(BOT)), to_nnt)
    return _cut(flipped, _n("DN/lr", Neg(Neg(BOT)), BOT))


def ntb_rl() -> ProofNode:
    """``bot |- ~top``."""
    return bot(Neg(TOP))


def top(phi: Formula) -> ProofNode:
    """``phi |- top`` via (itm2) on (ntb), then (0-r), (cut), (m-bot)."""
    swap = _itm2(phi, ntb_lr(), ntb_rl())
    return _m_bot(_cut(swap, _n("0-r/lr", Prod(phi, BOT), BOT)))


def neg_neg(sub: ProofNode) -> ProofNode:
    """From ``phi |- psi`` derive ``~psi |- ~phi``."""
    phi, psi = sub.conclusion.lhs, sub.conclusion.rhs
    to_nn = _cut(sub, _n("DN/rl", psi, Neg(Neg(psi))))
    return _n("neg-r", Neg(psi), Neg(phi), to_nn)


def neg_l(sub: ProofNode) -> ProofNode:
    """From ``~phi |- psi`` derive ``~psi |- phi``."""
    lhs = sub.conclusion.lhs
    if not isinstance(lhs, Neg):
        raise ValueError("(neg-l) needs a premise of the form ~phi |- psi")
    phi = lhs.body
    return _cut(neg_neg(sub), _n("DN/lr", Neg(Neg(phi)), phi))


def expand_derived(rule: str, *args: Union[Formula, ProofNode]) -> ProofNode:
    rule = _ALIASES.get(rule, rule)
    if rule == "Ax":
        return ax(*args)
    if rule == "bot":
        return bot(*args)
    if rule == "top":
        return top(*args)
    if rule == "tnb/lr":
        return tnb_lr(*args)
    if rule == "tnb/rl":
        return tnb_rl(*args)
    if rule == "ntb/lr":
        return ntb_lr(*args)
    if rule == "ntb/rl":
        return ntb_rl(*args)
    if rule == "neg-neg":
        return neg_neg(*args)
    if rule == "neg-l":
        return neg_l(*args)
    raise UnknownRule(f"unknown derived rule {rule!r}; known: {', '.join(DERIVED_RULES)}")


def derived_conclusion(rule: str, *args: Union[Formula, ProofNode]) -> Sequent:
    """The conclusion each derived rule promises, written out independently of its expansion."""
    rule = _ALIASES.get(rule, rule)
    if rule == "Ax":
        return Sequent(args[0], args[0])
    if rule == "bot":
        return Sequent(BOT, args[0])
    if rule == "top":
        return Sequent(args[0], TOP)
    if rule == "tnb/lr":
        return Sequent(TOP, Neg(BOT))
    if rule == "tnb/rl":
        return Sequent(Neg(BOT), TOP)
    if rule == "ntb/lr":
        return Sequent(Neg(TOP), BOT)
    if rule == "ntb/rl":
        return Sequent(BOT, Neg(TOP))
    if rule == "neg-neg":
        s = args[0].conclusion
        return Sequent(Neg(s.rhs), Neg(s.lhs))
    if rule == "neg-l":
        s = args[0].conclusion
        return Sequent(Neg(s.rhs), s.lhs.body)
    raise UnknownRule(f"unknown derived rule {rule!r}")
