"""The bundled proof corpus: every primitive rule and every derived rule at least once."""

from __future__ import annotations

from importlib import resources

from .derived import expand_derived
from .formula import BOT, TOP, Formula, Neg, Prod, Sequent, Var, parse_formula
from .proof import ProofNode, format_proof, parse_proofs
from .rules import CHI_NG7, instantiate_sequent, rule_table

P, Q, R = Var("p"), Var("q"), Var("r")


def _axiom(rule: str, **binds: Formula) -> ProofNode:
    scheme = rule_table(CHI_NG7)[rule].conclusion
    return ProofNode(rule, instantiate_sequent(scheme, binds))


def _node(rule: str, lhs: Formula, rhs: Formula, *premises: ProofNode) -> ProofNode:
    return ProofNode(rule, Sequent(lhs, rhs), premises)


def _axiom_instances() -> list[tuple[str, ProofNode]]:
    f = parse_formula
    out = []
    plain = {
        "DN": dict(phi=P),
        "1-l": dict(phi=f("p * q")),
        "1-r": dict(phi=f("~p")),
        "0-l": dict(phi=P),
        "0-r": dict(phi=f("p * ~q")),
        "ol": dict(phi=P, psi=Q),
        "or": dict(phi=P, psi=f("q * r")),
        "cm": dict(phi=P, psi=Q),
        "mc": dict(phi=P, psi=Q),
        "ocm": dict(phi=P, psi=Q),
        "mds": dict(phi=P, psi=Q, mu=R),
    }
    for name, binds in plain.items():
        for direction in ("lr", "rl"):
            rule = f"{name}/{direction}"
            out.append((rule, _axiom(rule, **binds)))
    return out


def _inference_instances() -> list[tuple[str, ProofNode]]:
    nnp = Neg(Neg(P))
    dn_lr = _axiom("DN/lr", phi=P)   # ~~p |- p
    dn_rl = _axiom("DN/rl", phi=P)   # p |- ~~p
    out = [
        ("neg-r", _node("neg-r", Neg(P), Neg(P), dn_rl)),
        ("itm1", _node("itm1", Prod(nnp, Q), Prod(P, Q), dn_lr, dn_rl)),
        ("itm2", _node("itm2", Prod(Q, nnp), Prod(Q, P), dn_lr, dn_rl)),
        ("m-bot", _node("m-bot", BOT, P, _axiom("0-l/lr", phi=Neg(P)))),
        ("bot-m", _node("bot-m", Prod(P, Neg(P)), BOT, expand_derived("Ax", P))),
        ("cut", _node("cut", P, P, dn_rl, dn_lr)),
    ]
    # premises ~phi |- psi and ~(phi * psi) |- mu
    for tag, phi, psi, mu, first in (
        ("top", P, TOP, TOP, expand_derived("top", Neg(P))),
        ("neg", P, Neg(P), TOP, expand_derived("Ax", Neg(P))),
    ):
        second = expand_derived("top", Neg(Prod(phi, psi)))
        out.append((f"ass1 ({tag})", _node("ass1", Neg(psi), mu, first, second)))
        out.append((f"ass2 ({tag})", _node("ass2", Neg(phi), Prod(psi, mu), first, second)))
        lhs, rhs = Prod(Prod(phi, psi), mu), Prod(phi, Prod(psi, mu))
        out.append((f"ass3/lr ({tag})", _node("ass3/lr", lhs, rhs, first, second)))
        out.append((f"ass3/rl ({tag})", _node("ass3/rl", rhs, lhs, first, second)))
    return out


def _derived_instances() -> list[tuple[str, ProofNode]]:
    pq = Prod(P, Q)
    return [
        ("Ax p", expand_derived("Ax", P)),
        ("Ax p*q", expand_derived("Ax", pq)),
        ("tnb/lr", expand_derived("tnb/lr")),
        ("tnb/rl", expand_derived("tnb/rl")),
        ("ntb/lr", expand_derived("ntb/lr")),
        ("ntb/rl", expand_derived("ntb/rl")),
        ("bot p", expand_derived("bot", P)),
        ("bot ~(p*q)", expand_derived("bot", Neg(pq))),
        ("top p", expand_derived("top", P)),
        ("neg-neg on top p", expand_derived("neg-neg", expand_derived("top", P))),
        ("neg-l on top ~p", expand_derived("neg-l", expand_derived("top", Neg(P)))),
        ("neg-l on DN/lr", expand_derived("neg-l", _axiom("DN/lr", phi=Neg(Q)))),
    ]


def build_corpus() -> list[tuple[str, ProofNode]]:
    return _axiom_instances() + _inference_instances() + _derived_instances()


def format_corpus(entries: list[tuple[str, ProofNode]]) -> str:
    chunks = [f"; {name}\n{format_proof(p)}\n" for name, p in entries]
    return "\n".join(chunks)


def load_bundled() -> list[ProofNode]:
    text = resources.files("lea.data").joinpath("corpus.proof").read_text(encoding="utf-8")
    return parse_proofs(text)
