"""Derivation trees and the proof checker.

Proof file syntax (whitespace-insensitive, ``;`` comments)::

    (m-bot "bot |- p"
      (0-l/lr "bot * ~p |- bot"))

    (mds/lr "..." :bind psi "q" ...)
"""

from __future__ import annotations

import re
from dataclasses import dataclass, field
from typing import Optional

from .formula import Formula, ParseError, Sequent, parse_formula, parse_sequent, print_formula, print_sequent
from .rules import CHI_NG7, match_sequent, resolve_rule_name, rule_table


@dataclass(frozen=True)
class ProofNode:
    rule: str
    conclusion: Sequent
    premises: tuple["ProofNode", ...] = ()
    bindings: tuple[tuple[str, Formula], ...] = field(default=())

    def __post_init__(self):
        object.__setattr__(self, "premises", tuple(self.premises))
        b = self.bindings
        if isinstance(b, dict):
            b = b.items()
        object.__setattr__(self, "bindings", tuple(sorted(b)))

    def nodes(self):
        yield (), self
        for k, p in enumerate(self.premises):
            for path, node in p.nodes():
                yield (k, *path), node

    def size(self) -> int:
        return sum(1 for _ in self.nodes())


@dataclass(frozen=True)
class NodeError:
    path: tuple[int, ...]
    rule: str
    kind: str  # unknown-rule | arity | mismatch | unbound | binding
    message: str

    def __str__(self) -> str:
        where = "root" if not self.path else "root." + ".".join(map(str, self.path))
        return f"{where} [{self.rule}] {self.kind}: {self.message}"


@dataclass(frozen=True)
class CheckResult:
    errors: tuple[NodeError, ...]

    @property
    def ok(self) -> bool:
        return not self.errors

    def __bool__(self) -> bool:
        return self.ok


def _check_node(node: ProofNode, path, table) -> Optional[NodeError]:
    name = resolve_rule_name(node.rule)
    rule = table.get(name)
    if rule is None:
        return NodeError(path, node.rule, "unknown-rule", f"no primitive rule named {node.rule!r}")
    if len(node.premises) != rule.arity:
        return NodeError(
            path, node.rule, "arity",
            f"expects {rule.arity} premise(s), got {len(node.premises)}",
        )
    metas = rule.metavariables()
    subst: dict[str, Formula] = {}
    for key, value in node.bindings:
        if key not in metas:
            return NodeError(path, node.rule, "binding", f"rule has no metavariable {key!r}")
        subst[key] = value
    s = match_sequent(rule.conclusion, node.conclusion, subst)
    if s is None:
        return NodeError(
            path, node.rule, "mismatch",
            f"conclusion {print_sequent(node.conclusion)!r} does not fit "
            f"{print_sequent(rule.conclusion)!r}",
        )
    for k, (scheme, prem) in enumerate(zip(rule.premises, node.premises)):
        s = match_sequent(scheme, prem.conclusion, s)
        if s is None:
            return NodeError(
                path, node.rule, "mismatch",
                f"premise {k} {print_sequent(prem.conclusion)!r} does not fit "
                f"{print_sequent(scheme)!r} under the bindings so far",
            )
    free = [m for m in metas if m not in s]
    if free:
        return NodeError(
            path, node.rule, "unbound",
            "metavariable(s) " + ", ".join(free) + " not determined; supply :bind",
        )
    return None


def check_proof(p: ProofNode, chi_form: str = CHI_NG7) -> CheckResult:
    table = rule_table(chi_form)
    errors = []
    for path, node in p.nodes():
        err = _check_node(node, path, table)
        if err is not None:
            errors.append(err)
    return CheckResult(tuple(errors))


# --- proof file syntax ---------------------------------------------------

_PTOKEN = re.compile(r'\s*(?:(;[^\n]*)|(\()|(\))|"((?:[^"\\]|\\.)*)"|(:bind)\b|([^\s()";]+))')


class ProofSyntaxError(ValueError):
    pass


def _ptokens(text: str):
    pos = 0
    out = []
    while True:
        while pos < len(text) and text[pos].isspace():
            pos += 1
        if pos >= len(text):
            break
        m = _PTOKEN.match(text, pos)
        if not m or m.end() == pos:
            raise ProofSyntaxError(f"unexpected character {text[pos]!r} at position {pos}")
        comment, lp, rp, string, bind, atom = m.groups()
        if comment is None:
            if lp:
                out.append(("(", None, m.start(2)))
            elif rp:
                out.append((")", None, m.start(3)))
            elif string is not None:
                out.append(("str", string.replace('\\"', '"').replace("\\\\", "\\"), m.start(4)))
            elif bind:
                out.append(("bind", None, m.start(5)))
            else:
                out.append(("atom", atom, m.start(6)))
        pos = m.end()
    return out


def parse_proofs(text: str) -> list[ProofNode]:
    toks = _ptokens(text)
    k = 0

    def node() -> ProofNode:
        nonlocal k
        if k >= len(toks) or toks[k][0] != "(":
            raise ProofSyntaxError(f"expected '(' at token {k}")
        k += 1
        if k >= len(toks) or toks[k][0] != "atom":
            raise ProofSyntaxError("expected a rule identifier after '('")
        rule = toks[k][1]
        k += 1
        if k >= len(toks) or toks[k][0] != "str":
            raise ProofSyntaxError(f"expected a quoted conclusion after rule {rule!r}")
        try:
            concl = parse_sequent(toks[k][1])
        except ParseError as exc:
            raise ProofSyntaxError(f"bad conclusion for {rule!r}: {exc}") from None
        k += 1
        bindings = {}
        while k < len(toks) and toks[k][0] == "bind":
            if k + 2 >= len(toks) or toks[k + 1][0] != "atom" or toks[k + 2][0] != "str":
                raise ProofSyntaxError("expected :bind <name> \"<formula>\"")
            try:
                bindings[toks[k + 1][1]] = parse_formula(toks[k + 2][1])
            except ParseError as exc:
                raise ProofSyntaxError(f"bad binding formula: {exc}") from None
            k += 3
        premises = []
        while k < len(toks) and toks[k][0] == "(":
            premises.append(node())
        if k >= len(toks) or toks[k][0] != ")":
            raise ProofSyntaxError(f"expected ')' to close rule {rule!r}")
        k += 1
        return ProofNode(rule, concl, tuple(premises), bindings)

    proofs = []
    while k < len(toks):
        proofs.append(node())
    return proofs


def parse_proof(text: str) -> ProofNode:
    proofs = parse_proofs(text)
    if len(proofs) != 1:
        raise ProofSyntaxError(f"expected exactly one proof, found {len(proofs)}")
    return proofs[0]


def format_proof(p: ProofNode, indent: int = 0) -> str:
    pad = "  " * indent
    head = f'{pad}({p.rule} "{print_sequent(p.conclusion)}"'
    for key, value in p.bindings:
        head += f' :bind {key} "{print_formula(value)}"'
    if not p.premises:
        return head + ")"
    body = "\n".join(format_proof(q, indent + 1) for q in p.premises)
    return head + "\n" + body + ")"
