"""Evaluation of formulas in effect groupoids, validity and countermodels."""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from typing import Iterable, Mapping, Optional

from ..groupoid import EffectGroupoid
from .formula import Bot, Formula, Meta, Neg, Prod, Sequent, Top, Var, print_sequent, variables
from .proof import ProofNode, check_proof
from .rules import CHI_NG7, Rule, rule_table

DEFAULT_MAX_VARIABLES = 4


class UnboundVariable(KeyError):
    pass


class TooManyVariables(ValueError):
    pass


def eval_formula(G: EffectGroupoid, v: Mapping[str, int], f: Formula) -> int:
    if isinstance(f, (Var, Meta)):
        try:
            return v[f.name]
        except KeyError:
            raise UnboundVariable(f.name) from None
    if isinstance(f, Prod):
        return G.dot[eval_formula(G, v, f.left)][eval_formula(G, v, f.right)]
    if isinstance(f, Neg):
        return G.inv[eval_formula(G, v, f.body)]
    if isinstance(f, Bot):
        return G.zero
    if isinstance(f, Top):
        return G.one
    raise TypeError(f"not a formula: {f!r}")


def holds(G: EffectGroupoid, v: Mapping[str, int], s: Sequent) -> bool:
    a, b = eval_formula(G, v, s.lhs), eval_formula(G, v, s.rhs)
    return G.dot[a][G.inv[b]] == G.zero


def valuations(G: EffectGroupoid, names: list[str]):
    for values in itertools.product(range(G.size), repeat=len(names)):
        yield dict(zip(names, values))


def falsifying_valuation(
    G: EffectGroupoid, s: Sequent, max_variables: int = DEFAULT_MAX_VARIABLES
) -> Optional[dict[str, int]]:
    """First valuation (lexicographic over sorted variable names) refuting ``s``."""
    names = sorted(variables(s.lhs, s.rhs))
    if len(names) > max_variables:
        raise TooManyVariables(f"{len(names)} variables exceed the cap of {max_variables}")
    for v in valuations(G, names):
        if not holds(G, v, s):
            return v
    return None


def sequent_valid_in(G: EffectGroupoid, s: Sequent, max_variables: int = DEFAULT_MAX_VARIABLES) -> bool:
    return falsifying_valuation(G, s, max_variables) is None


def _models(catalog) -> Iterable[EffectGroupoid]:
    return catalog.models() if hasattr(catalog, "models") else catalog


def countermodel(s: Sequent, catalog, max_variables: int = DEFAULT_MAX_VARIABLES):
    """First ``(model, valuation)`` in catalog order that refutes ``s``, else None."""
    for G in _models(catalog):
        v = falsifying_valuation(G, s, max_variables)
        if v is not None:
            return G, v
    return None


@dataclass
class SweepReport:
    proofs: int = 0
    models: int = 0
    violations: list[tuple[int, int, str, dict]] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return not self.violations

    def lines(self) -> list[str]:
        out = [f"proofs: {self.proofs}", f"models: {self.models}", f"violations: {len(self.violations)}"]
        for p, m, seq, v in self.violations:
            out.append(f"VIOLATION proof={p} model={m} sequent={seq} valuation={v}")
        return out


def soundness_sweep(proofs: list[ProofNode], catalog, chi_form: str = CHI_NG7) -> SweepReport:
    """Check every proved sequent in every model.

    A violation means the checker, the rules or the catalog is wrong.
    """
    for k, p in enumerate(proofs):
        res = check_proof(p, chi_form)
        if not res.ok:
            raise ValueError(f"proof {k} does not check: {res.errors[0]}")
    models = list(_models(catalog))
    report = SweepReport(proofs=len(proofs), models=len(models))
    for mi, G in enumerate(models):
        for pi, p in enumerate(proofs):
            names = sorted(variables(p.conclusion.lhs, p.conclusion.rhs))
            for v in valuations(G, names):
                if not holds(G, v, p.conclusion):
                    report.violations.append((pi, mi, print_sequent(p.conclusion), v))
                    break
    return report


def rule_sound_in(G: EffectGroupoid, rule: Rule) -> Optional[dict[str, int]]:
    """Metavariable assignment where all premises hold but the conclusion fails, else None.

    Metavariables range directly over the elements of ``G``.
    """
    metas = rule.metavariables()
    for v in valuations(G, metas):
        if all(holds(G, v, p) for p in rule.premises) and not holds(G, v, rule.conclusion):
            return v
    return None


def rule_soundness(models: Iterable[EffectGroupoid], chi_form: str = CHI_NG7) -> list[tuple[str, int, dict]]:
    failures = []
    for mi, G in enumerate(models):
        for name, rule in rule_table(chi_form).items():
            v = rule_sound_in(G, rule)
            if v is not None:
                failures.append((name, mi, v))
    return failures
