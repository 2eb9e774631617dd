from .formula import (
    BOT,
    TOP,
    Bot,
    Formula,
    Meta,
    Neg,
    ParseError,
    Prod,
    Sequent,
    Top,
    Var,
    chi,
    chi_literal,
    parse_formula,
    parse_sequent,
    print_formula,
    print_sequent,
    variables,
)
from .rules import CHI_LITERAL, CHI_NG7, Rule, rule_table
from .proof import CheckResult, NodeError, ProofNode, check_proof, format_proof, parse_proof, parse_proofs
from .derived import DERIVED_RULES, derived_conclusion, expand_derived
from .semantics import (
    countermodel,
    eval_formula,
    falsifying_valuation,
    rule_soundness,
    sequent_valid_in,
    soundness_sweep,
)
