"""``lea`` command-line front end.

Exit codes: 0 success / true, 1 checked-false, 2 usage or format error.
"""

from __future__ import annotations

import argparse
import json
import sys
from typing import Optional

from . import algebra, groupoid, transform
from .algebra import EffectAlgebra, InvalidStructure, MalformedTable
from .enumeration import CatalogError, Catalog, enumerate_groupoids, read_catalog, write_catalog
from .groupoid import EffectGroupoid
from .logic import (
    CHI_LITERAL,
    CHI_NG7,
    ParseError,
    check_proof,
    countermodel,
    expand_derived,
    falsifying_valuation,
    format_proof,
    parse_formula,
    parse_proof,
    parse_proofs,
    parse_sequent,
    print_sequent,
    rule_soundness,
    soundness_sweep,
)
from .logic.corpus import load_bundled
from .logic.derived import DERIVED_RULES, UnknownRule
from .logic.proof import ProofSyntaxError
from .logic.semantics import TooManyVariables
from .textio import FormatError, format_structure, read_structure, write_structure

EXIT_OK, EXIT_FALSE, EXIT_USAGE = 0, 1, 2


class UsageError(Exception):
    pass


class _Out:
    def __init__(self, as_json: bool):
        self.as_json = as_json
        self.lines: list[str] = []
        self.data: dict = {}

    def line(self, text: str = ""):
        self.lines.append(text)

    def flush(self):
        if self.as_json:
            sys.stdout.write(json.dumps(self.data, indent=2, sort_keys=True) + "\n")
        else:
            for ln in self.lines:
                sys.stdout.write(ln + "\n")


def _load(path, kind: Optional[str] = None):
    s = read_structure(path)
    if kind == "effect" and not isinstance(s, EffectAlgebra):
        raise UsageError(f"{path}: expected an effect algebra")
    if kind == "groupoid" and not isinstance(s, EffectGroupoid):
        raise UsageError(f"{path}: expected an effect groupoid")
    return s


def _enumerate(bound: int, jobs: int) -> Catalog:
    try:
        return enumerate_groupoids(bound, jobs=jobs)
    except ValueError as exc:
        raise UsageError(str(exc)) from None


def _catalog(args) -> Catalog:
    if args.catalog:
        return read_catalog(args.catalog)
    return _enumerate(args.bound, getattr(args, "jobs", 1))


def cmd_check(args, out: _Out) -> int:
    s = _load(args.file, args.kind)
    if isinstance(s, EffectAlgebra):
        report = algebra.check_effect_axioms(s)
        out.data["kind"] = "effect-algebra"
    else:
        report = groupoid.check_ng_axioms(s)
        out.data["kind"] = "effect-groupoid"
    out.data.update(report.to_dict())
    for ln in report.lines():
        out.line(ln)
    if isinstance(s, EffectAlgebra) and report.ok:
        lattice = s.lattice is not None
        out.data["lattice"] = lattice
        out.line(f"lattice {'yes' if lattice else 'no'}")
    return EXIT_OK if report.ok else EXIT_FALSE


def cmd_order(args, out: _Out) -> int:
    s = _load(args.file)
    rel = s.order
    pairs = [(a, b) for a in range(s.size) for b in range(s.size) if a != b and rel(a, b)]
    out.data["leq"] = [list(row) for row in rel.leq]
    for a, b in pairs:
        out.line(f"{s.name(a)} <= {s.name(b)}")
    return EXIT_OK


def cmd_translate(args, out: _Out) -> int:
    s = _load(args.file)
    if args.to == "groupoid":
        if not isinstance(s, EffectAlgebra):
            raise UsageError("--to groupoid needs an effect algebra")
        result = transform.groupoid_from_effect(s)
    else:
        if not isinstance(s, EffectGroupoid):
            raise UsageError("--to effect needs an effect groupoid")
        result = transform.effect_from_groupoid(s)
    text = format_structure(result)
    out.data["result"] = text
    if args.output:
        write_structure(result, args.output)
        out.line(f"wrote {args.output}")
    else:
        out.lines.extend(text.rstrip("\n").split("\n"))
    return EXIT_OK


def cmd_roundtrip(args, out: _Out) -> int:
    s = _load(args.file)
    if isinstance(s, EffectAlgebra):
        ok = transform.verify_round_trip_effect(s)
        label = "E(R(E)) = E"
    else:
        ok = transform.verify_round_trip_groupoid(s)
        label = "R(E(R)) = R"
    out.data["round_trip"] = ok
    out.line(f"{label} {'PASS' if ok else 'FAIL'}")
    return EXIT_OK if ok else EXIT_FALSE


def cmd_predicates(args, out: _Out) -> int:
    s = _load(args.file)
    if isinstance(s, EffectAlgebra):
        E, G = s, transform.groupoid_from_effect(s)
    else:
        E, G = transform.effect_from_groupoid(s), s
    preds = {
        "idempotent": groupoid.is_idempotent(G),
        "commutative": groupoid.is_commutative(G),
        "associative": groupoid.is_associative(G),
        "orthoalgebra": algebra.is_orthoalgebra(E),
        "mv": algebra.is_mv_effect(E),
    }
    out.data.update(preds)
    for k, v in preds.items():
        out.line(f"{k} {'yes' if v else 'no'}")
    return EXIT_OK


def cmd_blocks(args, out: _Out) -> int:
    s = _load(args.file)
    G = transform.groupoid_from_effect(s) if isinstance(s, EffectAlgebra) else s
    bs = groupoid.blocks(G)
    out.data["blocks"] = [list(b) for b in bs]
    for b in bs:
        out.line(" ".join(G.name(x) for x in b))
    return EXIT_OK


def cmd_enumerate(args, out: _Out) -> int:
    c = _enumerate(args.bound, args.jobs)
    out.data["counts"] = {str(n): m for n, m in c.counts().items()}
    for n, m in c.counts().items():
        out.line(f"size {n}: {m}")
    if args.output:
        write_catalog(c, args.output)
        out.line(f"wrote {args.output}")
    return EXIT_OK


def _chi(args) -> str:
    return CHI_LITERAL if args.chi == "literal" else CHI_NG7


def cmd_proof_check(args, out: _Out) -> int:
    with open(args.file, encoding="utf-8") as fh:
        proofs = parse_proofs(fh.read())
    all_ok = True
    out.data["proofs"] = []
    for k, p in enumerate(proofs):
        res = check_proof(p, _chi(args))
        all_ok &= res.ok
        out.data["proofs"].append({
            "index": k,
            "conclusion": print_sequent(p.conclusion),
            "ok": res.ok,
            "errors": [str(e) for e in res.errors],
        })
        out.line(f"proof {k} {print_sequent(p.conclusion)} {'ACCEPT' if res.ok else 'REJECT'}")
        for e in res.errors:
            out.line(f"  {e}")
    out.data["ok"] = all_ok
    return EXIT_OK if all_ok else EXIT_FALSE


def cmd_expand(args, out: _Out) -> int:
    rule = args.rule
    extra = []
    if rule in ("Ax", "bot", "top"):
        if args.phi is None:
            raise UsageError(f"{rule} needs --phi")
        extra.append(parse_formula(args.phi))
    elif rule in ("neg-neg", "neg-l", "¬-¬", "¬-l"):
        if args.premise is None:
            raise UsageError(f"{rule} needs --premise PROOF_FILE")
        with open(args.premise, encoding="utf-8") as fh:
            extra.append(parse_proof(fh.read()))
    try:
        p = expand_derived(rule, *extra)
    except (UnknownRule, ValueError) as exc:
        raise UsageError(str(exc)) from None
    text = format_proof(p)
    out.data["proof"] = text
    out.data["conclusion"] = print_sequent(p.conclusion)
    out.lines.extend(text.split("\n"))
    return EXIT_OK


def _valuation_text(G, v: dict) -> str:
    return " ".join(f"{k}={G.name(x)}" for k, x in v.items())


def cmd_valid(args, out: _Out) -> int:
    s = _load(args.model)
    G = transform.groupoid_from_effect(s) if isinstance(s, EffectAlgebra) else s
    seq = parse_sequent(args.sequent)
    v = falsifying_valuation(G, seq, args.max_vars)
    out.data["valid"] = v is None
    out.data["valuation"] = v
    if v is None:
        out.line(f"VALID {print_sequent(seq)}")
        return EXIT_OK
    out.line(f"INVALID {print_sequent(seq)}")
    out.line(f"valuation: {_valuation_text(G, v)}")
    return EXIT_FALSE


def cmd_countermodel(args, out: _Out) -> int:
    seq = parse_sequent(args.sequent)
    found = countermodel(seq, _catalog(args), args.max_vars)
    out.data["found"] = found is not None
    if found is None:
        out.line(f"no countermodel for {print_sequent(seq)}")
        return EXIT_OK
    G, v = found
    out.data["size"] = G.size
    out.data["valuation"] = v
    out.data["model"] = format_structure(G)
    out.line(f"countermodel for {print_sequent(seq)}")
    out.line(f"size: {G.size}")
    out.line(f"valuation: {_valuation_text(G, v)}")
    out.lines.extend(format_structure(G).rstrip("\n").split("\n"))
    return EXIT_FALSE


def cmd_sweep(args, out: _Out) -> int:
    if args.proofs:
        proofs = []
        for path in args.proofs:
            with open(path, encoding="utf-8") as fh:
                proofs.extend(parse_proofs(fh.read()))
    else:
        proofs = load_bundled()
    c = _catalog(args)
    try:
        report = soundness_sweep(proofs, c, _chi(args))
    except ValueError as exc:
        raise UsageError(str(exc)) from None
    out.data["proofs"] = report.proofs
    out.data["models"] = report.models
    out.data["violations"] = [
        {"proof": p, "model": m, "sequent": s, "valuation": v} for p, m, s, v in report.violations
    ]
    out.lines.extend(report.lines())
    ok = report.ok
    if args.rules:
        failures = rule_soundness(c.models(), _chi(args))
        out.data["rule_failures"] = [{"rule": r, "model": m, "valuation": v} for r, m, v in failures]
        out.line(f"rule soundness failures: {len(failures)}")
        for r, m, v in failures:
            out.line(f"RULE-VIOLATION rule={r} model={m} valuation={v}")
        ok = ok and not failures
    return EXIT_OK if ok else EXIT_FALSE


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="lea", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True, metavar="COMMAND")
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--json", action="store_true", help="machine-readable report")

    p = sub.add_parser("check", parents=[common], help="verify the axioms of an algebra file")
    p.add_argument("--kind", choices=["effect", "groupoid"])
    p.add_argument("file")
    p.set_defaults(func=cmd_check)

    p = sub.add_parser("order", parents=[common], help="print the induced order")
    p.add_argument("file")
    p.set_defaults(func=cmd_order)

    p = sub.add_parser("translate", parents=[common], help="effect algebra <-> effect groupoid")
    p.add_argument("--to", choices=["groupoid", "effect"], required=True)
    p.add_argument("-o", "--output")
    p.add_argument("file")
    p.set_defaults(func=cmd_translate)

    p = sub.add_parser("roundtrip", parents=[common], help="check that translating there and back is the identity")
    p.add_argument("file")
    p.set_defaults(func=cmd_roundtrip)

    p = sub.add_parser("predicates", parents=[common], help="idempotent/commutative/associative/ortho/MV")
    p.add_argument("file")
    p.set_defaults(func=cmd_predicates)

    p = sub.add_parser("blocks", parents=[common], help="maximal commutative sub-effect groupoids")
    p.add_argument("file")
    p.set_defaults(func=cmd_blocks)

    p = sub.add_parser("enumerate", parents=[common], help="enumerate effect groupoids up to a size bound")
    p.add_argument("--bound", type=int, required=True)
    p.add_argument("--jobs", type=int, default=1)
    p.add_argument("-o", "--output")
    p.set_defaults(func=cmd_enumerate)

    chi_help = "form of chi(phi, psi) used by (mds)"

    p = sub.add_parser("proof-check", parents=[common], help="check a proof file")
    p.add_argument("--chi", choices=["ng7", "literal"], default="ng7", help=chi_help)
    p.add_argument("file")
    p.set_defaults(func=cmd_proof_check)

    p = sub.add_parser("expand", parents=[common], help="expand a derived rule into primitive rules")
    p.add_argument("rule", help="one of " + ", ".join(DERIVED_RULES))
    p.add_argument("--phi", help="formula argument for Ax, bot, top")
    p.add_argument("--premise", help="proof file for neg-neg, neg-l")
    p.set_defaults(func=cmd_expand)

    p = sub.add_parser("valid", parents=[common], help="test a sequent in one model")
    p.add_argument("--max-vars", type=int, default=4)
    p.add_argument("model")
    p.add_argument("sequent")
    p.set_defaults(func=cmd_valid)

    for name, func, help_text in (
        ("countermodel", cmd_countermodel, "search a catalog for a model refuting a sequent"),
        ("sweep", cmd_sweep, "check proved sequents in every catalog model"),
    ):
        p = sub.add_parser(name, parents=[common], help=help_text)
        src = p.add_mutually_exclusive_group()
        src.add_argument("--catalog", help="catalog file")
        src.add_argument("--bound", type=int, default=4, help="enumerate on the fly up to this size")
        if name == "countermodel":
            p.add_argument("--max-vars", type=int, default=4)
            p.add_argument("sequent")
        else:
            p.add_argument("--jobs", type=int, default=1)
            p.add_argument("--chi", choices=["ng7", "literal"], default="ng7", help=chi_help)
            p.add_argument("--rules", action="store_true", help="also check every rule semantically")
            p.add_argument("proofs", nargs="*", help="proof files (default: bundled corpus)")
        p.set_defaults(func=func)
    return parser


def run(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_USAGE if exc.code not in (0, None) else EXIT_OK
    out = _Out(args.json)
    try:
        code = args.func(args, out)
    except (UsageError, FormatError, MalformedTable, CatalogError, ParseError,
            ProofSyntaxError, TooManyVariables, InvalidStructure, OSError) as exc:
        sys.stderr.write(f"lea {args.command}: {exc}\n")
        return EXIT_USAGE
    out.flush()
    return code


def main() -> None:
    sys.exit(run())
