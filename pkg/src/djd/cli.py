"""Command-line front end: ``djd nf|delta|antipode|commutator|verify|rep|act``.

Exit codes: 0 success, 1 verification failure or computation error,
2 usage or parse error.
"""

from __future__ import annotations

import argparse
import json
import sys
from fractions import Fraction
from typing import Callable, Dict, List, Sequence

from . import double, reps, sl2, weyl
from .engine import Element, Tensor, check_local_confluence
from .parser import ALGEBRAS, ParseError, parse_element, parse_vector
from .report import Report

SCHEMA = "djd-1"


class UsageError(Exception):
    pass


# -- JSON ---------------------------------------------------------------------


def _exp_map(pres, mono) -> Dict[str, int]:
    return {pres.names[i]: e for i, e in enumerate(mono) if e}


def element_json(a: Element, algebra: str) -> dict:
    return {
        "schema": SCHEMA,
        "algebra": algebra,
        "terms": [{"coeff": str(c), "exp": _exp_map(a.pres, m)} for m, c in a.sorted_terms()],
    }


def tensor_json(t: Tensor, algebra: str) -> dict:
    return {
        "schema": SCHEMA,
        "algebra": algebra,
        "arity": t.arity,
        "terms": [
            {"coeff": str(c), "legs": [_exp_map(t.pres, m) for m in key]}
            for key, c in t.sorted_terms()
        ],
    }


def matrix_rep_json(rep: reps.MatrixRep, label: str) -> dict:
    return {
        "schema": SCHEMA,
        "module": label,
        "dim": rep.dim,
        "matrices": {
            name: [[str(c) for c in row] for row in rep.matrices[name]] for name in reps.LETTERS
        },
    }


def report_json(report: Report) -> dict:
    return {
        "schema": SCHEMA,
        "suite": report.title,
        "ok": report.ok,
        "checks": [
            {"name": c.name, "passed": c.passed, "detail": c.detail}
            for c in sorted(report.checks, key=lambda c: c.name)
        ],
    }


def _dump(obj) -> str:
    return json.dumps(obj, ensure_ascii=False, sort_keys=False)


# -- verification suites ------------------------------------------------------


def _confluence() -> Report:
    report = Report("confluence")
    for pres in (double.dj_presentation(), sl2.sl2_presentation(), weyl.a2s_presentation()):
        result = check_local_confluence(pres)
        report.add(f"{pres.label} locally confluent ({result.triples_checked} triples)",
                   result.ok, "; ".join(map(str, result.failures[:3])))
    return report


def _combine(title: str, parts: Sequence[Report]) -> Report:
    out = Report(title)
    for part in parts:
        out.extend(part, prefix=f"{part.title}: " if part.title != title else "")
    return out


def _suites(args) -> Dict[str, Callable[[], Report]]:
    def opt(name, default):
        value = getattr(args, name, None)
        return default if value is None else value

    seed = opt("seed", 7)
    return {
        "relations": double.relation_checks,
        "confluence": _confluence,
        "hopf": lambda: double.verify_hopf(samples=opt("samples", 20), seed=seed),
        "ore-tower": double.ore_tower_check,
        "comm-formulas": lambda: double.formula_oracles(max_n=opt("max_n", 8)),
        "normal-central": double.normal_central_report,
        "center-relation": double.center_relation_report,
        "center-independence": lambda: double.center_independence_report(opt("max_n", 6)),
        "pi": lambda: _combine("pi", [sl2.verify_pi()] + [
            sl2.ln_pullback_check(n) for n in range(opt("max_n", 8) + 1)
        ]),
        "phi": lambda: _combine("phi", [
            weyl.verify_phi(),
            weyl.center_map_check(),
            weyl.degree0_consistency(count=opt("samples", 30), seed=seed),
        ]),
        "w-modules": lambda: reps.w_identity_suite(max_n=opt("max_n", 6)),
        "verma": lambda: reps.verma_identity_suite(max_ij=opt("max_n", 6)),
        "g1-nilpotency": lambda: _combine("g1-nilpotency", [
            reps.g_minus_1_nilpotency(c, depth=opt("depth", 8)) for c in reps.SAMPLE_C
        ]),
        "ln": lambda: reps.ln_report(max_n=opt("max_n", 6)),
        "kn": lambda: _combine("kn", [
            reps.kn_check(n, depth=opt("depth", 6)) for n in range(opt("max_n", 4) + 1)
        ]),
    }


SUITES = (
    "relations", "confluence", "hopf", "ore-tower", "comm-formulas", "normal-central",
    "center-relation", "center-independence", "pi", "phi", "w-modules", "verma",
    "g1-nilpotency", "ln", "kn",
)


def run_suite(name: str, args) -> List[Report]:
    table = _suites(args)
    if name == "all":
        return [table[s]() for s in SUITES]
    if name not in table:
        raise UsageError(f"unknown suite {name!r}; choose from {', '.join(SUITES + ('all',))}")
    return [table[name]()]


# -- commands -----------------------------------------------------------------


def _element(text: str, args) -> Element:
    return parse_element(text, args.algebra)


def _require_dj(args, what: str) -> None:
    if args.algebra != "dj":
        raise UsageError(f"{what} is only available for the double (--algebra dj)")


def cmd_nf(args) -> int:
    a = _element(args.expr, args)
    print(_dump(element_json(a, args.algebra)) if args.json else a)
    return 0


def cmd_delta(args) -> int:
    _require_dj(args, "delta")
    t = double.coproduct(_element(args.expr, args))
    print(_dump(tensor_json(t, args.algebra)) if args.json else t)
    return 0


def cmd_antipode(args) -> int:
    _require_dj(args, "antipode")
    a = double.antipode(_element(args.expr, args))
    print(_dump(element_json(a, args.algebra)) if args.json else a)
    return 0


def cmd_commutator(args) -> int:
    a, b = _element(args.left, args), _element(args.right, args)
    c = a * b - b * a
    print(_dump(element_json(c, args.algebra)) if args.json else c)
    return 0


def cmd_verify(args) -> int:
    reports = run_suite(args.suite, args)
    ok = all(r.ok for r in reports)
    if args.json:
        print(_dump({"schema": SCHEMA, "ok": ok, "reports": [report_json(r) for r in reports]}))
    else:
        total = sum(len(r.checks) for r in reports)
        failed = sum(len(r.failures) for r in reports)
        for r in reports:
            print(r)
        print(f"{args.suite}: {total - failed}/{total} checks passed")
    return 0 if ok else 1


def cmd_rep(args) -> int:
    if args.n < 0:
        raise UsageError("n must be non-negative")
    rep = reps.build_Ln(args.n)
    if args.json:
        print(_dump(matrix_rep_json(rep, f"L_{args.n}")))
        return 0
    for name in reps.LETTERS:
        print(f"{name}:")
        for row in rep.matrices[name]:
            print("  [" + ", ".join(str(c) for c in row) + "]")
    return 0


def _scalar(text, flag: str) -> Fraction:
    if text is None:
        raise UsageError(f"--{flag} is required for this module")
    try:
        return Fraction(text)
    except (ValueError, ZeroDivisionError):
        raise UsageError(f"--{flag} must be a rational number, got {text!r}") from None


def cmd_act(args) -> int:
    _require_dj(args, "act")
    E = _element(args.expr, args)
    depth = 6 if args.depth is None else args.depth
    if depth < 1:
        raise UsageError("--depth must be at least 1")
    a = _scalar(args.a, "a")
    if a == 0:
        raise UsageError("--a must be nonzero")
    if args.module == "w":
        spec = reps.WModuleSpec(a, _scalar(args.b, "b"), depth)
        vec = reps.InducedVector({k[0]: c for k, c in parse_vector(args.vector, "x", 1).items()})
        result, prefix = reps.act_W(E, spec, vec), "x"
    else:
        spec = reps.VermaSpec(a, _scalar(args.c, "c"), depth)
        vec = reps.InducedVector(parse_vector(args.vector, "z", 2))
        result, prefix = reps.act_verma(E, spec, vec), "z"
    if args.json:
        coords = [{"index": list(k) if isinstance(k, tuple) else [k], "coeff": str(c)}
                  for k, c in sorted(result.coords.items(), reverse=True)]
        print(_dump({"schema": SCHEMA, "module": args.module, "vector": coords}))
    else:
        print(result.format(prefix))
    return 0


# -- argument parsing ---------------------------------------------------------


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--algebra", choices=ALGEBRAS, default="dj")
    common.add_argument("--json", action="store_true", help="emit versioned JSON")
    common.add_argument("--max-n", type=int, dest="max_n")
    common.add_argument("--depth", type=int)
    common.add_argument("--samples", type=int)
    common.add_argument("--seed", type=int)

    parser = argparse.ArgumentParser(
        prog="djd", description="Exact computations in the double of the Jordan plane."
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("nf", parents=[common], help="normal form of an expression")
    p.add_argument("expr")
    p.set_defaults(func=cmd_nf)

    p = sub.add_parser("delta", parents=[common], help="coproduct")
    p.add_argument("expr")
    p.set_defaults(func=cmd_delta)

    p = sub.add_parser("antipode", parents=[common], help="antipode")
    p.add_argument("expr")
    p.set_defaults(func=cmd_antipode)

    p = sub.add_parser("commutator", parents=[common], help="[a, b] = ab - ba")
    p.add_argument("left")
    p.add_argument("right")
    p.set_defaults(func=cmd_commutator)

    p = sub.add_parser("verify", parents=[common], help="run a verification suite")
    p.add_argument("suite", help=", ".join(SUITES + ("all",)))
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("rep", parents=[common], help="matrices of the simple module L_n")
    p.add_argument("n", type=int)
    p.set_defaults(func=cmd_rep)

    p = sub.add_parser("act", parents=[common], help="act on a W or Verma module vector")
    p.add_argument("expr")
    p.add_argument("--module", choices=("w", "verma"), required=True)
    p.add_argument("--a")
    p.add_argument("--b")
    p.add_argument("--c")
    p.add_argument("--vector", required=True)
    p.set_defaults(func=cmd_act)
    return parser


def main(argv: Sequence[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return 0 if exc.code == 0 else 2
    try:
        return args.func(args)
    except (ParseError, UsageError) as exc:
        print(f"djd: error: {exc}", file=sys.stderr)
        return 2
    except (reps.DepthError, ValueError) as exc:
        print(f"djd: error: {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
