"""Command-line surface.

Subcommands:
  functional   relations of the composed forms over K(z)
  exceptional  locus polynomial W, its verified roots, and the value
               relations at each root
  values       value relations at explicitly given points
  linrel       linear relations among truncated power series

Exit codes: 0 success, 2 input error, 3 step budget exceeded,
4 composed functions algebraically dependent over K(z).
"""

from __future__ import annotations

import argparse
import json
import sys

from .groebner import StepBudgetExceeded, canonical_basis
from .linrel import Series, check_relation, independent_subset, linear_relations
from .mpoly import mpoly_str
from .ordering import ELIM_STANDARD, ORDER_MODES, OrderSpec
from .parametric import functional_relations
from .problem import (ProblemError, mpoly_to_terms, parse_problem,
                      ratfunc_to_json, unipoly_to_strings)
from .roots import PrecisionError
from .scalars import parse_scalar, scalar_str
from .unipoly import poly_str
from .values import FunctionalDependenceError, exceptional_set, j_alpha_generators

E_FUNCTION_NOTE = (
    "note: when the inputs encode E-functions, alpha = 0 always belongs to "
    "the exceptional set (every value at 0 is algebraic); the value/ideal "
    "correspondence behind this computation is stated for nonzero alpha, so "
    "treat the report at alpha = 0 as the algebra-level answer only.")


def _names(prefix, n):
    return [f"{prefix}{k + 1}" for k in range(n)]


def _maybe_canonical(polys, nvars, canonical):
    if not canonical or not polys:
        return polys, False
    order = OrderSpec(keep=nvars)
    return canonical_basis(polys, order), True


def _write_json(args, payload):
    if not getattr(args, "json", None):
        return
    text = json.dumps(payload, indent=2) + "\n"
    if args.json == "-":
        sys.stdout.write(text)
    else:
        with open(args.json, "w", encoding="utf-8") as fh:
            fh.write(text)


def cmd_functional(args) -> int:
    problem = parse_problem(args.problem)
    relations = functional_relations(problem.forms, problem.ideal,
                                     step_budget=args.step_budget)
    relations, canonical = _maybe_canonical(relations, problem.nforms,
                                            args.canonical_output)
    names = _names("Y", problem.nforms)
    if relations:
        label = " (canonical form)" if canonical else ""
        print(f"functional relations over K(z){label}:")
        for r in relations:
            print(f"  {mpoly_str(r, names)}")
    else:
        print("functional relations over K(z): none")
        print("the composed functions are algebraically independent over K(z)")
    _write_json(args, {
        "command": "functional",
        "relations": [mpoly_to_terms(r) for r in relations],
        "independent": not relations,
    })
    return 0


def _print_value_ideal(alpha, ideal, nforms, canonical):
    names = _names("Y", nforms)
    gens = ideal.generators
    if canonical and gens:
        gens = canonical_basis(gens, OrderSpec(keep=nforms))
    if gens:
        print(f"  alpha = {scalar_str(alpha)}: value relations generated by")
        for g in gens:
            print(f"      {mpoly_str(g, names)}")
    else:
        print(f"  alpha = {scalar_str(alpha)}: values algebraically independent"
              f" (zero relation ideal)")
    return gens


def _value_ideal_json(alpha, ideal, gens):
    return {
        "alpha": scalar_str(alpha),
        "generators": [mpoly_to_terms(g) for g in gens],
        "zero_ideal": ideal.is_zero,
    }


def cmd_exceptional(args) -> int:
    problem = parse_problem(args.problem)
    report = exceptional_set(problem.forms, problem.ideal, mode=args.order,
                             denom_bound=args.denom_bound,
                             precision_bits=args.precision,
                             step_budget=args.step_budget,
                             field=problem.field)
    print(f"pivot minor W0(z) = {poly_str(report.frame.w0)}")
    print(f"locus polynomial W(z) = {poly_str(report.parametric.w)}"
          f"   [order mode: {args.order}]")
    if args.order != ELIM_STANDARD:
        print("  caution: this order mode reproduces published values but "
              "carries no elimination guarantee; rerun with "
              "--order elim-standard for the certified locus")
    roots = report.roots
    if roots.verified:
        print("verified roots: "
              + ", ".join(scalar_str(r) for r in roots.verified))
    else:
        print("verified roots: none")
    ideals_json = []
    for alpha, ideal in report.value_ideals:
        gens = _print_value_ideal(alpha, ideal, problem.nforms,
                                  args.canonical_output)
        ideals_json.append(_value_ideal_json(alpha, ideal, gens))
    for fac in roots.unresolved:
        approx = ", ".join(f"{x:.6g}" for x in fac.approx_roots)
        print(f"unresolved factor (roots outside the search field): "
              f"{poly_str(fac.poly)}   approx roots: {approx}")
    print(E_FUNCTION_NOTE)
    _write_json(args, {
        "command": "exceptional",
        "order": args.order,
        "W0": unipoly_to_strings(report.frame.w0),
        "W": unipoly_to_strings(report.parametric.w),
        "certificate": report.parametric.certificate,
        "verified_roots": [scalar_str(r) for r in roots.verified],
        "value_ideals": ideals_json,
        "dependent_points": [scalar_str(a) for a, vi in report.dependent],
        "unresolved_factors": [
            {"poly": unipoly_to_strings(f.poly),
             "approx_roots": [str(x) for x in f.approx_roots]}
            for f in roots.unresolved
        ],
    })
    return 0


def cmd_values(args) -> int:
    problem = parse_problem(args.problem)
    if args.alpha:
        alphas = [parse_scalar(a, problem.field) for a in args.alpha]
    elif problem.alphas:
        alphas = problem.alphas
    else:
        raise ProblemError(
            "no evaluation points: pass --alpha or list them in the problem file")
    ideals_json = []
    for alpha in alphas:
        ideal = j_alpha_generators(problem.forms, problem.ideal, alpha,
                                   step_budget=args.step_budget)
        gens = _print_value_ideal(alpha, ideal, problem.nforms,
                                  args.canonical_output)
        ideals_json.append(_value_ideal_json(alpha, ideal, gens))
    _write_json(args, {"command": "values", "value_ideals": ideals_json})
    return 0


def cmd_linrel(args) -> int:
    try:
        with open(args.series, "r", encoding="utf-8") as fh:
            data = json.load(fh)
    except OSError as exc:
        raise ProblemError(f"cannot read {args.series}: {exc}") from None
    except json.JSONDecodeError as exc:
        raise ProblemError(
            f"{args.series}: invalid JSON at line {exc.lineno}: {exc.msg}"
        ) from None
    if not isinstance(data, list):
        raise ProblemError("series file: expected a JSON list")
    series = []
    for k, entry in enumerate(data):
        if not isinstance(entry, dict) or "coefficients" not in entry:
            raise ProblemError(f"series[{k}]: expected an object with "
                               f"'name' and 'coefficients'")
        name = entry.get("name", f"series{k + 1}")
        try:
            coeffs = [parse_scalar(s) for s in entry["coefficients"]]
        except ValueError as exc:
            raise ProblemError(f"series[{k}].coefficients: {exc}") from None
        series.append(Series(name, coeffs))

    trunc = args.trunc_order
    if trunc is None:
        trunc = min(s.order() for s in series)
    relations = linear_relations(series, args.degree_bound, trunc)
    for rel in relations:
        if not check_relation(rel, series, trunc):
            raise AssertionError("relation fails re-substitution")

    print(f"relation basis (candidates: certified modulo degree bound "
          f"{args.degree_bound}, truncation order {trunc}):")
    if relations:
        for rel in relations:
            terms = " + ".join(f"({poly_str(p)})*{s.name}"
                               for p, s in zip(rel, series) if p)
            print(f"  {terms} = 0")
    else:
        print("  none (series independent within these bounds)")

    kept, exprs = independent_subset(relations, len(series))
    print("kept (independent within bounds): "
          + ", ".join(series[i].name for i in kept))
    for i in sorted(exprs):
        rhs = " + ".join(f"({q})*{series[j].name}" for j, q in exprs[i])
        print(f"  {series[i].name} = {rhs if rhs else '0'}")
    _write_json(args, {
        "command": "linrel",
        "degree_bound": args.degree_bound,
        "trunc_order": trunc,
        "relations": [[unipoly_to_strings(p) for p in rel]
                      for rel in relations],
        "kept": [series[i].name for i in kept],
        "kept_indices": list(kept),
        "expressions": {
            str(i): [{"index": j, "coeff": ratfunc_to_json(q)}
                     for j, q in exprs[i]]
            for i in exprs
        },
    })
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="eindep",
        description="Exact location of algebraic relations among values of "
                    "parametric linear combinations.")
    sub = parser.add_subparsers(dest="command", required=True)

    def common(p, order=False, rootopts=False):
        p.add_argument("--step-budget", type=int, default=None,
                       help="abort after this many reduction steps")
        p.add_argument("--canonical-output", action="store_true",
                       help="print bases in reduced monic form")
        p.add_argument("--json", metavar="PATH",
                       help="also write a JSON report ('-' for stdout)")
        if order:
            p.add_argument("--order", choices=ORDER_MODES,
                           default=ELIM_STANDARD,
                           help="elimination order mode (default: "
                                "elim-standard)")
        if rootopts:
            p.add_argument("--denom-bound", type=int, default=10 ** 6,
                           help="numerator/denominator bound when rounding "
                                "approximate roots (default 10^6)")
            p.add_argument("--precision", type=int, default=256,
                           help="working precision in bits for root "
                                "approximation (default 256)")

    p_func = sub.add_parser("functional",
                            help="relations of the composed forms over K(z)")
    p_func.add_argument("problem")
    common(p_func)
    p_func.set_defaults(func=cmd_functional)

    p_exc = sub.add_parser("exceptional",
                           help="locus polynomial, verified roots, and value "
                                "relations at each root")
    p_exc.add_argument("problem")
    common(p_exc, order=True, rootopts=True)
    p_exc.set_defaults(func=cmd_exceptional)

    p_val = sub.add_parser("values",
                           help="value relations at given points")
    p_val.add_argument("problem")
    p_val.add_argument("--alpha", action="append",
                       help="evaluation point (repeatable); scalar grammar, "
                            "e.g. 1, -1/6i, 1/2+1/3i")
    common(p_val)
    p_val.set_defaults(func=cmd_values)

    p_lin = sub.add_parser("linrel",
                           help="linear relations among truncated series")
    p_lin.add_argument("series", help="JSON list of {name, coefficients}")
    p_lin.add_argument("--degree-bound", type=int, required=True,
                       help="max degree of the polynomial multipliers")
    p_lin.add_argument("--trunc-order", type=int, default=None,
                       help="truncation order M (default: shortest series)")
    common(p_lin)
    p_lin.set_defaults(func=cmd_linrel)
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except (ProblemError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except PrecisionError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except StepBudgetExceeded as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 3
    except FunctionalDependenceError as exc:
        print(f"error: {exc}", file=sys.stderr)
        print("run the 'functional' subcommand to see the relations",
              file=sys.stderr)
        return 4


if __name__ == "__main__":
    sys.exit(main())
