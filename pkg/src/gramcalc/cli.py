"""Command-line surface: derive, case, triangle, verify.

Exit codes: 0 success (verification pass), 1 verification mismatch,
2 usage or parse error.  JSON output is deterministic (two-space indent,
sorted keys) so parsing and re-serializing round-trips byte-identically;
coefficients serialize as decimal strings because they outgrow doubles.
"""

from __future__ import annotations

import argparse
import csv
import json
import sys
from pathlib import Path

from . import oracles
from .dsl import ParseError, parse_grammar, parse_operator, parse_polynomial
from .grammar import UnruledLetterError, apply_operator, derive
from .registry import case_registry, cases_for, compute_case_triangle
from .verify import report_obj, report_text, verify_all


def render_json(obj) -> str:
    return json.dumps(obj, indent=2, sort_keys=True)


def _parse_params(pairs: list[str] | None) -> dict[str, int]:
    params: dict[str, int] = {}
    for pair in pairs or []:
        name, sep, value = pair.partition("=")
        if not sep or not name:
            raise ValueError(f"bad --param {pair!r}, expected name=value")
        try:
            params[name] = int(value)
        except ValueError:
            raise ValueError(f"bad --param {pair!r}, value must be an integer") from None
    return params


def _load_grammar(args) -> str:
    if args.grammar_file:
        return Path(args.grammar_file).read_text(encoding="utf-8")
    return args.grammar


def _print_triangle_table(rows) -> None:
    width = max((len(str(v)) for row in rows for v in row), default=1)
    n_width = len(str(len(rows)))
    for n, row in enumerate(rows, start=1):
        cells = " ".join(str(v).rjust(width) for v in row)
        print(f"n={str(n).rjust(n_width)}: {cells}")


def _print_triangle_csv(rows, k_origin: int) -> None:
    writer = csv.writer(sys.stdout)
    writer.writerow(["n", "k", "value"])
    for n, row in enumerate(rows, start=1):
        for i, value in enumerate(row):
            writer.writerow([n, k_origin + i, value])


def _rows_obj(rows) -> list[dict]:
    return [
        {"n": n, "coeffs": [str(v) for v in row]} for n, row in enumerate(rows, start=1)
    ]


def _cmd_derive(args) -> int:
    grammar = parse_grammar(_load_grammar(args))
    seed = parse_polynomial(args.seed)
    operator = parse_operator(args.op)
    trace = apply_operator(grammar, operator, seed, args.steps, strict=args.strict)
    if args.format == "json":
        obj = {
            "grammar": grammar.render(),
            "seed": str(seed),
            "op": operator.render(),
            "steps": args.steps,
            "poly": str(trace.final),
        }
        if args.trace:
            obj["iterates"] = [str(p) for p in trace.iterates]
        print(render_json(obj))
    elif args.format == "csv":
        writer = csv.writer(sys.stdout)
        writer.writerow(["step", "term", "coefficient"])
        steps = enumerate(trace.iterates) if args.trace else [(args.steps, trace.final)]
        for step, poly in steps:
            for mono, coeff in poly.terms():
                writer.writerow([step, mono.render(), coeff])
    else:
        if args.trace:
            for step, poly in enumerate(trace.iterates):
                print(f"{step}: {poly}")
        else:
            print(trace.final)
    return 0


def _cmd_case(args) -> int:
    matches = cases_for(args.id)
    if args.param:
        wanted = _parse_params(args.param)
        matches = [
            case for case in matches if dict(case.binding.params) == wanted
        ]
        if not matches:
            raise ValueError(f"no instance of {args.id!r} with parameters {wanted}")
    if len(matches) > 1:
        labels = ", ".join(case.label for case in matches)
        raise ValueError(f"case {args.id!r} is parametric; pick one of: {labels}")
    case = matches[0]
    triangle = compute_case_triangle(case, args.rows)
    if args.format == "json":
        obj = {
            "case": case.label,
            "k_origin": triangle.k_origin,
            "rows": _rows_obj(triangle.rows),
        }
        print(render_json(obj))
    elif args.format == "csv":
        _print_triangle_csv(triangle.rows, triangle.k_origin)
    else:
        _print_triangle_table(triangle.rows)
    return 0


def _cmd_triangle(args) -> int:
    if args.oracle not in oracles.TABLE:
        raise ValueError(
            f"unknown oracle {args.oracle!r}; known: {', '.join(sorted(oracles.TABLE))}"
        )
    spec = oracles.TABLE[args.oracle]
    method = args.method or spec.default_method
    params = _parse_params(args.param)
    rows = [
        oracles.oracle_row(args.oracle, n, method=method, **params)
        for n in range(1, args.rows + 1)
    ]
    if args.format == "json":
        obj = {
            "oracle": args.oracle,
            "method": method,
            "params": params,
            "k_origin": spec.k_origin,
            "rows": _rows_obj(rows),
        }
        print(render_json(obj))
    elif args.format == "csv":
        _print_triangle_csv(rows, spec.k_origin)
    else:
        _print_triangle_table(rows)
    return 0


def _cmd_verify(args) -> int:
    if args.all:
        cases = case_registry()
    else:
        cases = cases_for(args.case)
        if args.param:
            wanted = _parse_params(args.param)
            cases = [case for case in cases if dict(case.binding.params) == wanted]
            if not cases:
                raise ValueError(f"no instance of {args.case!r} with parameters {wanted}")
    report = verify_all(max_n=args.max_n, cases=cases)
    if args.format == "text":
        print(report_text(report))
    else:
        print(render_json(report_obj(report, cases=cases)))
    return 0 if report.passed else 1


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="gramcalc",
        description="Derivative calculus on commutative alphabets, with "
        "combinatorial triangle extraction and oracle verification.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("derive", help="iterate an operator on a seed word")
    src = p.add_mutually_exclusive_group(required=True)
    src.add_argument("--grammar", help="inline rule set, e.g. 'x -> x*y; y -> y'")
    src.add_argument("--grammar-file", help="path to a .gram rule-set file")
    p.add_argument("--seed", required=True, help="seed word, e.g. 'x' or 'x^2*y^2'")
    p.add_argument("--op", default="D", help="operator: 'D' or monomial-prefixed, e.g. 'xD'")
    p.add_argument("--steps", type=int, required=True)
    p.add_argument("--trace", action="store_true", help="print every iterate")
    p.add_argument("--strict", action="store_true", help="error on unruled letters")
    p.add_argument("--format", choices=("table", "json", "csv"), default="table")
    p.set_defaults(handler=_cmd_derive)

    p = sub.add_parser("case", help="compute a registry case's triangle")
    p.add_argument("--id", required=True, help="case id or label, e.g. c1 or c4[r=0]")
    p.add_argument("--rows", type=int, required=True)
    p.add_argument("--param", action="append", help="parameter, e.g. r=0")
    p.add_argument("--format", choices=("table", "json", "csv"), default="table")
    p.set_defaults(handler=_cmd_case)

    p = sub.add_parser("triangle", help="compute an oracle triangle directly")
    p.add_argument("--oracle", required=True, help="oracle name, e.g. typeB")
    p.add_argument("--rows", type=int, required=True)
    p.add_argument("--method", help="oracle method (defaults to the first bound one)")
    p.add_argument("--param", action="append", help="parameter, e.g. r=3")
    p.add_argument("--format", choices=("table", "json", "csv"), default="table")
    p.set_defaults(handler=_cmd_triangle)

    p = sub.add_parser("verify", help="check cases against their oracles")
    target = p.add_mutually_exclusive_group(required=True)
    target.add_argument("--all", action="store_true")
    target.add_argument("--case", help="case id or label")
    p.add_argument("--param", action="append", help="instance filter, e.g. r=0")
    p.add_argument("--max-n", type=int, default=12)
    p.add_argument("--format", choices=("json", "text"), default="json")
    p.set_defaults(handler=_cmd_verify)

    return parser


def main(argv: list[str] | None = None) -> int:
    parser = _build_parser()
    args = parser.parse_args(argv)
    try:
        return args.handler(args)
    except ParseError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except UnruledLetterError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except KeyError as exc:
        message = exc.args[0] if exc.args else str(exc)
        print(f"error: {message}", file=sys.stderr)
        return 2
    except (ValueError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
