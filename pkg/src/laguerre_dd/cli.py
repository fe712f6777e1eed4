"""Command-line surface.

Subcommands:

  construct      build a design, print its parameter line, optionally write
                 the JSON document and verify it
  verify         re-check a design document by brute force (strengths t, t-1)
  table          closed-form parameter table for all cases at GF(p^n), with
                 optional measured columns (--check)
  compare-conic  compare case-i parameters against the conic series (odd q)
  selfcheck      run the deterministic property suite for all q <= max-q

Exit codes: 0 success / all checks pass, 1 verification failure,
2 invalid configuration or unusable input.
"""

from __future__ import annotations

import argparse
import json
import sys

from .base_blocks import (
    CASES,
    VARIANTS,
    CaseSpec,
    ConditionError,
    base_block_for,
    case_block_size,
    case_lambda3,
    case_stabilizer_order,
    condition_label,
    resolve_spec,
    _condition,
)
from .finite_field import make_field
from .orbit_design import DivisibleDesign, build_design, design_parameters
from .projectivities import MAX_GROUP_SIZE, enumerate_group, group_order
from .selfcheck import format_report, run_selfcheck
from .verify import DEFAULT_CAP, CapExceeded, verify_design

EXIT_OK = 0
EXIT_VERIFY_FAIL = 1
EXIT_CONFIG = 2


def _param_line(params) -> str:
    return (
        f"{params.t}-({params.s},{params.k},{params.lambda_t}) DD "
        f"with {params.v} points, {params.b} blocks"
    )


def _print_report(report) -> None:
    for check in report.checks:
        tag = "PASS" if check.passed else "FAIL"
        print(f"  {tag} {check.name}: measured={check.measured} expected={check.expected}")
    hist = ", ".join(f"{key}:{n}" for key, n in sorted(report.lambda_histogram.items()))
    print(f"  lambda histogram at t={report.t}: {{{hist}}}")


def cmd_construct(args) -> int:
    field = make_field(args.p, args.n)
    spec = resolve_spec(
        field,
        CaseSpec(args.case, args.i, variant=args.variant, block_choice=args.block),
    )
    base = base_block_for(field, spec)
    design = build_design(
        field,
        base,
        args.t,
        case=spec.case,
        i=spec.i,
        variant=spec.variant,
        block_choice=spec.block_choice if spec.case == "v" else None,
        x=spec.x.encoding if spec.x is not None else None,
    )
    print(_param_line(design.params))
    if args.out:
        with open(args.out, "w", encoding="utf-8") as handle:
            handle.write(design.to_json())
        print(f"wrote {args.out}")
    if args.verify:
        ok = True
        for t in (args.t, args.t - 1):
            if t < 1:
                continue
            report = verify_design(design, t, cap=args.cap)
            print(f"verification at t={t}: {'PASS' if report.passed else 'FAIL'}")
            _print_report(report)
            ok &= report.passed
        if not ok:
            return EXIT_VERIFY_FAIL
    return EXIT_OK


def cmd_verify(args) -> int:
    with open(args.path, "r", encoding="utf-8") as handle:
        doc = json.load(handle)
    design = DivisibleDesign.from_document(doc)
    ok = True
    reports = []
    for t in (design.params.t, design.params.t - 1):
        if t < 1:
            continue
        report = verify_design(design, t, cap=args.cap)
        print(f"verification at t={t}: {'PASS' if report.passed else 'FAIL'}")
        _print_report(report)
        reports.append(report.to_document())
        ok &= report.passed
    print("design valid" if ok else "design INVALID")
    if args.out:
        with open(args.out, "w", encoding="utf-8") as handle:
            json.dump({"passed": ok, "reports": reports}, handle, separators=(",", ":"))
            handle.write("\n")
    return EXIT_OK if ok else EXIT_VERIFY_FAIL


def _table_rows(p: int, n: int):
    q = p**n
    rows = []
    for i in range(1, n + 1):
        if n % i:
            continue
        m = p**i
        entries: list[tuple[str, str | None, str]] = [
            ("i", None, "long"),
            ("ii", None, "long"),
            ("iii", None, "long"),
            ("iv", None, "long"),
        ]
        for variant in VARIANTS:
            entries.append(("v", variant, "long"))
            entries.append(("v", variant, "short"))
        for case, variant, block_choice in entries:
            failed = _condition(case, variant, p, m)
            row = {
                "case": case,
                "i": i,
                "variant": variant,
                "block": block_choice if case == "v" else None,
                "condition": condition_label(case, variant),
                "included": failed is None,
            }
            if failed is None:
                row["k"] = case_block_size(case, m, block_choice)
                row["lambda3"] = case_lambda3(case, m, variant, block_choice)
                row["stabilizer"] = case_stabilizer_order(case, m, variant)
            rows.append(row)
    return q, rows


def _measure_row(field, group, row, cap) -> None:
    """Fill stabilizer_measured / lambda3_verified in-place, None when gated."""
    from math import comb

    q = field.q
    row["stabilizer_measured"] = None
    row["lambda3_verified"] = None
    if group_order(q) > MAX_GROUP_SIZE:
        return
    b = group_order(q) // row["stabilizer"]
    work = b * comb(row["k"], 3) + comb(q + 1, 3) * q**3
    if work > cap:
        return
    spec = resolve_spec(
        field,
        CaseSpec(row["case"], row["i"], variant=row["variant"], block_choice=row["block"] or "long"),
    )
    design = build_design(field, base_block_for(field, spec), 3, group=group)
    report = verify_design(design, 3, cap=cap)
    row["stabilizer_measured"] = design.params.stabilizer_order
    hist = report.lambda_histogram
    if report.passed and len(hist) == 1:
        row["lambda3_verified"] = next(iter(hist))


def cmd_table(args) -> int:
    q, rows = _table_rows(args.p, args.n)
    if args.check:
        field = make_field(args.p, args.n)
        group = enumerate_group(field)
        for row in rows:
            if row["included"]:
                _measure_row(field, group, row, args.cap)
    print(f"design parameters over GF({q}) = GF({args.p}^{args.n}); v = {q * q + q}, s = {q}")
    header = f"{'case':<6}{'i':<4}{'variant':<16}{'block':<7}{'k':>5}{'lambda3':>9}  condition"
    if args.check:
        header += f"  {'stab(measured)':>15}{'lambda3(verified)':>19}"
    print(header)
    for row in rows:
        label = f"{row['case']:<6}{row['i']:<4}{row['variant'] or '-':<16}{row['block'] or '-':<7}"
        if not row["included"]:
            print(f"{label}{'-':>5}{'-':>9}  excluded (requires {row['condition']})")
            continue
        line = f"{label}{row['k']:>5}{row['lambda3']:>9}  {row['condition']}"
        if args.check:
            stab = row["stabilizer_measured"]
            lam = row["lambda3_verified"]
            line += f"  {stab if stab is not None else '-':>15}{lam if lam is not None else '-':>19}"
        print(line)
    if args.out:
        doc = {"p": args.p, "n": args.n, "q": q, "rows": rows}
        with open(args.out, "w", encoding="utf-8") as handle:
            json.dump(doc, handle, separators=(",", ":"))
            handle.write("\n")
        print(f"wrote {args.out}")
    return EXIT_OK


def cmd_compare_conic(args) -> int:
    field = make_field(args.p, args.n)
    q = field.q
    if q % 2 == 0:
        print("not applicable: q even (the conic series needs odd q)")
        return EXIT_CONFIG
    if args.i < 1 or args.n % args.i:
        raise ConditionError(f"subfield degree i={args.i} does not divide n={args.n}", "i|n")
    m = args.p**args.i
    params = design_parameters(
        q * q + q, q, m + 1, 3, group_order(q), m * (m * m - 1)
    )
    ours = (params.v, params.s, params.k, params.lambda_t)
    conic = (q * q + q, q, m + 1, 1)
    print(f"laguerre case i (p={args.p}, n={args.n}, i={args.i}): (v,s,k,lambda3) = {ours}")
    print(f"conic series   (p={args.p}, n={args.n}, i={args.i}): (v,s,k,lambda3) = {conic}")
    equal = ours == conic
    print(f"equal: {'true' if equal else 'false'}")
    return EXIT_OK if equal else EXIT_VERIFY_FAIL


def cmd_selfcheck(args) -> int:
    lines = run_selfcheck(args.max_q)
    sys.stdout.write(format_report(lines))
    return EXIT_OK if all(line.ok for line in lines) else EXIT_VERIFY_FAIL


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="laguerre-dd",
        description="Construct and verify 3-divisible designs on the projective line over dual numbers",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    c = sub.add_parser("construct", help="build a design and optionally write/verify it")
    c.add_argument("--p", type=int, required=True, help="prime characteristic")
    c.add_argument("--n", type=int, required=True, help="extension degree of GF(p^n)")
    c.add_argument("--i", type=int, default=1, help="subfield degree (divides n)")
    c.add_argument("--case", choices=CASES, required=True)
    c.add_argument("--variant", choices=VARIANTS, default=None, help="case v only")
    c.add_argument("--block", choices=("long", "short"), default="long", help="case v block choice")
    c.add_argument("--t", type=int, choices=(2, 3), default=3)
    c.add_argument("--out", default=None, help="write the design document here")
    c.add_argument("--verify", action="store_true", help="brute-force check the result")
    c.add_argument("--cap", type=int, default=DEFAULT_CAP)
    c.set_defaults(func=cmd_construct)

    vf = sub.add_parser("verify", help="brute-force check a design document")
    vf.add_argument("path")
    vf.add_argument("--cap", type=int, default=DEFAULT_CAP)
    vf.add_argument("--out", default=None, help="write the check report document here")
    vf.set_defaults(func=cmd_verify)

    tb = sub.add_parser("table", help="closed-form parameter table for GF(p^n)")
    tb.add_argument("--p", type=int, required=True)
    tb.add_argument("--n", type=int, required=True)
    tb.add_argument("--check", action="store_true", help="add measured stabilizer/lambda columns")
    tb.add_argument("--cap", type=int, default=DEFAULT_CAP)
    tb.add_argument("--out", default=None)
    tb.set_defaults(func=cmd_table)

    cc = sub.add_parser("compare-conic", help="case-i parameters vs the conic series")
    cc.add_argument("--p", type=int, required=True)
    cc.add_argument("--n", type=int, required=True)
    cc.add_argument("--i", type=int, default=1)
    cc.set_defaults(func=cmd_compare_conic)

    sc = sub.add_parser("selfcheck", help="deterministic property suite")
    sc.add_argument("--max-q", type=int, default=5)
    sc.set_defaults(func=cmd_selfcheck)

    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except ConditionError as exc:
        print(f"invalid configuration: {exc}", file=sys.stderr)
        return EXIT_CONFIG
    except CapExceeded as exc:
        print(f"refusing: {exc}", file=sys.stderr)
        return EXIT_CONFIG
    except (ValueError, OSError, json.JSONDecodeError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_CONFIG


if __name__ == "__main__":
    sys.exit(main())
