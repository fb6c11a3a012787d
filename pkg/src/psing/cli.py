"""Command-line front end: classify, sht, search and verify subcommands.

Exit codes: 0 success, 1 internal or property failure, 2 validation error,
3 resource cap exceeded.  JSON output is one UTF-8 document per invocation
with a top-level "schema" field; CSV has a fixed header row; all numbers
are exact, with rationals rendered as "num/den".
"""

from __future__ import annotations

import argparse
import csv
import json
import sys
from fractions import Fraction

from .discrepancy import (
    KLASS_CANONICAL_STRICT,
    KLASS_LOG_CANONICAL_STRICT,
    KLASS_TERMINAL,
    SingularityReport,
    classify,
)
from .errors import CapExceededError, ValidationError
from .explorer import Predicate, SearchQuery, TableRow, run_search
from .rep import rep_from_text
from .shift import shift_number, shift_profile, stratum_dim
from .verify import run_property_suite

EXIT_OK = 0
EXIT_INTERNAL = 1
EXIT_VALIDATION = 2
EXIT_CAP = 3

TABLE_FIELDS = ("p", "rep", "d", "l", "codim", "D", "delta", "class", "cm", "maximizers")
CLASSIFY_FIELDS = TABLE_FIELDS + ("upper_bound", "lower_bound", "lower_bound_hypothesis_gap")
PROFILE_FIELDS = ("s", "sht", "jump", "nu")


def _frac_text(x: Fraction) -> str:
    if x.denominator == 1:
        return str(x.numerator)
    return f"{x.numerator}/{x.denominator}"


def _bound_json(x: Fraction | None) -> int | str | None:
    if x is None:
        return None
    if x.denominator == 1:
        return x.numerator
    return _frac_text(x)


def _plain_cell(value) -> str:
    if value is None:
        return "-"
    if isinstance(value, bool):
        return "true" if value else "false"
    if isinstance(value, Fraction):
        return _frac_text(value)
    if isinstance(value, (list, tuple)):
        return " ".join(str(v) for v in value)
    return str(value)


def _csv_cell(value) -> str:
    if isinstance(value, (list, tuple)):
        return ";".join(str(v) for v in value)
    return _plain_cell(value)


def _emit_json(doc: dict) -> None:
    print(json.dumps(doc, ensure_ascii=False))


def _emit_csv(fields, records) -> None:
    writer = csv.writer(sys.stdout, lineterminator="\n")
    writer.writerow(fields)
    for record in records:
        writer.writerow([_csv_cell(record[f]) for f in fields])


def _emit_plain_table(fields, records) -> None:
    rows = [fields] + [[_plain_cell(r[f]) for f in fields] for r in records]
    widths = [max(len(row[i]) for row in rows) for i in range(len(fields))]
    for row in rows:
        print("  ".join(cell.ljust(w) for cell, w in zip(row, widths)).rstrip())


def _report_record(report: SingularityReport) -> dict:
    return {
        "p": report.rep.p,
        "rep": report.rep.to_text(),
        "d": report.inv.d,
        "l": report.inv.l,
        "codim": report.inv.codim,
        "D": report.inv.D,
        "delta": report.delta.serialize(),
        "class": report.klass,
        "cm": report.cm,
        "maximizers": list(report.maximizers),
        "upper_bound": report.upper_bound,
        "lower_bound": report.lower_bound,
        "lower_bound_hypothesis_gap": report.lower_bound_hypothesis_gap,
    }


def _row_record(row: TableRow) -> dict:
    return {
        "p": row.rep.p,
        "rep": row.rep.to_text(),
        "d": row.d,
        "l": row.l,
        "codim": row.codim,
        "D": row.D,
        "delta": row.delta.serialize(),
        "class": row.klass,
        "cm": row.cm,
        "maximizers": list(row.maximizers),
    }


def cmd_classify(args) -> int:
    rep = rep_from_text(args.p, args.rep)
    report = classify(rep, remark_literal=args.remark_literal)
    record = _report_record(report)
    if args.format == "json":
        record["lower_bound"] = _bound_json(record["lower_bound"])
        _emit_json({"schema": "psing.classify@1", **record})
    elif args.format == "csv":
        _emit_csv(CLASSIFY_FIELDS, [record])
    else:
        for key in CLASSIFY_FIELDS:
            print(f"{key}: {_plain_cell(record[key])}")
    return EXIT_OK


def cmd_sht(args) -> int:
    rep = rep_from_text(args.p, args.rep)
    if args.profile:
        prof = shift_profile(rep)
        records = [
            {"s": s, "sht": prof.sht[s - 1], "jump": prof.jump[s - 1],
             "nu": stratum_dim(rep, s)}
            for s in range(1, rep.p)
        ]
        if args.format == "json":
            _emit_json({
                "schema": "psing.profile@1",
                "p": rep.p,
                "rep": rep.to_text(),
                "rows": records,
            })
        elif args.format == "csv":
            _emit_csv(PROFILE_FIELDS, records)
        else:
            _emit_plain_table(PROFILE_FIELDS, records)
        return EXIT_OK
    if args.nu:
        kind, value = "nu", stratum_dim(rep, args.j)
    else:
        kind, value = "sht", shift_number(rep, args.j)
    if args.format == "json":
        _emit_json({
            "schema": "psing.value@1",
            "p": rep.p,
            "rep": rep.to_text(),
            "j": args.j,
            kind: value,
        })
    elif args.format == "csv":
        _emit_csv(("j", kind), [{"j": args.j, kind: value}])
    else:
        print(value)
    return EXIT_OK


def cmd_search(args) -> int:
    primes = _parse_primes(args.primes)
    klass_sets = []
    if args.terminal:
        klass_sets.append({KLASS_TERMINAL})
    if args.canonical:
        klass_sets.append({KLASS_TERMINAL, KLASS_CANONICAL_STRICT})
    if args.log_canonical:
        klass_sets.append({
            KLASS_TERMINAL,
            KLASS_CANONICAL_STRICT,
            KLASS_LOG_CANONICAL_STRICT,
        })
    klass_in = None
    if klass_sets:
        klass_in = frozenset.intersection(*map(frozenset, klass_sets))
    predicate = Predicate(klass_in=klass_in, cm=False if args.not_cm else None)
    query = SearchQuery(
        primes=primes,
        d_max=args.d_max,
        predicate=predicate,
        minimize_d=args.minimal,
    )
    rows = [_row_record(row) for row in run_search(query)]
    if args.format == "json":
        _emit_json({"schema": "psing.table@1", "rows": rows})
    elif args.format == "csv":
        _emit_csv(TABLE_FIELDS, rows)
    else:
        _emit_plain_table(TABLE_FIELDS, rows)
    return EXIT_OK


def cmd_verify(args) -> int:
    primes = _parse_primes(args.primes)
    if args.d_max < 1:
        raise ValidationError(f"--d-max must be >= 1 (got {args.d_max})")
    if args.n_max < 1:
        raise ValidationError(f"--n-max must be >= 1 (got {args.n_max})")
    results = run_property_suite(primes, args.d_max, n_max=args.n_max)
    failed = [r for r in results if not r.passed]
    for r in results:
        status = "pass" if r.passed else "FAIL"
        print(f"{r.name}: {r.instances} instances, {status}")
    if failed:
        print(f"counterexample: {json.dumps(failed[0].counterexample)}")
        return EXIT_INTERNAL
    print("all properties passed")
    return EXIT_OK


def _parse_primes(text: str) -> tuple[int, ...]:
    items = [t for t in text.replace(" ", "").split(",") if t]
    if not items:
        raise ValidationError("--primes must list at least one prime")
    try:
        return tuple(int(t) for t in items)
    except ValueError:
        raise ValidationError(f"--primes must be a comma list of integers (got {text!r})")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="psing",
        description="Classify singularities of p-cyclic quotient varieties "
        "in characteristic p, exactly.",
    )
    parser.add_argument(
        "--remark-literal",
        action="store_true",
        help="grant the rational lower bound already at D = p-1 instead of D >= p "
        "(the contested case is flagged in the output either way)",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def add_format(p):
        p.add_argument(
            "--format",
            choices=("plain", "json", "csv"),
            default="plain",
            help="output format (default: plain)",
        )

    c = sub.add_parser("classify", help="classify one representation")
    c.add_argument("-p", type=int, required=True, help="the characteristic, a prime")
    c.add_argument("--rep", required=True, help='part sizes, e.g. "4" or "2^3,1^2"')
    add_format(c)
    c.set_defaults(func=cmd_classify)

    s = sub.add_parser("sht", help="shift numbers, profiles and stratum dimensions")
    s.add_argument("-p", type=int, required=True, help="the characteristic, a prime")
    s.add_argument("--rep", required=True, help='part sizes, e.g. "4" or "2^3,1^2"')
    target = s.add_mutually_exclusive_group(required=True)
    target.add_argument("-j", type=int, help="a single jump index")
    target.add_argument(
        "--profile",
        action="store_true",
        help="emit the full table over s = 1..p-1 (columns s, sht, jump, nu)",
    )
    s.add_argument(
        "--nu",
        action="store_true",
        help="with -j: emit the stratum dimension instead of the shift number",
    )
    add_format(s)
    s.set_defaults(func=cmd_sht)

    r = sub.add_parser("search", help="search enumerated representations")
    r.add_argument("--primes", required=True, help="comma list, e.g. 2,3,5,7")
    r.add_argument("--d-max", type=int, required=True, help="largest dimension to scan")
    r.add_argument("--terminal", action="store_true", help="keep terminal quotients")
    r.add_argument(
        "--canonical", action="store_true", help="keep canonical quotients (includes terminal)"
    )
    r.add_argument(
        "--log-canonical",
        action="store_true",
        help="keep log canonical quotients (includes canonical and terminal)",
    )
    r.add_argument("--not-cm", action="store_true", help="keep non-Cohen-Macaulay quotients")
    r.add_argument(
        "--minimal",
        action="store_true",
        help="per prime, keep only rows at the smallest matching dimension",
    )
    add_format(r)
    r.set_defaults(func=cmd_search)

    v = sub.add_parser("verify", help="run the cross-checking property suite")
    v.add_argument("--primes", required=True, help="comma list, e.g. 2,3,5,7")
    v.add_argument("--d-max", type=int, required=True, help="largest dimension to scan")
    v.add_argument("--n-max", type=int, default=3, help="stratum scan depth (default 3)")
    v.set_defaults(func=cmd_verify)

    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except ValidationError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_VALIDATION
    except CapExceededError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_CAP
    except Exception as exc:  # noqa: BLE001 - the contract is exit code 1
        print(f"internal error: {exc}", file=sys.stderr)
        return EXIT_INTERNAL


if __name__ == "__main__":
    raise SystemExit(main())
