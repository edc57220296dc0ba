"""Command-line front end.

Subcommands cover every operation: Niven checks, digit rendering,
closed-form vs brute-force family strings, single-instance and grid
verification, combined-degree base search, binomial bound audits,
enumeration, and even-base probes.

Output formats: human text (default), one JSON record (--format json),
or tab-separated rows (--format tsv).  Structured output renders every
integer as a decimal string, and digit strings appear both as an array
of digit values and in the parenthesized form "(6510)(6509)(0)(1)".
Exit codes: 0 all checks passed, 1 a check failed, 2 usage error,
3 digit budget exceeded.
"""

from __future__ import annotations

import argparse
import json
import sys
from concurrent.futures import ProcessPoolExecutor
from itertools import product

from . import families, oracle
from .digits import DigitString, as_base, digit_sum, to_base
from .errors import CapExceeded, NivenkitError, PreconditionViolated
from .nivencheck import is_b_niven, is_degree_m

SCHEMA_VERSION = "1"

DEGREE_11_NOTE = (
    "threshold is C(11,6) = 462; the sometimes-quoted bound 66 conflicts "
    "with the binomial threshold and is treated as an erratum"
)


# ---------------------------------------------------------------------------
# argument parsing helpers


def _int_set(spec: str) -> tuple[int, ...]:
    """Parse '7', '1..3', or comma mixes like '7,11,19..23' (sorted, unique)."""
    out: set[int] = set()
    for item in spec.split(","):
        item = item.strip()
        if not item:
            continue
        if ".." in item:
            lo_s, _, hi_s = item.partition("..")
            try:
                lo, hi = int(lo_s), int(hi_s)
            except ValueError:
                raise argparse.ArgumentTypeError(f"invalid range {item!r}") from None
            if hi < lo:
                raise argparse.ArgumentTypeError(f"empty range {item!r}")
            out.update(range(lo, hi + 1))
        else:
            try:
                out.add(int(item))
            except ValueError:
                raise argparse.ArgumentTypeError(f"invalid integer {item!r}") from None
    if not out:
        raise argparse.ArgumentTypeError(f"no values in {spec!r}")
    return tuple(sorted(out))


def _span_pair(spec: str) -> tuple[int, int]:
    """Parse an inclusive interval 'lo..hi' (or a single value)."""
    values = _int_set(spec)
    return values[0], values[-1]


# ---------------------------------------------------------------------------
# rendering helpers


def _cell(value) -> str:
    if value is None:
        return "-"
    if isinstance(value, bool):
        return "true" if value else "false"
    if isinstance(value, (list, tuple)):
        return ",".join(_cell(v) for v in value) if value else "-"
    return str(value)


def _flatten(obj, prefix: str = "", out=None) -> dict:
    if out is None:
        out = {}
    for key, value in obj.items():
        name = f"{prefix}{key}"
        if isinstance(value, dict):
            _flatten(value, f"{name}.", out)
        elif isinstance(value, list) and value and isinstance(value[0], dict):
            continue  # row tables are emitted separately
        else:
            out[name] = value
    return out


def _digit_payload(ds: DigitString) -> dict:
    return {
        "digits": [str(d) for d in ds.digits],
        "string": ds.parenthesized(),
        "length": str(len(ds)),
        "digit_sum": str(ds.digit_sum()),
    }


def _emit(args, inputs: dict, result: dict, rows=None) -> None:
    record = {
        "schema_version": SCHEMA_VERSION,
        "command": args.command,
        "inputs": inputs,
        "result": result,
    }
    if args.format == "json":
        print(json.dumps(record, indent=2))
    elif args.format == "tsv":
        table = rows if rows is not None else [_flatten(result)]
        if table:
            cols = list(table[0].keys())
            print("\t".join(cols))
            for row in table:
                print("\t".join(_cell(row.get(c)) for c in cols))
    else:
        for key, value in _flatten(result).items():
            print(f"{key}: {_cell(value)}")
        if rows:
            cols = list(rows[0].keys())
            widths = [
                max(len(c), max(len(_cell(r.get(c))) for r in rows)) for c in cols
            ]
            print("  ".join(c.ljust(w) for c, w in zip(cols, widths)).rstrip())
            for row in rows:
                print(
                    "  ".join(
                        _cell(row.get(c)).ljust(w) for c, w in zip(cols, widths)
                    ).rstrip()
                )


# ---------------------------------------------------------------------------
# subcommands


def cmd_check(args) -> int:
    base = as_base(args.base)
    n = args.number
    m = args.degree
    niven = is_b_niven(n, base)
    ok = niven if m == 1 else is_degree_m(n, base, m)
    result = {
        "number": str(n),
        "base": str(base),
        "degree": str(m),
        "digit_sum": str(digit_sum(n, base)),
        "niven": niven,
        "degree_ok": ok,
    }
    if m > 1:
        result["power_digit_sum"] = str(digit_sum(n**m, base))
    _emit(args, {"base": str(base), "number": str(n), "degree": str(m)}, result)
    return 0 if ok else 1


def cmd_digits(args) -> int:
    base = as_base(args.base)
    ds = to_base(args.number, base)
    result = {"number": str(args.number), "base": str(base), **_digit_payload(ds)}
    _emit(args, {"base": str(base), "number": str(args.number)}, result)
    return 0


def cmd_family(args) -> int:
    base = as_base(args.base)
    k, m = args.k, args.power
    inputs = {"base": str(base), "k": str(k), "power": str(m), "mode": args.mode}
    result: dict = {"base": str(base), "k": str(k), "power": str(m)}
    closed = brute = None
    if args.mode in ("closed-form", "both"):
        closed = families.power_digits(base, k, m)
        result["closed_form"] = _digit_payload(closed)
        result["predicted_digit_sum"] = str(families.predicted_digit_sum(base, k, m))
    if args.mode in ("oracle", "both"):
        brute = oracle.brute_force_power_digits(base, k, m)
        result["oracle"] = _digit_payload(brute)
    code = 0
    if args.mode == "both":
        match = closed == brute
        result["match"] = match
        code = 0 if match else 1
    _emit(args, inputs, result)
    return code


def _report_payload(report: oracle.VerificationReport) -> dict:
    cert = report.certificate
    inst = report.instance
    return {
        "b": str(inst.b),
        "k": str(inst.k),
        "m": str(inst.m),
        "theorem": cert.theorem,
        "threshold": str(cert.threshold),
        "threshold_ok": cert.threshold_ok,
        "congruence_ok": cert.congruence_ok,
        "odd_part_q": str(cert.decomposition.q),
        "odd_part_p": str(cert.decomposition.p),
        "predicted_digit_sum": str(cert.predicted_digit_sum),
        "admissible": report.admissible,
        "closed_form_matches": report.closed_form_matches,
        "digit_sum_matches": report.digit_sum_matches,
        "niven_base": report.niven_base,
        "niven_power": report.niven_power,
        "euler_ok": report.divisibility.euler_ok,
        "bm1_ok": report.divisibility.bm1_ok,
        "chain_ok": report.divisibility.chain_ok,
        "conclusion_checked": cert.conclusion_checked,
        "verified_via": cert.verified_via,
        "passed": report.passed,
    }


def cmd_verify(args) -> int:
    report = oracle.verify_instance(args.base, args.k, args.degree)
    _emit(
        args,
        {"base": str(args.base), "k": str(args.k), "degree": str(args.degree)},
        _report_payload(report),
    )
    return 0 if report.passed else 1


def _verify_cell(cell: tuple[int, int, int]) -> oracle.VerificationReport:
    return oracle.verify_instance(*cell)


def cmd_verify_grid(args) -> int:
    cells = sorted(product(args.bases, args.k, args.degrees))
    if args.jobs > 1:
        with ProcessPoolExecutor(max_workers=args.jobs) as pool:
            reports = list(pool.map(_verify_cell, cells, chunksize=4))
    else:
        reports = [_verify_cell(c) for c in cells]
    rows = [_report_payload(r) for r in reports]
    failed = sum(1 for r in reports if not r.passed)
    inputs = {
        "bases": ",".join(map(str, args.bases)),
        "k": ",".join(map(str, args.k)),
        "degrees": ",".join(map(str, args.degrees)),
        "jobs": str(args.jobs),
    }
    result = {"total": str(len(rows)), "failed": str(failed), "cells": rows}
    _emit(args, inputs, result, rows=rows)
    return 0 if failed == 0 else 1


def cmd_search_base(args) -> int:
    d = args.max_degree
    params = families.theorem3_params(d)
    rows = []
    for i in range(1, d + 1):
        note = DEGREE_11_NOTE if i == 11 else ""
        rows.append(
            {
                "degree": str(i),
                "threshold": str(params.thresholds[i - 1]),
                "odd_part": str(params.odd_parts[i - 1]),
                "note": note,
            }
        )
    result = {
        "max_degree": str(d),
        "smallest_base": str(families.smallest_base(d)),
        "min_base": str(params.min_base),
        "modulus": str(params.modulus_P),
        "product_modulus": str(params.product_modulus),
        "degrees": rows,
    }
    _emit(args, {"max_degree": str(d)}, result, rows=rows)
    return 0


def cmd_lemma(args) -> int:
    if args.max_n < 1:
        raise NivenkitError(f"--max-n must be >= 1, got {args.max_n}")
    rows = []
    reports = [families.lemma_bounds_report(n) for n in range(1, args.max_n + 1)]
    for rep in reports:
        rows.append(
            {
                "n": str(rep.n),
                "central_binomial": str(rep.central),
                "lower_holds": rep.lower_holds,
                "upper_holds": rep.upper_holds,
            }
        )
    result = {
        "max_n": str(args.max_n),
        "upper_holds_all": all(r.upper_holds for r in reports),
        "lower_holds_any": any(r.lower_holds for r in reports),
        "rows": rows,
    }
    _emit(args, {"max_n": str(args.max_n)}, result, rows=rows)
    return 0


def cmd_enumerate(args) -> int:
    values = oracle.enumerate_niven(args.base, args.limit, args.degree)
    inputs = {
        "base": str(args.base),
        "limit": str(args.limit),
        "degree": str(args.degree),
    }
    result = {
        **inputs,
        "count": str(len(values)),
        "values": [str(v) for v in values],
    }
    _emit(args, inputs, result, rows=[{"value": str(v)} for v in values])
    return 0


def cmd_probe_even(args) -> int:
    lo, hi = args.bases
    findings = oracle.probe_even_bases((lo, hi), args.max_degree, args.k)
    rows = [
        {"b": str(b), "degrees": [str(m) for m in sorted(degs)]}
        for b, degs in findings
    ]
    inputs = {
        "bases": f"{lo}..{hi}",
        "max_degree": str(args.max_degree),
        "k": str(args.k),
    }
    result = {**inputs, "cells": rows}
    _emit(args, inputs, result, rows=rows)
    return 0


# ---------------------------------------------------------------------------
# parser


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="nivenkit",
        description="Construct and verify high-degree Niven numbers in arbitrary bases.",
    )
    fmt = argparse.ArgumentParser(add_help=False)
    fmt.add_argument(
        "--format",
        choices=("text", "json", "tsv"),
        default="text",
        help="output format (default: text)",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("check", parents=[fmt], help="Niven / degree-m test for one number")
    p.add_argument("--base", type=int, required=True, help="numeration base (>= 2)")
    p.add_argument("--number", type=int, required=True, help="the integer to test")
    p.add_argument("--degree", type=int, default=1, help="also require number**m Niven")
    p.set_defaults(func=cmd_check)

    p = sub.add_parser("digits", parents=[fmt], help="base-b digit string of a number")
    p.add_argument("--base", type=int, required=True)
    p.add_argument("--number", type=int, required=True)
    p.set_defaults(func=cmd_digits)

    p = sub.add_parser(
        "family",
        parents=[fmt],
        help="digit string of (b**(2**k)-1)**m, closed form and/or brute force",
    )
    p.add_argument("--base", type=int, required=True)
    p.add_argument("--k", type=int, required=True)
    p.add_argument("--power", type=int, required=True)
    mode = p.add_mutually_exclusive_group()
    mode.add_argument(
        "--closed-form", dest="mode", action="store_const", const="closed-form"
    )
    mode.add_argument("--oracle", dest="mode", action="store_const", const="oracle")
    mode.add_argument("--both", dest="mode", action="store_const", const="both")
    p.set_defaults(func=cmd_family, mode="both")

    p = sub.add_parser("verify", parents=[fmt], help="run every check on one (b, k, m)")
    p.add_argument("--base", type=int, required=True)
    p.add_argument("--k", type=int, required=True)
    p.add_argument("--degree", type=int, required=True)
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser(
        "verify-grid", parents=[fmt], help="verify a whole (b, k, m) grid"
    )
    p.add_argument("--bases", type=_int_set, required=True, help="e.g. 7,11,19..23")
    p.add_argument("--k", type=_int_set, required=True, help="e.g. 1..3")
    p.add_argument("--degrees", type=_int_set, required=True, help="e.g. 1..15")
    p.add_argument("--jobs", type=int, default=1, help="parallel workers (default 1)")
    p.set_defaults(func=cmd_verify_grid)

    p = sub.add_parser(
        "search-base",
        parents=[fmt],
        help="smallest base carrying every degree up to a bound at once",
    )
    p.add_argument("--max-degree", type=int, required=True)
    p.set_defaults(func=cmd_search_base)

    p = sub.add_parser(
        "lemma", parents=[fmt], help="exact audit of the central-binomial bounds"
    )
    p.add_argument("--max-n", type=int, required=True)
    p.set_defaults(func=cmd_lemma)

    p = sub.add_parser(
        "enumerate", parents=[fmt], help="list degree-m Niven numbers up to a limit"
    )
    p.add_argument("--base", type=int, required=True)
    p.add_argument("--limit", type=int, required=True)
    p.add_argument("--degree", type=int, default=1)
    p.set_defaults(func=cmd_enumerate)

    p = sub.add_parser(
        "probe-even", parents=[fmt], help="brute-force degree probe over even bases"
    )
    p.add_argument("--bases", type=_span_pair, required=True, help="e.g. 2..40")
    p.add_argument("--max-degree", type=int, required=True)
    p.add_argument("--k", type=int, required=True)
    p.set_defaults(func=cmd_probe_even)

    return parser


def main(argv=None) -> int:
    # very large instances produce decimal strings beyond the interpreter's
    # default int<->str guard
    if hasattr(sys, "set_int_max_str_digits"):
        sys.set_int_max_str_digits(2_000_000)
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except CapExceeded as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 3
    except PreconditionViolated as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    except NivenkitError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
