"""Command-line front end: construction, analysis, verification, export.

Exit codes: 0 success, 2 invalid input, 3 verification mismatch,
4 brute-force cap exceeded, 5 I/O error.
"""

from __future__ import annotations

import argparse
import json
import sys

from . import caps
from .charsum import lambda_direct, lambda_extend, lambda_table
from .errors import CapExceededError, VerificationError
from .family import build_fu, closed_spectrum
from .ff import field_ctx
from .sbox import (
    FunctionTable,
    ddt_compute,
    function_table_from_dict,
    is_locally_apn,
    moment_check,
    n4_from_ddt,
    spectrum_from_ddt,
    spectrum_to_dict,
    uniformity,
    write_ddt_csv,
)
from .verify import run_verification

EXIT_OK = 0
EXIT_INVALID = 2
EXIT_MISMATCH = 3
EXIT_CAP = 4
EXIT_IO = 5


def _parse_modulus(text: str) -> tuple[int, ...]:
    try:
        return tuple(int(c) for c in text.split(","))
    except ValueError as e:
        raise ValueError(f"bad modulus {text!r}: expected 'c0,c1,...,cn'") from e


def _make_ctx(args) -> "FieldCtx":
    modulus = _parse_modulus(args.modulus) if getattr(args, "modulus", None) else None
    return field_ctx(args.p, args.n, modulus)


def _emit(text: str, out: str | None) -> None:
    if out:
        with open(out, "w") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


def cmd_lambda(args) -> int:
    if args.method == "brute-force":
        value = lambda_direct(args.p, args.n).value
    elif args.method == "closed-form":
        value = lambda_extend(args.p, args.n).value
    else:
        value = lambda_extend(args.p, args.n).value
        direct = lambda_direct(args.p, args.n).value
        if value != direct:
            print(f"MISMATCH: recursion {value} != direct {direct}", file=sys.stderr)
            return EXIT_MISMATCH
        print(f"# recursion and direct summation agree: {value}", file=sys.stderr)
    print(value)
    return EXIT_OK


def cmd_lambda_table(args) -> int:
    lines = ["p,lambda"]
    lines += [f"{e.p},{e.value}" for e in lambda_table(args.max)]
    _emit("\n".join(lines) + "\n", args.out)
    return EXIT_OK


def cmd_spectrum(args) -> int:
    ctx = _make_ctx(args)
    q = ctx.q
    method = args.method
    if method is None:
        if args.u not in (1, -1):
            method = "brute-force"
        else:
            method = "both" if q <= caps.q2_cap() else "closed-form"
    closed = brute = None
    if method in ("closed-form", "both"):
        if args.u not in (1, -1):
            raise ValueError(f"closed form only covers u = +1/-1, got u={args.u}")
        closed = closed_spectrum(ctx.p, ctx.n)
    if method in ("brute-force", "both"):
        F = build_fu(ctx, args.u)
        ddt = ddt_compute(F)
        brute = spectrum_from_ddt(ddt)
        if args.exclude_zero_row:
            brute[0] -= q - 1
            brute[q] -= 1
            brute = {i: w for i, w in brute.items() if w}
    if method == "both" and closed != brute:
        print(f"MISMATCH: closed {closed} != brute {brute}", file=sys.stderr)
        return EXIT_MISMATCH
    spectrum = brute if brute is not None else closed
    _emit(json.dumps(spectrum_to_dict(spectrum, q), indent=2) + "\n", args.out)
    return EXIT_OK


def cmd_ddt(args) -> int:
    ctx = _make_ctx(args)
    ddt = ddt_compute(build_fu(ctx, args.u))
    with open(args.out, "w") as fh:
        write_ddt_csv(ddt, fh, header=args.header)
    return EXIT_OK


def cmd_verify(args) -> int:
    report = run_verification(args.p, args.n)
    _emit(json.dumps(report, indent=2) + "\n", args.out)
    failed = [c["name"] for c in report["checks"] if c["status"] == "fail"]
    if failed:
        print(f"FAILED: {', '.join(failed)}", file=sys.stderr)
        return EXIT_MISMATCH
    return EXIT_OK


def cmd_audit(args) -> int:
    try:
        with open(args.input) as fh:
            data = json.load(fh)
    except OSError:
        raise
    except json.JSONDecodeError as e:
        raise ValueError(f"not valid JSON: {e}") from e
    F = function_table_from_dict(data)
    q = F.ctx.q
    ddt = ddt_compute(F)
    spec = spectrum_from_ddt(ddt)
    apn = is_locally_apn(ddt, F.ctx.p)
    mom = moment_check(spec, q)
    result = {
        "p": F.ctx.p,
        "n": F.ctx.n,
        "q": q,
        "uniformity": uniformity(ddt),
        "spectrum": spectrum_to_dict(spec, q),
        "locally_apn": {"verdict": apn.verdict, "max_delta": apn.max_delta},
        "moments": {"sum_omega": mom.sum0, "sum_i_omega": mom.sum1, "ok": mom.ok},
        "n4": n4_from_ddt(ddt),
    }
    _emit(json.dumps(result, indent=2) + "\n", args.out)
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="diffspec",
        description="Exact differential-spectrum analysis over odd-characteristic finite fields",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def add_field_args(sp, with_u=False):
        sp.add_argument("--p", type=int, required=True, help="odd prime characteristic")
        sp.add_argument("--n", type=int, default=1, help="extension degree (default 1)")
        sp.add_argument("--modulus", help="override modulus as 'c0,c1,...,cn' (monic)")
        if with_u:
            sp.add_argument("--u", type=int, default=1, help="binomial coefficient u (default 1)")

    sp = sub.add_parser("lambda", help="character sum of x(x^2-2x-1) over GF(p^n)")
    sp.add_argument("--p", type=int, required=True)
    sp.add_argument("--n", type=int, default=1)
    sp.add_argument("--method", choices=["closed-form", "brute-force", "both"],
                    default="closed-form")
    sp.set_defaults(func=cmd_lambda)

    sp = sub.add_parser("lambda-table", help="CSV of lambda(p,1) for primes p = 3 (mod 4)")
    sp.add_argument("--max", type=int, required=True, help="largest prime to include")
    sp.add_argument("--out", help="output file (default stdout)")
    sp.set_defaults(func=cmd_lambda_table)

    sp = sub.add_parser("spectrum", help="differential spectrum of the binomial")
    add_field_args(sp, with_u=True)
    sp.add_argument("--method", choices=["closed-form", "brute-force", "both"],
                    default=None, help="default: both when q = 3 (mod 4), u = +/-1 and q within cap")
    sp.add_argument("--exclude-zero-row", action="store_true",
                    help="drop the a=0 row contribution for comparison with other conventions")
    sp.add_argument("--out", help="output file (default stdout)")
    sp.set_defaults(func=cmd_spectrum)

    sp = sub.add_parser("ddt", help="export the full DDT as CSV")
    add_field_args(sp, with_u=True)
    sp.add_argument("--out", required=True, help="output CSV path")
    sp.add_argument("--header", action="store_true", help="emit a column-index header row")
    sp.set_defaults(func=cmd_ddt)

    sp = sub.add_parser("verify", help="run the full identity suite for (p, n)")
    sp.add_argument("--p", type=int, required=True)
    sp.add_argument("--n", type=int, default=1)
    sp.add_argument("--out", help="output file (default stdout)")
    sp.set_defaults(func=cmd_verify)

    sp = sub.add_parser("audit", help="analyze an arbitrary function-table JSON file")
    sp.add_argument("input", help="path to a function-table JSON file")
    sp.add_argument("--out", help="output file (default stdout)")
    sp.set_defaults(func=cmd_audit)

    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except CapExceededError as e:
        print(f"error: {e}", file=sys.stderr)
        return EXIT_CAP
    except VerificationError as e:
        print(f"error: {e}", file=sys.stderr)
        return EXIT_MISMATCH
    except (ValueError, ZeroDivisionError) as e:
        print(f"error: {e}", file=sys.stderr)
        return EXIT_INVALID
    except OSError as e:
        print(f"error: {e}", file=sys.stderr)
        return EXIT_IO


def entry() -> None:
    raise SystemExit(main())


if __name__ == "__main__":
    entry()
