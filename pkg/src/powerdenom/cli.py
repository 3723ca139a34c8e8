"""Command line front end.

Four subcommands: ``seq`` streams sequence values as CSV or OEIS b-file
lines, ``powersum`` prints one power sum polynomial with its denominator and
integrality verdict, ``verify`` runs a theorem sweep and reports failures,
``bench`` compares the closed-form path against the rational oracle.

Exit codes: 0 success, 1 a verification sweep found failures, 2 usage error,
3 an internal identity was violated (a bug, never bad input).
"""

from __future__ import annotations

import argparse
import os
import sys
from typing import Iterator, Optional, Sequence

from .bench import bench_ids, run_bench
from .bernoulli import BernoulliCache, RationalPoly
from .denom import (
    full_denom,
    full_denom_quotient,
    nonconstant_denom,
    nonconstant_quotient,
    number_denom,
)
from .errors import TheoremViolationError
from .powersum import (
    ProgressionSpec,
    is_integral,
    power_sum_naive,
    power_sum_poly,
)
from .verify import available_sweeps, run_sweep

SEQ_IDS = ("D", "DD", "DB", "DDQ", "DBQ")


def _seq_rows(seq_id: str, lo: int, hi: int) -> Iterator[tuple[int, int]]:
    for n in range(lo, hi + 1):
        if seq_id == "D":
            yield n, number_denom(n).value
        elif seq_id == "DD":
            yield n, nonconstant_denom(n).value
        elif seq_id == "DB":
            yield n, full_denom(n).value
        elif seq_id == "DDQ":
            if n % 2:
                yield n, nonconstant_quotient(n)
        elif seq_id == "DBQ":
            if n % 2 == 0 and n >= 2:
                yield n, full_denom_quotient(n)


def _cmd_seq(args: argparse.Namespace) -> int:
    lo, hi = args.start, args.stop
    if lo < 1 or hi < lo:
        raise ValueError(f"need 1 <= from <= to, got {lo}..{hi}")
    emitted = 0
    out = sys.stdout
    if args.format == "csv":
        out.write("n,a_n\n")
    for n, value in _seq_rows(args.seq_id, lo, hi):
        emitted += 1
        if args.format == "csv":
            out.write(f"{n},{value}\n")
        else:
            out.write(f"{n} {value}\n")
    skipped = hi - lo + 1 - emitted
    if skipped:
        parity = "odd" if args.seq_id == "DDQ" else "even"
        print(
            f"note: {args.seq_id} is defined for {parity} n; "
            f"skipped {skipped} other indices",
            file=sys.stderr,
        )
    return 0


def _format_int_poly(coeffs: Sequence[int]) -> str:
    # ascending integer coefficients in, descending-power text out
    terms = []
    for e in range(len(coeffs) - 1, -1, -1):
        c = coeffs[e]
        if not c:
            continue
        mag = abs(c)
        if e == 0:
            body = str(mag)
        elif e == 1:
            body = "x" if mag == 1 else f"{mag}x"
        else:
            body = f"x^{e}" if mag == 1 else f"{mag}x^{e}"
        terms.append(("-" if c < 0 else "+", body))
    if not terms:
        return "0"
    head_sign, head = terms[0]
    text = ("-" if head_sign == "-" else "") + head
    for sign, body in terms[1:]:
        text += f" {sign} {body}"
    return text


def format_poly(f: RationalPoly) -> str:
    """Human form: integer polynomial, divided by its denominator if any."""
    if f.is_zero:
        return "0"
    d = f.denominator
    body = _format_int_poly([int(c * d) for c in f.coeffs])
    return body if d == 1 else f"({body})/{d}"


def _cmd_powersum(args: argparse.Namespace) -> int:
    if args.n == 0:
        # trivial sum of x ones; every theorem starts at n = 1
        if args.m < 1 or args.r < 0:
            raise ValueError("need m >= 1 and r >= 0")
        poly = RationalPoly((0, 1))
        integral = True
    else:
        spec = ProgressionSpec(args.m, args.r, args.n)
        poly = power_sum_poly(BernoulliCache(), spec)
        integral = is_integral(spec)
    print(f"power sum: m={args.m} r={args.r} n={args.n}")
    print(f"polynomial: {format_poly(poly)}")
    print("coefficients:", ", ".join(str(c) for c in poly.coeffs))
    print(f"denominator: {poly.denominator}")
    print(f"integral: {'yes' if integral else 'no'}")
    if args.x is not None:
        if args.x < 0:
            raise ValueError(f"need x >= 0, got {args.x}")
        via_poly = poly(args.x)
        if args.n == 0:
            naive = args.x
        else:
            naive = power_sum_naive(spec, args.x)
        print(f"value at x={args.x}: {via_poly}")
        print(f"naive sum: {naive}")
        if via_poly != naive:
            raise TheoremViolationError(
                f"polynomial and naive sum disagree at x={args.x}: "
                f"{via_poly} vs {naive}"
            )
        print("cross-check: match")
    return 0


def _cmd_verify(args: argparse.Namespace) -> int:
    report = run_sweep(
        args.theorem_id,
        max_n=args.max,
        m_max=args.m_max,
        r_max=args.r_max,
        jobs=args.jobs,
    )
    verdict = "PASS" if report.ok else f"FAIL ({len(report.failures)} failures)"
    print(f"{report.theorem_id}: {report.range_label}")
    print(f"checked {report.checked} cases in {report.elapsed:.2f}s: {verdict}")
    for inputs, expected, actual in report.failures:
        print(f"  input={inputs} expected={expected} actual={actual}")
    return 0 if report.ok else 1


def _parse_span(text: str) -> tuple[int, int]:
    lo, sep, hi = text.partition("..")
    if not sep:
        raise ValueError(f"range must look like LO..HI, got {text!r}")
    try:
        return int(lo), int(hi)
    except ValueError:
        raise ValueError(f"range must look like LO..HI, got {text!r}") from None


def _cmd_bench(args: argparse.Namespace) -> int:
    lo, hi = _parse_span(args.span)
    record = run_bench(args.sequence_id, lo, hi, reps=args.reps)
    print("id,lo,hi,formula_ns,oracle_ns,speedup")
    print(
        f"{record.sequence_id},{record.lo},{record.hi},"
        f"{record.formula_ns},{record.oracle_ns},{float(record.speedup):.2f}"
    )
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="powerdenom",
        description=(
            "Denominators of power sums of arithmetic progressions and of "
            "Bernoulli polynomials: sequences, verification sweeps, benchmarks."
        ),
    )
    sub = parser.add_subparsers(dest="command", required=True)

    seq = sub.add_parser(
        "seq", help="stream a denominator or quotient sequence"
    )
    seq.add_argument("seq_id", choices=SEQ_IDS, help="sequence to emit")
    seq.add_argument("--from", dest="start", type=int, required=True, metavar="N")
    seq.add_argument("--to", dest="stop", type=int, required=True, metavar="N")
    seq.add_argument(
        "--format", choices=("csv", "bfile"), default="bfile",
        help="csv with header n,a_n or OEIS b-file lines (default)",
    )

    ps = sub.add_parser(
        "powersum",
        help="print one power sum polynomial exactly",
        description="n = 0 is allowed here and prints the trivial sum x.",
    )
    ps.add_argument("--m", type=int, required=True, help="common difference, >= 1")
    ps.add_argument("--r", type=int, required=True, help="first term, >= 0")
    ps.add_argument("--n", type=int, required=True, help="exponent, >= 0")
    ps.add_argument("--x", type=int, default=None, help="also evaluate at x terms")

    ver = sub.add_parser("verify", help="run one theorem sweep")
    ver.add_argument("theorem_id", choices=available_sweeps())
    ver.add_argument("--max", type=int, default=None, help="largest n")
    ver.add_argument("--m-max", type=int, default=None)
    ver.add_argument("--r-max", type=int, default=None)
    ver.add_argument(
        "--jobs", type=int, default=max(os.cpu_count() or 1, 1),
        help="worker processes (default: available parallelism)",
    )

    bench = sub.add_parser(
        "bench", help="time formula vs. oracle after checking they agree"
    )
    bench.add_argument("sequence_id", choices=bench_ids())
    bench.add_argument("span", metavar="LO..HI", help="index range, e.g. 1..200")
    bench.add_argument("--reps", type=int, default=3, help="repetitions, best-of")

    return parser


_COMMANDS = {
    "seq": _cmd_seq,
    "powersum": _cmd_powersum,
    "verify": _cmd_verify,
    "bench": _cmd_bench,
}


def main(argv: Optional[Sequence[str]] = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return exc.code if isinstance(exc.code, int) else 2
    try:
        return _COMMANDS[args.command](args)
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except TheoremViolationError as exc:
        print(f"internal invariant violated: {exc}", file=sys.stderr)
        return 3


def run() -> None:
    raise SystemExit(main())
