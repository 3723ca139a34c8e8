"""Range sweeps that try to falsify the library's theorem-level claims.

Each sweep exhaustively checks one family of identities over a bounded grid
and reports every counterexample found; an empty failure list is the whole
point.  Sweeps are embarrassingly parallel: the outer axis is split into
contiguous chunks, each worker owns a private Bernoulli cache, and chunk
results are merged in axis order so output is deterministic regardless of
worker count.

Sweep ids and default grids:

  T1-parity        nonconstant denominator odd exactly at powers of two
  T2-denominator   closed-form power sum denominator vs. the polynomial
  T3-integrality   integrality flag vs. actual integer coefficients
  C2-relations     successor lcm laws, divisibility, radicals, evenness
  T4-quotients     structure of nonconstant denominator quotients (odd n)
  T5-quotients     structure of full denominator quotients (even n)
  L1-congruence    prime power divisibility of scaled differences
  AM-integrality   integrality of m^n(B_n(r/m) - B_n) over a signed grid
"""

from __future__ import annotations

import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, replace
from math import lcm
from typing import Callable, Optional

from .bernoulli import BernoulliCache
from .denom import (
    full_denom,
    full_denom_quotient,
    nonconstant_denom,
    nonconstant_quotient,
    radical,
)
from .digits import p_valuation, primes_up_to
from .errors import TheoremViolationError
from .powersum import (
    ProgressionSpec,
    am_congruence_check,
    am_integer,
    is_integral,
    power_sum_denominator,
    power_sum_poly,
)

# (input tuple, expected, actual)
Failure = tuple[tuple, str, str]
ChunkResult = tuple[int, list[Failure]]


@dataclass(frozen=True, slots=True)
class Bounds:
    max_n: int
    m_max: Optional[int] = None
    r_max: Optional[int] = None


@dataclass(frozen=True, slots=True)
class SweepReport:
    theorem_id: str
    range_label: str
    checked: int
    failures: tuple[Failure, ...]
    elapsed: float

    @property
    def ok(self) -> bool:
        return not self.failures


def _parity_chunk(lo: int, hi: int, b: Bounds) -> ChunkResult:
    checked, failures = 0, []
    for n in range(lo, hi + 1):
        checked += 1
        got = nonconstant_denom(n).value % 2 == 1
        want = n & (n - 1) == 0
        if got != want:
            failures.append(((n,), f"odd={want}", f"odd={got}"))
    return checked, failures


def _denominator_chunk(lo: int, hi: int, b: Bounds) -> ChunkResult:
    cache = BernoulliCache()
    checked, failures = 0, []
    for m in range(lo, hi + 1):
        for n in range(1, b.max_n + 1):
            envelope = (n + 1) * nonconstant_denom(n + 1).value
            seen = None
            for r in range(b.r_max + 1):
                checked += 1
                spec = ProgressionSpec(m, r, n)
                formula = power_sum_denominator(spec)
                direct = power_sum_poly(cache, spec).denominator
                if formula != direct:
                    failures.append(((m, r, n), str(formula), str(direct)))
                    continue
                if seen is None:
                    seen = formula
                elif formula != seen:
                    failures.append(
                        ((m, r, n), f"same for every r ({seen})", str(formula))
                    )
                if envelope % formula:
                    failures.append(
                        ((m, r, n), f"divisor of {envelope}", str(formula))
                    )
    return checked, failures


def _integrality_chunk(lo: int, hi: int, b: Bounds) -> ChunkResult:
    cache = BernoulliCache()
    checked, failures = 0, []
    for m in range(lo, hi + 1):
        for r in range(b.r_max + 1):
            for n in range(1, b.max_n + 1):
                checked += 1
                spec = ProgressionSpec(m, r, n)
                flag = is_integral(spec)
                actual = power_sum_poly(cache, spec).denominator == 1
                if flag != actual:
                    failures.append(
                        ((m, r, n), f"integral={flag}", f"integral={actual}")
                    )
    return checked, failures


def _relations_chunk(lo: int, hi: int, b: Bounds) -> ChunkResult:
    checked, failures = 0, []
    for n in range(lo, hi + 1):
        checked += 1
        rad_next = radical(n + 1)
        dd_here = nonconstant_denom(n).value
        db_here = full_denom(n).value
        if n % 2:
            succ = nonconstant_denom(n + 1).value
            if n >= 3 and dd_here != lcm(succ, rad_next.value):
                failures.append(((n,), f"lcm({succ}, {rad_next.value})", str(dd_here)))
            if dd_here % succ:
                failures.append(((n,), f"multiple of {succ}", str(dd_here)))
        else:
            succ = full_denom(n + 1).value
            if db_here != lcm(succ, rad_next.value):
                failures.append(((n,), f"lcm({succ}, {rad_next.value})", str(db_here)))
            if db_here % succ:
                failures.append(((n,), f"multiple of {succ}", str(db_here)))
        composite = len(rad_next.primes) > 1 or rad_next.value != n + 1
        if composite and not rad_next.divides(dd_here):
            failures.append(
                ((n,), f"divisible by rad(n+1)={rad_next.value}", str(dd_here))
            )
        if db_here % 2:
            failures.append(((n,), "even full denominator", str(db_here)))
    return checked, failures


def _factorize(k: int) -> list[tuple[int, int]]:
    # ascending (prime, exponent) pairs by trial division; k >= 1
    out = []
    f = 2
    while f * f <= k:
        if k % f == 0:
            e = 0
            while k % f == 0:
                k //= f
                e += 1
            out.append((f, e))
        f += 1 if f == 2 else 2
    if k > 1:
        out.append((k, 1))
    return out


def _dd_quotient_chunk(lo: int, hi: int, b: Bounds) -> ChunkResult:
    checked, failures = 0, []
    for n in range(lo | 1, hi + 1, 2):
        checked += 1
        q = nonconstant_quotient(n)
        if n >= 3 and (n + 1) & n == 0:
            if q != 2:
                failures.append(((n,), "2 at n = 2^k - 1", str(q)))
        elif q % 2 == 0:
            failures.append(((n,), "odd quotient", str(q)))
        fac = _factorize(n + 1)
        if len(fac) == 2 and fac[0][0] == 2:
            # n + 1 = 2^l p^k with p an odd prime
            ell, p = fac[0][1], fac[1][0]
            if q not in (1, p):
                failures.append(((n,), f"in {{1, {p}}}", str(q)))
            elif (1 << ell) < p and q != p:
                failures.append(((n,), f"{p} when 2^l < p", str(q)))
    return checked, failures


def _db_quotient_chunk(lo: int, hi: int, b: Bounds) -> ChunkResult:
    checked, failures = 0, []
    start = lo if lo % 2 == 0 else lo + 1
    for n in range(start, hi + 1, 2):
        checked += 1
        q = full_denom_quotient(n)
        if q % 2 == 0:
            failures.append(((n,), "odd quotient", str(q)))
        fac = _factorize(n + 1)
        if len(fac) == 1:
            p = fac[0][0]
            if q != p:
                failures.append(((n,), f"{p} at n = {p}^k - 1", str(q)))
        elif len(fac) == 2:
            p, qq = fac[0][0], fac[1][0]
            if q not in (1, p, qq, p * qq):
                failures.append(((n,), f"in {{1, {p}, {qq}, {p * qq}}}", str(q)))
    return checked, failures


def _congruence_chunk(lo: int, hi: int, b: Bounds) -> ChunkResult:
    cache = BernoulliCache()
    small_primes = primes_up_to(13)
    checked, failures = 0, []
    for m in range(lo, hi + 1):
        usable = [p for p in small_primes if m % p]
        for r in range(b.r_max + 1):
            for n in range(1, b.max_n + 1):
                for p in usable:
                    for e in range(p_valuation(p, n) + 1):
                        checked += 1
                        if not am_congruence_check(cache, m, r, n, p, e):
                            failures.append(
                                ((m, r, n, p, e), f"divisible by {p}^{e}", "not")
                            )
    return checked, failures


def _am_chunk(lo: int, hi: int, b: Bounds) -> ChunkResult:
    cache = BernoulliCache()
    checked, failures = 0, []
    for m in range(lo, hi + 1):
        for r in range(-b.r_max, b.r_max + 1):
            for n in range(1, b.max_n + 1):
                checked += 1
                try:
                    am_integer(cache, m, r, n)
                except TheoremViolationError as exc:
                    failures.append(((m, r, n), "integer", str(exc)))
    return checked, failures


@dataclass(frozen=True, slots=True)
class _SweepDef:
    defaults: Bounds
    chunk: Callable[[int, int, Bounds], ChunkResult]
    axis: str  # "n" or "m": which bound the workers partition
    axis_lo: int
    label: Callable[[Bounds], str]


def _n_label(b: Bounds) -> str:
    return f"n <= {b.max_n}"


def _grid_label(b: Bounds) -> str:
    return f"m <= {b.m_max}, r <= {b.r_max}, n <= {b.max_n}"


_SWEEPS: dict[str, _SweepDef] = {
    "T1-parity": _SweepDef(Bounds(4096), _parity_chunk, "n", 1, _n_label),
    "T2-denominator": _SweepDef(
        Bounds(60, m_max=30, r_max=3), _denominator_chunk, "m", 1, _grid_label
    ),
    "T3-integrality": _SweepDef(
        Bounds(60, m_max=60, r_max=3), _integrality_chunk, "m", 1, _grid_label
    ),
    "C2-relations": _SweepDef(Bounds(2000), _relations_chunk, "n", 1, _n_label),
    "T4-quotients": _SweepDef(Bounds(2047), _dd_quotient_chunk, "n", 1, _n_label),
    "T5-quotients": _SweepDef(Bounds(2048), _db_quotient_chunk, "n", 2, _n_label),
    "L1-congruence": _SweepDef(
        Bounds(60, m_max=20, r_max=20),
        _congruence_chunk,
        "m",
        1,
        lambda b: f"{_grid_label(b)}, p <= 13",
    ),
    "AM-integrality": _SweepDef(
        Bounds(80, m_max=40, r_max=40),
        _am_chunk,
        "m",
        1,
        lambda b: f"m <= {b.m_max}, |r| <= {b.r_max}, n <= {b.max_n}",
    ),
}


def available_sweeps() -> tuple[str, ...]:
    return tuple(_SWEEPS)


def _chunk_entry(args: tuple[str, int, int, Bounds]) -> ChunkResult:
    theorem_id, lo, hi, bounds = args
    return _SWEEPS[theorem_id].chunk(lo, hi, bounds)


def run_sweep(
    theorem_id: str,
    max_n: Optional[int] = None,
    m_max: Optional[int] = None,
    r_max: Optional[int] = None,
    jobs: int = 1,
) -> SweepReport:
    """Run one sweep, optionally overriding its default grid bounds.

    ``jobs`` > 1 partitions the outer axis over a process pool; results are
    identical to the inline run, only faster.
    """
    if theorem_id not in _SWEEPS:
        known = ", ".join(_SWEEPS)
        raise ValueError(f"unknown sweep id {theorem_id!r} (known: {known})")
    if jobs < 1:
        raise ValueError(f"jobs must be >= 1, got {jobs}")
    sweep = _SWEEPS[theorem_id]
    bounds = sweep.defaults
    if max_n is not None:
        bounds = replace(bounds, max_n=max_n)
    if m_max is not None and bounds.m_max is not None:
        bounds = replace(bounds, m_max=m_max)
    if r_max is not None and bounds.r_max is not None:
        bounds = replace(bounds, r_max=r_max)
    if bounds.max_n < 1:
        raise ValueError(f"max n must be >= 1, got {bounds.max_n}")

    lo = sweep.axis_lo
    hi = bounds.max_n if sweep.axis == "n" else bounds.m_max
    start = time.perf_counter()
    if jobs == 1 or hi - lo + 1 <= 1:
        checked, failures = sweep.chunk(lo, hi, bounds)
    else:
        spans = _split_span(lo, hi, jobs * 4)
        args = [(theorem_id, a, z, bounds) for a, z in spans]
        with ProcessPoolExecutor(max_workers=jobs) as pool:
            parts = list(pool.map(_chunk_entry, args))
        checked = sum(c for c, _ in parts)
        failures = [f for _, fs in parts for f in fs]
    elapsed = time.perf_counter() - start
    return SweepReport(theorem_id, sweep.label(bounds), checked, tuple(failures), elapsed)


def _split_span(lo: int, hi: int, parts: int) -> list[tuple[int, int]]:
    """Contiguous near-equal subranges covering [lo, hi], in order."""
    count = hi - lo + 1
    parts = max(1, min(parts, count))
    size, extra = divmod(count, parts)
    spans = []
    a = lo
    for i in range(parts):
        z = a + size - 1 + (1 if i < extra else 0)
        spans.append((a, z))
        a = z + 1
    return spans
