"""Formula path vs. direct oracle timings for the denominator sequences.

The contract comes before the stopwatch: both paths are compared value by
value over the requested range, and only after they agree is anything timed.
Timing uses best-of-``reps`` wall clock; the formula path has its memoized
scans dropped before every repetition and the oracle path gets a fresh
Bernoulli cache, so repetitions measure real work, not cache hits.
"""

from __future__ import annotations

import time
from dataclasses import dataclass
from fractions import Fraction
from typing import Callable

from .bernoulli import BernoulliCache
from .denom import (
    clear_formula_caches,
    full_denom,
    full_denom_direct,
    nonconstant_denom,
    nonconstant_denom_direct,
    number_denom,
    number_denom_direct,
)
from .errors import TheoremViolationError

_FORMULA: dict[str, Callable[[int], int]] = {
    "D": lambda n: number_denom(n).value,
    "DD": lambda n: nonconstant_denom(n).value,
    "DB": lambda n: full_denom(n).value,
}

_ORACLE: dict[str, Callable[[BernoulliCache, int], int]] = {
    "D": number_denom_direct,
    "DD": nonconstant_denom_direct,
    "DB": full_denom_direct,
}


@dataclass(frozen=True, slots=True)
class BenchRecord:
    """One timed comparison; only ever built after the equality pass."""

    sequence_id: str
    lo: int
    hi: int
    formula_ns: int
    oracle_ns: int

    @property
    def speedup(self) -> Fraction:
        """oracle time / formula time; how much the closed form saves."""
        return Fraction(self.oracle_ns, max(self.formula_ns, 1))


def bench_ids() -> tuple[str, ...]:
    return tuple(_FORMULA)


def run_bench(sequence_id: str, lo: int, hi: int, reps: int = 3) -> BenchRecord:
    """Verify both paths agree on [lo, hi], then time each one.

    Disagreement raises TheoremViolationError and nothing is timed.
    """
    if sequence_id not in _FORMULA:
        known = ", ".join(_FORMULA)
        raise ValueError(f"unknown bench id {sequence_id!r} (known: {known})")
    if lo < 1 or hi < lo:
        raise ValueError(f"need 1 <= lo <= hi, got {lo}..{hi}")
    if reps < 1:
        raise ValueError(f"reps must be >= 1, got {reps}")
    formula = _FORMULA[sequence_id]
    oracle = _ORACLE[sequence_id]

    cache = BernoulliCache()
    for n in range(lo, hi + 1):
        want = formula(n)
        got = oracle(cache, n)
        if want != got:
            raise TheoremViolationError(
                f"{sequence_id} paths disagree at n={n}: formula {want}, oracle {got}"
            )

    formula_ns = min(_time_formula(formula, lo, hi) for _ in range(reps))
    oracle_ns = min(_time_oracle(oracle, lo, hi) for _ in range(reps))
    return BenchRecord(sequence_id, lo, hi, formula_ns, oracle_ns)


def _time_formula(formula: Callable[[int], int], lo: int, hi: int) -> int:
    clear_formula_caches()
    start = time.perf_counter_ns()
    for n in range(lo, hi + 1):
        formula(n)
    return time.perf_counter_ns() - start


def _time_oracle(
    oracle: Callable[[BernoulliCache, int], int], lo: int, hi: int
) -> int:
    cache = BernoulliCache()
    start = time.perf_counter_ns()
    for n in range(lo, hi + 1):
        oracle(cache, n)
    return time.perf_counter_ns() - start
