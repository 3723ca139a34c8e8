"""Power sums over arithmetic progressions, exactly.

For a progression r, r+m, r+2m, ... the sum of nth powers of the first x
terms is a polynomial in x of degree n+1 with zero constant term.  This
module builds that polynomial over exact rationals, predicts its denominator
from gcds and the nonconstant denominator sequence alone, decides integrality
of the whole coefficient vector from a single divisibility, and computes the
scaled polynomial differences m^n(B_n(r/m) - B_n), which are always integers
(Almkvist and Meurman's theorem) and carry a p-power divisibility tied to n.

Theorem-level identities (integrality of the scaled differences, coefficient
integrality of difference polynomials) are enforced at construction time and
raise TheoremViolationError on failure: such a failure can only mean a bug
here, never bad input.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import comb, gcd

from .bernoulli import BernoulliCache, RationalPoly
from .denom import full_denom, nonconstant_denom
from .digits import is_prime, p_valuation
from .errors import TheoremViolationError


@dataclass(frozen=True, slots=True)
class ProgressionSpec:
    """Progression with difference m >= 1 and start r >= 0, raised to n >= 1."""

    m: int
    r: int
    n: int

    def __post_init__(self) -> None:
        if self.m < 1:
            raise ValueError(f"difference m must be >= 1, got {self.m}")
        if self.r < 0:
            raise ValueError(f"start r must be >= 0, got {self.r}")
        if self.n < 1:
            raise ValueError(f"exponent n must be >= 1, got {self.n}")


@dataclass(frozen=True, slots=True)
class AMInteger:
    """The integer m^n(B_n(r/m) - B_n); build through am_integer only."""

    m: int
    r: int
    n: int
    value: int


def power_sum_naive(spec: ProgressionSpec, x: int) -> int:
    """Brute-force sum of (k*m + r)^n over k < x; the evaluation oracle."""
    if x < 0:
        raise ValueError(f"term count x must be >= 0, got {x}")
    m, r, n = spec.m, spec.r, spec.n
    return sum((k * m + r) ** n for k in range(x))


def power_sum_poly(cache: BernoulliCache, spec: ProgressionSpec) -> RationalPoly:
    """The power sum as a polynomial in the term count.

    Coefficient of x^j (1 <= j <= n+1) is m^n C(n+1, j) B_(n+1-j)(r/m)
    divided by n+1; the constant term is zero.
    """
    m, r, n = spec.m, spec.r, spec.n
    y = Fraction(r, m)
    scale = m**n
    coeffs = [Fraction(0)]
    for j in range(1, n + 2):
        coeffs.append(
            Fraction(scale * comb(n + 1, j), n + 1) * cache.value_at(n + 1 - j, y)
        )
    return RationalPoly(coeffs)


def _power_gcd(a: int, m: int) -> int:
    # gcd(a, m^e) for every e >= log2(a), via strip-and-repeat; avoids m^n
    result = 1
    g = gcd(a, m)
    while g > 1:
        result *= g
        a //= g
        g = gcd(a, g)
    return result


def power_sum_denominator(spec: ProgressionSpec) -> int:
    """Denominator of power_sum_poly without building the polynomial.

    Equals (n+1)/gcd(n+1, m^n) times the nonconstant denominator at n+1
    with every factor shared with m removed; independent of r.  The power
    gcd collapses to strip-and-repeat because any prime power dividing n+1
    has exponent below n.
    """
    n1 = spec.n + 1
    left = n1 // _power_gcd(n1, spec.m)
    dd = nonconstant_denom(n1).value
    return left * (dd // gcd(dd, spec.m))


def is_integral(spec: ProgressionSpec) -> bool:
    """Whether the power sum polynomial has integer coefficients.

    Holds exactly when the full Bernoulli polynomial denominator at n
    divides m; no polynomial is built.
    """
    return spec.m % full_denom(spec.n).value == 0


def power_sum_difference(
    cache: BernoulliCache, m: int, r1: int, r2: int, n: int
) -> RationalPoly:
    """Difference of two power sums sharing m and n; always in Z[x]."""
    diff = power_sum_poly(cache, ProgressionSpec(m, r1, n)) - power_sum_poly(
        cache, ProgressionSpec(m, r2, n)
    )
    if diff.denominator != 1:
        raise TheoremViolationError(
            f"difference polynomial for m={m}, r1={r1}, r2={r2}, n={n} "
            f"has denominator {diff.denominator}"
        )
    return diff


def am_integer(cache: BernoulliCache, m: int, r: int, n: int) -> AMInteger:
    """m^n(B_n(r/m) - B_n) for any integer r, via the binomial sum.

    Computed as sum_{k=0}^{n-1} C(n,k) B_k m^k r^(n-k) with all Bernoulli
    numbers scaled to a common integer denominator, so the whole sum runs in
    integer arithmetic and integrality is a single exact division at the end.
    A nonzero remainder would contradict the theorem and raises.
    """
    if m < 1:
        raise ValueError(f"difference m must be >= 1, got {m}")
    if n < 1:
        raise ValueError(f"exponent n must be >= 1, got {n}")
    scale, scaled = cache.scaled_numbers(n - 1)
    rpow = [1] * (n + 1)
    for j in range(1, n + 1):
        rpow[j] = rpow[j - 1] * r
    total = 0
    mpow = 1
    for k in range(n):
        s = scaled[k]
        if s:
            total += comb(n, k) * s * mpow * rpow[n - k]
        mpow *= m
    value, rem = divmod(total, scale)
    if rem:
        raise TheoremViolationError(
            f"m^n(B_n(r/m) - B_n) non-integral at m={m}, r={r}, n={n}"
        )
    return AMInteger(m, r, n, value)


def am_congruence_check(
    cache: BernoulliCache, m: int, r: int, n: int, p: int, e: int
) -> bool:
    """Whether p^e divides the scaled difference m^n(B_n(r/m) - B_n).

    Preconditions (p prime not dividing m, 0 <= e <= v_p(n)) are those under
    which divisibility is guaranteed; the check exists to falsify, so it
    recomputes rather than returning a constant.  e = 0 needs no arithmetic.
    """
    if not is_prime(p):
        raise ValueError(f"p must be prime, got {p}")
    if m % p == 0:
        raise ValueError(f"p = {p} must not divide m = {m}")
    if e < 0 or e > p_valuation(p, n):
        raise ValueError(f"need 0 <= e <= v_{p}({n}), got e = {e}")
    if e == 0:
        return True
    return am_integer(cache, m, r, n).value % p**e == 0


def c_coeff(n: int, k: int) -> Fraction:
    """C(n, k-1)/k, the coefficient weight of the kth power sum term.

    Symmetric under k -> n+1-k and equal to C(n+1, k)/(n+1); its denominator
    divides gcd(n+1, k).
    """
    if n < 1:
        raise ValueError(f"need n >= 1, got {n}")
    if k < 1 or k > n:
        raise ValueError(f"need 1 <= k <= n, got k = {k}")
    return Fraction(comb(n, k - 1), k)
