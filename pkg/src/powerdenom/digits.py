"""Base-p digit arithmetic, p-adic valuations, radicals and prime enumeration.

Everything here is exact integer arithmetic on Python's native bigints.
Conventions: ``gcd(0, x) = |x|`` (as in :func:`math.gcd`), while an ``lcm``
with a zero argument is rejected -- the lcm identities used by the
denominator sequences are only meaningful for positive integers.

All functions are pure; the prime sieve keeps a module-level cache that only
ever grows, so concurrent readers are safe.
"""

from __future__ import annotations

import math
from dataclasses import dataclass


@dataclass(frozen=True)
class DigitExpansion:
    """Digits of a non-negative integer in some base, least significant first.

    Canonical form: the most significant digit is nonzero, and the expansion
    of 0 is empty.  ``value`` reconstructs the expanded integer.
    """

    base: int
    digits: tuple[int, ...]

    def __post_init__(self) -> None:
        if self.base < 2:
            raise ValueError(f"base must be >= 2, got {self.base}")
        if any(d < 0 or d >= self.base for d in self.digits):
            raise ValueError("digits must lie in [0, base-1]")
        if self.digits and self.digits[-1] == 0:
            raise ValueError("most significant digit must be nonzero")

    @property
    def value(self) -> int:
        total = 0
        for d in reversed(self.digits):
            total = total * self.base + d
        return total

    def digit_sum(self) -> int:
        return sum(self.digits)

    def __len__(self) -> int:
        return len(self.digits)


@dataclass(frozen=True)
class SquarefreeProduct:
    """A squarefree positive integer together with its (sorted) prime divisors.

    The empty product is 1.  Construct via :meth:`of`, which derives the value
    from the primes; the constructor itself only checks cheap structural
    invariants (strictly increasing primes, consistent product).  Full
    primality of every member is the constructors' responsibility and is
    re-verified by :meth:`validate` in the test suite.
    """

    primes: tuple[int, ...]
    value: int

    def __post_init__(self) -> None:
        prod = 1
        prev = 1
        for p in self.primes:
            if p <= prev:
                raise ValueError("primes must be strictly increasing and >= 2")
            prev = p
            prod *= p
        if prod != self.value:
            raise ValueError(f"value {self.value} is not the product of {self.primes}")

    @classmethod
    def of(cls, primes) -> "SquarefreeProduct":
        ps = tuple(sorted(primes))
        return cls(ps, math.prod(ps))

    def merge(self, other: "SquarefreeProduct") -> "SquarefreeProduct":
        """lcm of two squarefree products: the union of their prime sets."""
        return SquarefreeProduct.of(set(self.primes) | set(other.primes))

    def divides(self, n: int) -> bool:
        return n % self.value == 0

    def validate(self) -> None:
        """Assert every member is prime (trial division); used by tests."""
        for p in self.primes:
            if not is_prime(p):
                raise ValueError(f"{p} is not prime")


def expand(n: int, base: int) -> DigitExpansion:
    """Base expansion of ``n >= 0``, least significant digit first."""
    if base < 2:
        raise ValueError(f"base must be >= 2, got {base}")
    if n < 0:
        raise ValueError(f"cannot expand negative value {n}")
    digits = []
    while n:
        n, d = divmod(n, base)
        digits.append(d)
    return DigitExpansion(base, tuple(digits))


def digit_sum(base: int, n: int) -> int:
    """Sum of the base-``base`` digits of ``n`` (s_p(n) for a prime base).

    Computed by repeated division without materializing the expansion; this
    is the hot path of the closed-form denominator products.  Satisfies
    s_b(n) == n (mod b-1).
    """
    if base < 2:
        raise ValueError(f"base must be >= 2, got {base}")
    if n < 0:
        raise ValueError(f"cannot expand negative value {n}")
    total = 0
    while n:
        n, d = divmod(n, base)
        total += d
    return total


def p_valuation(p: int, n: int) -> int:
    """Largest e such that p^e divides n, for n != 0 and p >= 2."""
    if p < 2:
        raise ValueError(f"base must be >= 2, got {p}")
    if n == 0:
        raise ValueError("valuation of 0 is infinite")
    n = abs(n)
    e = 0
    while n % p == 0:
        n //= p
        e += 1
    return e


def is_prime(n: int) -> bool:
    """Trial-division primality test (the oracle the sieve is checked against)."""
    if n < 2:
        return False
    if n % 2 == 0:
        return n == 2
    f = 3
    while f * f <= n:
        if n % f == 0:
            return False
        f += 2
    return True


def radical(k: int) -> SquarefreeProduct:
    """rad(k): the product of the distinct prime divisors of k >= 1."""
    if k < 1:
        raise ValueError(f"radical requires k >= 1, got {k}")
    primes = []
    if k % 2 == 0:
        primes.append(2)
        while k % 2 == 0:
            k //= 2
    f = 3
    while f * f <= k:
        if k % f == 0:
            primes.append(f)
            while k % f == 0:
                k //= f
        f += 2
    if k > 1:
        primes.append(k)
    return SquarefreeProduct.of(primes)


# Growable sieve cache; only replaced by strictly larger sieves.
_sieve_limit = 0
_sieve_primes: list[int] = []


def primes_up_to(bound: int) -> list[int]:
    """All primes <= bound, ascending (deterministic Eratosthenes sieve)."""
    global _sieve_limit, _sieve_primes
    if bound < 2:
        return []
    if bound > _sieve_limit:
        limit = max(bound, 2 * _sieve_limit, 256)
        sieve = bytearray([1]) * (limit + 1)
        sieve[0] = sieve[1] = 0
        for p in range(2, math.isqrt(limit) + 1):
            if sieve[p]:
                start = p * p
                sieve[start :: p] = bytearray(len(range(start, limit + 1, p)))
        _sieve_primes = [i for i, flag in enumerate(sieve) if flag]
        _sieve_limit = limit
    primes = _sieve_primes
    # bisect on a sorted prime list
    lo, hi = 0, len(primes)
    while lo < hi:
        mid = (lo + hi) // 2
        if primes[mid] <= bound:
            lo = mid + 1
        else:
            hi = mid
    return primes[:lo]


def lcm(*values: int) -> int:
    """Least common multiple of positive integers; zero is rejected."""
    if not values:
        return 1
    if any(v == 0 for v in values):
        raise ValueError("lcm of 0 is undefined here")
    return math.lcm(*values)
