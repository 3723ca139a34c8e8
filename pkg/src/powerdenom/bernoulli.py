"""Exact Bernoulli numbers and polynomials over ``fractions.Fraction``.

The sign convention is B_1 = -1/2, so the defining recurrence reads

    sum_{k=0}^{n-1} C(n, k) B_k = 0   for n >= 2, with B_0 = 1.

This module is the slow-but-certain oracle: O(n^2) rational operations per
table fill, no approximations anywhere.  The closed-form denominator products
elsewhere never touch it; they are tested against it.
"""

from __future__ import annotations

import math
from fractions import Fraction
from math import comb
from typing import Iterable, Union

Rat = Union[int, Fraction]


class RationalPoly:
    """Dense univariate polynomial with Fraction coefficients.

    Coefficients are stored ascending (index i belongs to x^i) with trailing
    zeros trimmed; the zero polynomial has an empty tuple and degree -1.
    Instances are immutable by convention: ``coeffs`` is a tuple and all
    arithmetic returns fresh objects.
    """

    __slots__ = ("coeffs",)

    coeffs: tuple[Fraction, ...]

    def __init__(self, coeffs: Iterable[Rat] = ()) -> None:
        cs = [Fraction(c) for c in coeffs]
        while cs and not cs[-1]:
            cs.pop()
        self.coeffs = tuple(cs)

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    @property
    def is_zero(self) -> bool:
        return not self.coeffs

    @property
    def denominator(self) -> int:
        """Smallest d >= 1 such that d * self has integer coefficients."""
        return math.lcm(*(c.denominator for c in self.coeffs)) if self.coeffs else 1

    def coefficient(self, i: int) -> Fraction:
        if 0 <= i < len(self.coeffs):
            return self.coeffs[i]
        return Fraction(0)

    def __call__(self, x: Rat) -> Fraction:
        # Horner over exact rationals
        acc = Fraction(0)
        for c in reversed(self.coeffs):
            acc = acc * x + c
        return acc

    def __add__(self, other: "RationalPoly") -> "RationalPoly":
        a, b = self.coeffs, other.coeffs
        if len(a) < len(b):
            a, b = b, a
        mixed = [x + y for x, y in zip(a, b)]
        mixed.extend(a[len(b) :])
        return RationalPoly(mixed)

    def __neg__(self) -> "RationalPoly":
        return RationalPoly(-c for c in self.coeffs)

    def __sub__(self, other: "RationalPoly") -> "RationalPoly":
        return self + (-other)

    def __mul__(self, other: Union["RationalPoly", Rat]) -> "RationalPoly":
        if not isinstance(other, RationalPoly):
            return RationalPoly(c * other for c in self.coeffs)
        if self.is_zero or other.is_zero:
            return RationalPoly()
        out = [Fraction(0)] * (len(self.coeffs) + len(other.coeffs) - 1)
        for i, a in enumerate(self.coeffs):
            if not a:
                continue
            for j, b in enumerate(other.coeffs):
                out[i + j] += a * b
        return RationalPoly(out)

    __rmul__ = __mul__

    def substituted(self, inner: "RationalPoly") -> "RationalPoly":
        """Composition self(inner(x)), by Horner over polynomials."""
        acc = RationalPoly()
        for c in reversed(self.coeffs):
            acc = acc * inner + RationalPoly((c,))
        return acc

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, RationalPoly):
            return NotImplemented
        return self.coeffs == other.coeffs

    def __hash__(self) -> int:
        return hash(self.coeffs)

    def __repr__(self) -> str:
        return f"RationalPoly({list(self.coeffs)!r})"


class BernoulliCache:
    """Growable table of Bernoulli numbers plus derived evaluations.

    Requesting index n fills every index <= n, so the table only grows.
    Single writer: concurrent readers of already-filled entries are fine,
    but parallel sweeps should hold one cache per worker.
    """

    def __init__(self) -> None:
        self._numbers: list[Fraction] = [Fraction(1)]
        self._values: dict[tuple[int, Fraction], Fraction] = {}
        self._scaled: dict[int, tuple[int, tuple[int, ...]]] = {}

    def _extend(self, n: int) -> None:
        nums = self._numbers
        for m in range(len(nums), n + 1):
            acc = Fraction(0)
            for k in range(m):
                if k > 1 and k % 2:
                    continue
                acc += comb(m + 1, k) * nums[k]
            nums.append(-acc / (m + 1))

    def number(self, n: int) -> Fraction:
        """B_n; zero for odd n >= 3."""
        if n < 0:
            raise ValueError(f"Bernoulli index must be >= 0, got {n}")
        if n >= len(self._numbers):
            self._extend(n)
        return self._numbers[n]

    def numbers(self, n: int) -> tuple[Fraction, ...]:
        """The tuple (B_0, ..., B_n)."""
        self.number(n)
        return tuple(self._numbers[: n + 1])

    def polynomial(self, n: int) -> RationalPoly:
        """B_n(x) = sum_{k=0}^{n} C(n,k) B_k x^(n-k): monic, constant term B_n."""
        self.number(n)
        nums = self._numbers
        return RationalPoly(comb(n, j) * nums[n - j] for j in range(n + 1))

    def value_at(self, n: int, y: Rat) -> Fraction:
        """B_n(y) without materializing the polynomial; memoized per (n, y)."""
        y = Fraction(y)
        key = (n, y)
        hit = self._values.get(key)
        if hit is not None:
            return hit
        self.number(n)
        nums = self._numbers
        acc = Fraction(0)
        for k in range(n + 1):
            acc = acc * y + comb(n, k) * nums[k]
        self._values[key] = acc
        return acc

    def scaled_numbers(self, n: int) -> tuple[int, tuple[int, ...]]:
        """(L, (L*B_0, ..., L*B_n)) with L = lcm of the denominators.

        Lets callers run binomial sums over B_k in pure integer arithmetic;
        the result is exact because L clears every denominator.
        """
        hit = self._scaled.get(n)
        if hit is not None:
            return hit
        self.number(n)
        nums = self._numbers[: n + 1]
        scale = math.lcm(*(b.denominator for b in nums))
        scaled = tuple(b.numerator * (scale // b.denominator) for b in nums)
        self._scaled[n] = (scale, scaled)
        return scale, scaled
