"""Bernoulli numbers and polynomials, exactly, in the B_1 = -1/2 convention.

Everything downstream (power sums, both Faulhaber routes, the recurrences)
pulls its Bernoulli values from here, so the convention is fixed in exactly
one place.
"""

from __future__ import annotations

import threading
from fractions import Fraction
from math import comb
from typing import Optional

from .polynomial import Polynomial
from .reports import CheckLine, VerificationReport


class BernoulliCache:
    """Growable memo table for Bernoulli numbers.

    Defined by B_0 = 1 together with sum(C(n+1, k) * B_k for k in 0..n) = 0
    for n >= 1, which pins B_1 = -1/2. Values are computed by that recurrence
    and nothing else; in particular the vanishing of the odd values is an
    observed consequence here, never an assumption.

    Reads of already-published indices are lock-free (entries are immutable
    Fractions appended whole); extension is serialized so concurrent callers
    never observe a partially built table.
    """

    def __init__(self) -> None:
        self._values: list[Fraction] = [Fraction(1)]
        self._lock = threading.Lock()

    @property
    def high_water(self) -> int:
        """Largest index currently stored."""
        return len(self._values) - 1

    def get(self, m: int) -> Fraction:
        """B_m, computing and caching every index up to m on first use."""
        if m < 0:
            raise ValueError("Bernoulli index must be >= 0")
        values = self._values
        if m < len(values):
            return values[m]
        with self._lock:
            while len(self._values) <= m:
                n = len(self._values)
                acc = Fraction(0)
                for k in range(n):
                    acc += comb(n + 1, k) * self._values[k]
                self._values.append(-acc / (n + 1))
            return self._values[m]


_DEFAULT_CACHE = BernoulliCache()


def bernoulli_number(m: int, cache: Optional[BernoulliCache] = None) -> Fraction:
    """B_m in the B_1 = -1/2 convention."""
    return (cache or _DEFAULT_CACHE).get(m)


def bernoulli_polynomial(m: int, cache: Optional[BernoulliCache] = None) -> Polynomial:
    """B_m(x) = sum(C(m, j) * B_j * x**(m-j) for j in 0..m)."""
    if m < 0:
        raise ValueError("Bernoulli polynomial index must be >= 0")
    table = cache or _DEFAULT_CACHE
    coeffs = [Fraction(0)] * (m + 1)
    for j in range(m + 1):
        coeffs[m - j] = comb(m, j) * table.get(j)
    return Polynomial(coeffs)


def bernoulli_at_half(r: int, cache: Optional[BernoulliCache] = None) -> Fraction:
    """B_r(1/2) via the closed form (2**(1-r) - 1) * B_r.

    Equals bernoulli_polynomial(r) evaluated at 1/2; the two routes are
    cross-checked in the test suite.
    """
    if r < 0:
        raise ValueError("index must be >= 0")
    return (Fraction(2) ** (1 - r) - 1) * bernoulli_number(r, cache)


def verify_odd_zero(max_m: int, cache: Optional[BernoulliCache] = None) -> VerificationReport:
    """Check B_(2m+1) == 0 for m = 1..max_m, values taken from the recurrence."""
    if max_m < 1:
        raise ValueError("max_m must be >= 1")
    lines = tuple(
        CheckLine(f"B_{2 * m + 1} = 0", bernoulli_number(2 * m + 1, cache) == 0)
        for m in range(1, max_m + 1)
    )
    return VerificationReport(name="odd-bernoulli", lines=lines)
