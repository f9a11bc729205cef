"""Recurrences that regenerate the Bernoulli and power-sum polynomials.

Both take only lower-index polynomials plus plain Bernoulli numbers, so they
are independent reconstructions of objects the other modules build directly;
`verify_recurrence_consistency` pins the two routes together index by index.
Bernoulli numbers enter these recurrences unsigned. The alternating-sign
convention lives solely in powersum_monomial and must not leak in here.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import comb
from typing import Optional

from .bernoulli import bernoulli_number, bernoulli_polynomial
from .polynomial import Polynomial, X
from .powersum import powersum_monomial


def he_ricci_polynomial(m: int) -> Polynomial:
    """B_m(x) from B_0(x)..B_(m-1)(x):

        B_m(x) = (x - 1/2) B_(m-1)(x) - (1/m) sum(C(m, r) B_(m-r) B_r(x), r = 0..m-2)

    with an empty sum at m = 1. Must equal bernoulli_polynomial(m).
    """
    if m < 0:
        raise ValueError("index must be >= 0")
    half = Fraction(1, 2)
    table: list[Polynomial] = [Polynomial((1,))]
    for i in range(1, m + 1):
        tail = Polynomial()
        for r in range(0, i - 1):
            tail = tail + table[r] * (comb(i, r) * bernoulli_number(i - r))
        table.append((X - half) * table[i - 1] - tail * Fraction(1, i))
    return table[m]


def partial_sum_polynomial(m: int) -> Polynomial:
    """The power-sum polynomial for exponent m from exponents below it:

        S_m(x) = (m (x + 1/2) S_(m-1)(x) - sum(C(m, r) B_(m-r) S_r(x), r = 1..m-2)) / (m+1)

    with base S_1(x) = x^2/2 + x/2 and an empty sum at m = 2. Must equal
    powersum_monomial(m).
    """
    if m < 2:
        raise ValueError("the recurrence starts at m = 2")
    half = Fraction(1, 2)
    table: list[Optional[Polynomial]] = [None, Polynomial((0, half, half))]
    for i in range(2, m + 1):
        tail = Polynomial()
        for r in range(1, i - 1):
            # only B_2 .. B_(i-1) may enter; B_1's sign convention must stay out
            assert 2 <= i - r <= i - 1
            tail = tail + table[r] * (comb(i, r) * bernoulli_number(i - r))
        table.append(((X + half) * table[i - 1] * i - tail) * Fraction(1, i + 1))
    return table[m]


@dataclass(frozen=True)
class RecurrenceReport:
    """Per-index agreement flags for both recurrences against the direct routes."""

    max_index: int
    flags: tuple[bool, ...]  # entry i covers index i + 1

    @property
    def passed(self) -> bool:
        return all(self.flags)

    @property
    def counterexample_index(self) -> Optional[int]:
        for i, ok in enumerate(self.flags):
            if not ok:
                return i + 1
        return None


def verify_recurrence_consistency(max_m: int) -> RecurrenceReport:
    """Check both recurrences for every index up to max_m.

    Index m passes when he_ricci_polynomial(m) == bernoulli_polynomial(m)
    and (for m >= 2) partial_sum_polynomial(m) == powersum_monomial(m).
    """
    if max_m < 2:
        raise ValueError("max_m must be >= 2")
    flags = []
    for m in range(1, max_m + 1):
        ok = he_ricci_polynomial(m) == bernoulli_polynomial(m)
        if m >= 2:
            ok = ok and partial_sum_polynomial(m) == powersum_monomial(m)
        flags.append(ok)
    return RecurrenceReport(max_index=max_m, flags=tuple(flags))
