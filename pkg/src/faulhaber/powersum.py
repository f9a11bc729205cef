"""Power sums 1**m + 2**m + ... + n**m in the plain monomial basis.

Two polynomial constructions (Bernoulli-number coefficients, and a Bernoulli
polynomial difference), one deliberately dumb integer oracle, and the
telescoping identity that links consecutive exponents.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import comb

from .bernoulli import bernoulli_number, bernoulli_polynomial
from .polynomial import Polynomial, X


def powersum_monomial(m: int) -> Polynomial:
    """Degree m+1 polynomial p with p(n) = sum(k**m for k in 1..n).

    Coefficient of n**(m+1-j) is (-1)**j * C(m+1, j) * B_j / (m+1). The
    alternating sign only ever flips the j = 1 term, because every other odd
    index contributes zero; the partial-sum recurrence route uses the
    unsigned convention instead, and the two must never be mixed.
    """
    if m < 1:
        raise ValueError("powersum_monomial requires m >= 1")
    coeffs = [Fraction(0)] * (m + 2)
    for j in range(m + 1):
        sign = -1 if j % 2 else 1
        coeffs[m + 1 - j] = Fraction(sign * comb(m + 1, j), m + 1) * bernoulli_number(j)
    return Polynomial(coeffs)


def powersum_via_bernoulli_poly(m: int) -> Polynomial:
    """Same sum as (B_(m+1)(x+1) - B_(m+1)) / (m+1), built by composition."""
    if m < 1:
        raise ValueError("powersum_via_bernoulli_poly requires m >= 1")
    bp = bernoulli_polynomial(m + 1)
    shifted = bp.compose(X + 1)
    return (shifted - bernoulli_number(m + 1)) * Fraction(1, m + 1)


def oracle_sum(m: int, n: int) -> int:
    """Brute force: add up k**m term by term with exact integers.

    Shares no code with the polynomial constructions; powers are built by
    repeated multiplication so there is nothing clever to be wrong.
    """
    if m < 0:
        raise ValueError("oracle_sum requires m >= 0")
    if n < 1:
        raise ValueError("oracle_sum requires n >= 1")
    total = 0
    for k in range(1, n + 1):
        term = 1
        for _ in range(m):
            term *= k
        total += term
    return total


@dataclass(frozen=True)
class SumIdentityReport:
    """Both sides of the telescoping identity at one (exponent, limit) pair."""

    exponent: int
    upper_limit: int
    left_value: int
    right_value: int

    @property
    def passed(self) -> bool:
        return self.left_value == self.right_value


def check_partial_sum_identity(m: int, n: int) -> SumIdentityReport:
    """Check sum(k**(m+1)) + sum over k of sum(l**m, l<=k) == (n+1)*sum(k**m).

    Every quantity comes from oracle_sum, so this exercises the identity on
    raw integers rather than any polynomial machinery.
    """
    if m < 0:
        raise ValueError("exponent must be >= 0")
    if n < 1:
        raise ValueError("upper limit must be >= 1")
    left = oracle_sum(m + 1, n) + sum(oracle_sum(m, k) for k in range(1, n + 1))
    right = (n + 1) * oracle_sum(m, n)
    return SumIdentityReport(exponent=m, upper_limit=n, left_value=left, right_value=right)
