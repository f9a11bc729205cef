"""Power sums in the half-shifted variable N = n + 1/2.

The substitution u = N^2/2 - 1/8 turns every triangular-basis form into a
pure polynomial in N with only one parity of exponent present: even powers
of n give odd polynomials in N, odd powers give even polynomials. As in the
triangular module there are two independent routes, a change-of-basis
conversion and closed-form coefficients built from B_2i(1/2), each checked
against the other.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import comb
from typing import Literal

from .bernoulli import bernoulli_at_half
from .polynomial import Polynomial, X
from .triangular import ConsistencyError, Multiplier, faulhaber_form

#: u rewritten in N: u = N^2/2 - 1/8.
U_OF_SHIFT = Polynomial((Fraction(-1, 8), 0, Fraction(1, 2)))

#: sum k = N^2/2 - 1/8 (same polynomial as u, read as a value).
SUM_OF_N_SHIFTED = U_OF_SHIFT

#: sum k^2 = N(N^2/3 - 1/12).
SUM_OF_SQUARES_SHIFTED = Polynomial((0, Fraction(-1, 12), 0, Fraction(1, 3)))

#: (sum k)^2 = (N^2/2 - 1/8)^2.
SQUARE_OF_SUM_SHIFTED = U_OF_SHIFT * U_OF_SHIFT


@dataclass(frozen=True)
class ShiftedForm:
    """One power sum as a single-parity polynomial in N = n + 1/2.

    Even power 2m: coefficients d_0..d_m multiplying N^(2m+1), N^(2m-1),
    ..., N (m+1 entries, one more than the triangular list because the
    multiplier contributes a coefficient of its own after substitution).
    Odd power 2m+1: coefficients e_0..e_(m+1) multiplying N^(2m+2), N^(2m),
    ..., N^2, 1; the trailing entry is the constant term, which exists only
    in this parity.
    """

    power: int
    parity: Literal["even", "odd"]
    coefficients: tuple[Fraction, ...]

    def shift_polynomial(self) -> Polynomial:
        """The form as a low-to-high polynomial in N."""
        top = self.power + 1
        coeffs = [Fraction(0)] * (top + 1)
        for i, c in enumerate(self.coefficients):
            coeffs[top - 2 * i] = c
        return Polynomial(coeffs)


def _extract(power: int, shift_poly: Polynomial) -> ShiftedForm:
    """Pull the highest-power-first coefficient list off an N-polynomial."""
    top = power + 1
    if shift_poly.degree != top:
        raise ConsistencyError(
            f"shifted form for power {power} has degree {shift_poly.degree}, expected {top}"
        )
    # exactly one parity of exponent may be present
    for k in range(top + 1):
        if (k - top) % 2 and shift_poly.coefficient(k) != 0:
            raise ConsistencyError(
                f"shifted form for power {power} has a stray N^{k} term"
            )
    if power % 2 == 0:
        count = power // 2 + 1  # entries for N^(2m+1) .. N^1
        coeffs = tuple(shift_poly.coefficient(top - 2 * i) for i in range(count))
        return ShiftedForm(power, "even", coeffs)
    count = (power - 1) // 2 + 2  # entries for N^(2m+2) .. N^2, then the constant
    coeffs = tuple(shift_poly.coefficient(top - 2 * i) for i in range(count))
    return ShiftedForm(power, "odd", coeffs)


def shifted_form(power: int) -> ShiftedForm:
    """Conversion route: substitute u = N^2/2 - 1/8 into the triangular form."""
    if power < 1:
        raise ValueError("shifted forms require power >= 1")
    if power == 1:
        return _extract(1, SUM_OF_N_SHIFTED)
    form = faulhaber_form(power)
    inner = form.u_polynomial().compose(U_OF_SHIFT)
    if form.multiplier is Multiplier.SUM_OF_SQUARES:
        return _extract(power, inner * SUM_OF_SQUARES_SHIFTED)
    return _extract(power, inner * SQUARE_OF_SUM_SHIFTED)


def shifted_closed_form(power: int) -> ShiftedForm:
    """Closed-form route, straight from Bernoulli values at 1/2.

    Even power 2m:  d_i = C(2m, 2i) * B_2i(1/2) / (2(m-i) + 1).
    Odd power 2m+1: e_i = C(2m+1, 2i) * B_2i(1/2) / (2(m-i) + 2) for i <= m,
    and the constant is forced by the sum vanishing at n = 0, i.e. N = 1/2:
    e_(m+1) = -sum(e_i / 4**(m-i+1)).
    """
    if power < 1:
        raise ValueError("shifted forms require power >= 1")
    if power % 2 == 0:
        m = power // 2
        d = tuple(
            Fraction(comb(2 * m, 2 * i), 2 * (m - i) + 1) * bernoulli_at_half(2 * i)
            for i in range(m + 1)
        )
        return ShiftedForm(power, "even", d)
    m = (power - 1) // 2
    e = [
        Fraction(comb(2 * m + 1, 2 * i), 2 * (m - i) + 2) * bernoulli_at_half(2 * i)
        for i in range(m + 1)
    ]
    e.append(-sum(e[i] / Fraction(4) ** (m - i + 1) for i in range(m + 1)))
    return ShiftedForm(power, "odd", tuple(e))


def shifted_to_monomial(form: ShiftedForm) -> Polynomial:
    """Substitute N = n + 1/2 to recover the plain monomial power sum."""
    return form.shift_polynomial().compose(X + Fraction(1, 2))
