"""Power sums factored over the triangular numbers u = n(n+1)/2.

Even exponents 2m come out as (polynomial in u) * sum(k^2); odd exponents
2m+1 as (polynomial in u) * (sum k)^2. Two independent constructions are
kept side by side: `faulhaber_form` divides the monomial power sum by its
multiplier and rewrites the quotient in u, while `faulhaber_form_inductive`
never divides, assembling each form from lower ones using only the
telescoping identity, the two bridge identities checked by `verify_lemma`,
and the vanishing of the odd Bernoulli numbers. Each route is the other's
oracle and they must agree exactly.
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum
from fractions import Fraction
from math import comb
from typing import Literal

from .bernoulli import bernoulli_number
from .polynomial import Polynomial, X
from .powersum import oracle_sum, powersum_monomial
from .reports import CheckLine, VerificationReport


class NotTriangular(ValueError):
    """Raised when a polynomial in n is not a polynomial in u."""


class ConsistencyError(RuntimeError):
    """An internal identity that must hold exactly failed to.

    Raised when an exact division leaves a remainder or an inductive step
    leaves a stray linear-sum term; either means the implementation (not the
    input) is wrong, so computation aborts rather than rounding anything.
    """


class Multiplier(Enum):
    """The quadratic/quartic factor carried by a triangular-basis form."""

    SUM_OF_SQUARES = "Sum(k^2)"
    SQUARE_OF_SUM = "Sum(k)^2"


#: u as a polynomial in n: n(n+1)/2. Also equals sum(k for k in 1..n).
U_OF_N = Polynomial((0, Fraction(1, 2), Fraction(1, 2)))

#: sum(k^2 for k in 1..n) = n(n+1)(2n+1)/6.
SUM_OF_SQUARES_OF_N = Polynomial((0, Fraction(1, 6), Fraction(1, 2), Fraction(1, 3)))

#: (sum k)^2, the odd-exponent multiplier.
SQUARE_OF_SUM_OF_N = U_OF_N * U_OF_N


@dataclass(frozen=True)
class FaulhaberForm:
    """One power sum written as coefficients-in-u times a fixed multiplier.

    `coefficients` is ordered highest u-power first: entry i multiplies
    u**(count-1-i), where count = len(coefficients) = power // 2. The last
    entry is the constant term.
    """

    power: int
    parity: Literal["even", "odd"]
    coefficients: tuple[Fraction, ...]
    multiplier: Multiplier

    def u_polynomial(self) -> Polynomial:
        """The coefficient list as a low-to-high polynomial in u."""
        return Polynomial(tuple(reversed(self.coefficients)))


def _wrap_form(power: int, u_poly: Polynomial) -> FaulhaberForm:
    m = power // 2
    if u_poly.degree != m - 1:
        raise ConsistencyError(
            f"triangular form for power {power} has u-degree {u_poly.degree}, expected {m - 1}"
        )
    coefficients = tuple(u_poly.coefficient(m - 1 - i) for i in range(m))
    if power % 2 == 0:
        return FaulhaberForm(power, "even", coefficients, Multiplier.SUM_OF_SQUARES)
    return FaulhaberForm(power, "odd", coefficients, Multiplier.SQUARE_OF_SUM)


def multiplier_polynomial(multiplier: Multiplier) -> Polynomial:
    """The multiplier as an explicit polynomial in n."""
    if multiplier is Multiplier.SUM_OF_SQUARES:
        return SUM_OF_SQUARES_OF_N
    return SQUARE_OF_SUM_OF_N


def triangular_decompose(p: Polynomial) -> Polynomial:
    """Rewrite p(n) as q(u) with u = n(n+1)/2, or raise NotTriangular.

    Strips leading terms: a degree-2d head with leading coefficient L forces
    the u**d coefficient L * 2**d; subtracting that multiple of u**d must
    again leave an even-degree (or zero) remainder, otherwise p was never a
    polynomial in u.
    """
    if p.is_zero:
        return p
    if p.degree % 2:
        raise NotTriangular(f"degree {p.degree} is odd")
    half = p.degree // 2
    u_powers = [Polynomial((1,))]
    for _ in range(half):
        u_powers.append(u_powers[-1] * U_OF_N)
    out = [Fraction(0)] * (half + 1)
    rem = p
    while not rem.is_zero:
        d = rem.degree
        if d % 2:
            raise NotTriangular(f"stripping left an odd-degree remainder (degree {d})")
        c = rem.leading_coefficient * 2 ** (d // 2)
        out[d // 2] = c
        rem = rem - u_powers[d // 2] * c
    return Polynomial(out)


def faulhaber_form(power: int) -> FaulhaberForm:
    """Direct route: exact division by the multiplier, then rewrite in u."""
    if power < 2:
        raise ValueError("triangular forms require power >= 2")
    multiplier = Multiplier.SUM_OF_SQUARES if power % 2 == 0 else Multiplier.SQUARE_OF_SUM
    quotient, remainder = divmod(powersum_monomial(power), multiplier_polynomial(multiplier))
    if not remainder.is_zero:
        raise ConsistencyError(
            f"power sum for exponent {power} is not divisible by {multiplier.value}"
        )
    return _wrap_form(power, triangular_decompose(quotient))


def _inductive_u_polynomial(power: int) -> Polynomial:
    """Independent route: build every form from 2 up to `power` by induction.

    Base forms: power 2 and power 3 both have u-polynomial 1. The step to an
    even power p = 2m+2 rewrites the inner sums of k**(p-1) through the
    monomial coefficients C(p, 2j)/p * B_2j (all odd Bernoulli terms beyond
    B_1 vanish), then turns (n + 1/2)(sum k)^2 into (3/2) u sum(k^2) via the
    first bridge identity. The step to an odd power additionally produces a
    stray B_(p-1) * (sum k) term which must cancel exactly against
    (constant term)/6 of the even form below it; a nonzero residue would
    falsify the construction, so it raises ConsistencyError.
    """
    even: dict[int, Polynomial] = {2: Polynomial((1,))}
    odd: dict[int, Polynomial] = {3: Polynomial((1,))}
    for p in range(4, power + 1):
        if p % 2 == 0:
            m = (p - 2) // 2
            lower = Polynomial()
            for j in range(1, m + 1):
                b = Fraction(comb(p, 2 * j), p) * bernoulli_number(2 * j)
                lower = lower + even[p - 2 * j] * b
            lifted = Polynomial((0, 1)) * odd[p - 1] * Fraction(3, 2)
            even[p] = (lifted - lower) * Fraction(p, p + 1)
        else:
            m = (p - 3) // 2
            lower = Polynomial()
            for i in range(1, m + 1):
                b = Fraction(comb(p, 2 * i), p) * bernoulli_number(2 * i)
                lower = lower + odd[p - 2 * i] * b
            f_even = even[p - 1]
            constant = f_even.coefficient(0)
            if constant / 6 != bernoulli_number(p - 1):
                raise ConsistencyError(
                    f"stray linear-sum term at power {p}: constant/6 != B_{p - 1}"
                )
            # second bridge identity: (n+1/2) f(u) sum(k^2) becomes
            # (4/3 f(u) + (f(u) - f(0))/(6u)) (sum k)^2 + (f(0)/6) sum k,
            # and the trailing piece is exactly the stray term cancelled above.
            reduced = Polynomial(f_even.coeffs[1:])
            g_prime = f_even * Fraction(4, 3) + reduced * Fraction(1, 6)
            odd[p] = (g_prime - lower) * Fraction(p, p + 1)
    return even[power] if power % 2 == 0 else odd[power]


def faulhaber_form_inductive(power: int) -> FaulhaberForm:
    """Inductive route; must agree exactly with faulhaber_form."""
    if power < 2:
        raise ValueError("triangular forms require power >= 2")
    return _wrap_form(power, _inductive_u_polynomial(power))


def expand_to_monomial(form: FaulhaberForm) -> Polynomial:
    """Multiply the form back out into a plain polynomial in n."""
    return form.u_polynomial().compose(U_OF_N) * multiplier_polynomial(form.multiplier)


def square_in_triangular(power: int) -> Polynomial:
    """The square of an even power sum as a polynomial in u.

    Squares of even power sums decompose cleanly; power 2 gives
    (8u^3 + u^2)/9. Odd powers are rejected, their squares are the
    multipliers already.
    """
    if power < 2 or power % 2:
        raise ValueError("square_in_triangular requires an even power >= 2")
    s = powersum_monomial(power)
    return triangular_decompose(s * s)


def verify_lemma(max_n: int) -> VerificationReport:
    """Check both bridge identities symbolically and on integers up to max_n.

    Identity 1: (n + 1/2)(sum k)^2 = (3/2) u sum(k^2).
    Identity 2: (n + 1/2) sum(k^2) = (4u/3 + 1/6) sum k.
    The symbolic check compares polynomials in n; the numeric check uses
    oracle_sum so it is independent of every polynomial construction.
    """
    if max_n < 1:
        raise ValueError("max_n must be >= 1")
    half = Fraction(1, 2)
    sym1 = (X + half) * SQUARE_OF_SUM_OF_N == U_OF_N * SUM_OF_SQUARES_OF_N * Fraction(3, 2)
    sym2 = (X + half) * SUM_OF_SQUARES_OF_N == (U_OF_N * Fraction(4, 3) + Fraction(1, 6)) * U_OF_N

    num1 = num2 = True
    bad1 = bad2 = None
    for n in range(1, max_n + 1):
        s1 = oracle_sum(1, n)
        s2 = oracle_sum(2, n)
        if (n + half) * s1 * s1 != Fraction(3, 2) * s1 * s2:
            num1 = False
            bad1 = bad1 if bad1 is not None else n
        if (n + half) * s2 != (Fraction(4, 3) * s1 + Fraction(1, 6)) * s1:
            num2 = False
            bad2 = bad2 if bad2 is not None else n
    lines = (
        CheckLine("identity 1, polynomial", sym1),
        CheckLine("identity 2, polynomial", sym2),
        CheckLine(
            f"identity 1, integers n <= {max_n}" + (f" (first failure n={bad1})" if bad1 else ""),
            num1,
        ),
        CheckLine(
            f"identity 2, integers n <= {max_n}" + (f" (first failure n={bad2})" if bad2 else ""),
            num2,
        ),
    )
    return VerificationReport(name="lemma", lines=lines)


def verify_constant_term_bernoulli(max_m: int) -> VerificationReport:
    """Check (constant coefficient of the even form for 2m)/6 == B_2m."""
    if max_m < 2:
        raise ValueError("max_m must be >= 2")
    lines = []
    for m in range(2, max_m + 1):
        form = faulhaber_form(2 * m)
        ok = form.coefficients[-1] / 6 == bernoulli_number(2 * m)
        lines.append(CheckLine(f"constant term of power {2 * m} form = 6*B_{2 * m}", ok))
    return VerificationReport(name="constant-term", lines=tuple(lines))
