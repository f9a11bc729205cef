"""Deterministic plain-text, LaTeX, and JSON rendering for the CLI.

Identical inputs produce byte-identical strings: term order is fixed
(descending powers), rationals are always reduced `p/q` text, and JSON key
order is hard-coded. Zero terms are omitted from plain and LaTeX output;
JSON keeps full coefficient lists so it round-trips.
"""

from __future__ import annotations

import json
from fractions import Fraction
from typing import Sequence

from .polynomial import Polynomial
from .shifted import ShiftedForm
from .triangular import FaulhaberForm, Multiplier

Term = tuple[Fraction, int]


def _plain_terms(terms: Sequence[Term], variable: str) -> str:
    parts: list[str] = []
    for coeff, power in terms:
        if coeff == 0:
            continue
        magnitude = abs(coeff)
        if power == 0:
            body = str(magnitude)
        else:
            var = variable if power == 1 else f"{variable}^{power}"
            body = var if magnitude == 1 else f"{magnitude}*{var}"
        if not parts:
            parts.append(body if coeff > 0 else f"-{body}")
        else:
            parts.append(f"+ {body}" if coeff > 0 else f"- {body}")
    return " ".join(parts) if parts else "0"


def _latex_rational(q: Fraction) -> str:
    if q.denominator == 1:
        return str(q.numerator)
    return rf"\frac{{{q.numerator}}}{{{q.denominator}}}"


def _latex_terms(terms: Sequence[Term], variable: str) -> str:
    parts: list[str] = []
    for coeff, power in terms:
        if coeff == 0:
            continue
        magnitude = abs(coeff)
        if power == 0:
            body = _latex_rational(magnitude)
        else:
            var = variable if power == 1 else f"{variable}^{{{power}}}"
            body = var if magnitude == 1 else _latex_rational(magnitude) + var
        if not parts:
            parts.append(body if coeff > 0 else f"-{body}")
        else:
            parts.append(f"+{body}" if coeff > 0 else f"-{body}")
    return "".join(parts) if parts else "0"


def _descending(poly: Polynomial) -> list[Term]:
    return [(poly.coefficient(k), k) for k in range(len(poly.coeffs) - 1, -1, -1)]


def _json_text(payload: dict) -> str:
    return json.dumps(payload)


# -- monomial basis -----------------------------------------------------------


def render_monomial(power: int, poly: Polynomial, fmt: str) -> str:
    if fmt == "plain":
        return _plain_terms(_descending(poly), "n")
    if fmt == "latex":
        return _latex_terms(_descending(poly), "n")
    payload = {
        "power": power,
        "basis": "monomial",
        "multiplier": None,
        "coefficients": [str(c) for c in poly.coeffs] if not poly.is_zero else ["0"],
        "ordering": "degree-ascending",
    }
    return _json_text(payload)


# -- triangular basis ---------------------------------------------------------


def _triangular_terms(form: FaulhaberForm) -> list[Term]:
    count = len(form.coefficients)
    return [(c, count - 1 - i) for i, c in enumerate(form.coefficients)]


def render_triangular(form: FaulhaberForm | None, fmt: str) -> str:
    """Render a triangular form; None means the power 1 special case, bare S1."""
    if form is None:
        if fmt == "plain":
            return "S1"
        if fmt == "latex":
            return "S_{1}"
        payload = {
            "power": 1,
            "basis": "triangular",
            "multiplier": None,
            "coefficients": ["1", "0"],
            "ordering": "paper-descending",
        }
        return _json_text(payload)
    if fmt == "plain":
        inner = _plain_terms(_triangular_terms(form), "S1")
        return f"({inner}) * {form.multiplier.value}"
    if fmt == "latex":
        inner = _latex_terms(_triangular_terms(form), "S_{1}")
        tail = (
            r"\cdot\sum k^{2}"
            if form.multiplier is Multiplier.SUM_OF_SQUARES
            else r"\cdot\left(\sum k\right)^{2}"
        )
        return rf"\left[{inner}\right]{tail}"
    payload = {
        "power": form.power,
        "basis": "triangular",
        "multiplier": form.multiplier.value,
        "coefficients": [str(c) for c in form.coefficients],
        "ordering": "paper-descending",
    }
    return _json_text(payload)


# -- shifted basis ------------------------------------------------------------


def _shifted_inner_terms(form: ShiftedForm) -> list[Term]:
    """Exponents of the rendered expression, after factoring N out of even forms."""
    if form.parity == "even":
        # d_i multiplies N^(2(m-i)+1); inside N*(...) that is N^(2(m-i))
        m = form.power // 2
        return [(c, 2 * (m - i)) for i, c in enumerate(form.coefficients)]
    top = form.power + 1
    return [(c, top - 2 * i) for i, c in enumerate(form.coefficients)]


def render_shifted(form: ShiftedForm, fmt: str) -> str:
    if fmt == "plain":
        inner = _plain_terms(_shifted_inner_terms(form), "N")
        expr = f"N*({inner})" if form.parity == "even" else inner
        return f"{expr}  where N = n + 1/2"
    if fmt == "latex":
        inner = _latex_terms(_shifted_inner_terms(form), "N")
        return rf"N\left({inner}\right)" if form.parity == "even" else inner
    payload = {
        "power": form.power,
        "basis": "shifted",
        "multiplier": None,
        "coefficients": [str(c) for c in form.coefficients],
        "ordering": "paper-descending",
    }
    return _json_text(payload)


# -- bernoulli polynomials ------------------------------------------------------


def render_polynomial_in_x(poly: Polynomial) -> str:
    return _plain_terms(_descending(poly), "x")
