"""Triangular-basis forms: decomposition, both Faulhaber routes, the bridge
identities, and the constant-term link back to the Bernoulli numbers."""

from __future__ import annotations

from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from faulhaber.bernoulli import bernoulli_number
from faulhaber.polynomial import Polynomial, X
from faulhaber.powersum import oracle_sum, powersum_monomial
from faulhaber.triangular import (
    U_OF_N,
    FaulhaberForm,
    Multiplier,
    NotTriangular,
    expand_to_monomial,
    faulhaber_form,
    faulhaber_form_inductive,
    square_in_triangular,
    triangular_decompose,
    verify_constant_term_bernoulli,
    verify_lemma,
)

F = Fraction

u_coefficient_lists = st.lists(
    st.fractions(min_value=-6, max_value=6, max_denominator=10), max_size=11
)


class TestDecompose:
    def test_u_itself(self):
        assert triangular_decompose(Polynomial((0, 1, 1))) == Polynomial((0, 2))

    def test_u_squared(self):
        p = Polynomial((0, 0, F(1, 4), F(1, 2), F(1, 4)))
        assert triangular_decompose(p) == Polynomial((0, 0, 1))

    def test_zero(self):
        assert triangular_decompose(Polynomial()).is_zero

    def test_constant(self):
        assert triangular_decompose(Polynomial((5,))) == Polynomial((5,))

    def test_odd_degree_rejected(self):
        with pytest.raises(NotTriangular):
            triangular_decompose(Polynomial((0, 0, 0, 1)))  # n^3

    def test_asymmetric_even_degree_rejected(self):
        with pytest.raises(NotTriangular):
            triangular_decompose(Polynomial((0, 0, 1)))  # n^2

    @given(u_coefficient_lists)
    @settings(max_examples=60)
    def test_roundtrip_from_u_side(self, coeffs):
        q = Polynomial(coeffs)
        assert triangular_decompose(q.compose(U_OF_N)) == q


class TestDirectForm:
    def test_power_two(self):
        form = faulhaber_form(2)
        assert form.coefficients == (F(1),)
        assert form.multiplier is Multiplier.SUM_OF_SQUARES
        assert form.parity == "even"

    def test_power_three(self):
        form = faulhaber_form(3)
        assert form.coefficients == (F(1),)
        assert form.multiplier is Multiplier.SQUARE_OF_SUM
        assert form.parity == "odd"

    def test_power_four(self):
        assert faulhaber_form(4).coefficients == (F(6, 5), F(-1, 5))

    def test_power_five(self):
        assert faulhaber_form(5).coefficients == (F(4, 3), F(-1, 3))

    def test_coefficient_count_is_half_the_power(self):
        for power in range(2, 41):
            form = faulhaber_form(power)
            assert len(form.coefficients) == power // 2
            assert form.coefficients[0] != 0  # leading u power genuinely present

    def test_power_one_excluded(self):
        with pytest.raises(ValueError):
            faulhaber_form(1)

    def test_u_polynomial_view_reverses_descending_order(self):
        form = faulhaber_form(4)
        assert form.u_polynomial() == Polynomial((F(-1, 5), F(6, 5)))


class TestInductiveForm:
    def test_power_four(self):
        assert faulhaber_form_inductive(4).coefficients == (F(6, 5), F(-1, 5))

    def test_power_six(self):
        assert faulhaber_form_inductive(6).coefficients == (F(12, 7), F(-6, 7), F(1, 7))

    def test_power_seven(self):
        assert faulhaber_form_inductive(7).coefficients == (F(2), F(-4, 3), F(1, 3))

    def test_agrees_with_direct_route(self):
        for power in range(2, 31):
            assert faulhaber_form_inductive(power) == faulhaber_form(power), power

    def test_power_one_excluded(self):
        with pytest.raises(ValueError):
            faulhaber_form_inductive(1)


class TestExpansion:
    def test_power_four_back_to_monomial(self):
        assert expand_to_monomial(faulhaber_form(4)) == powersum_monomial(4)

    def test_roundtrip(self):
        for power in range(2, 41):
            assert expand_to_monomial(faulhaber_form(power)) == powersum_monomial(power)

    def test_expansion_of_handmade_form(self):
        form = FaulhaberForm(2, "even", (F(1),), Multiplier.SUM_OF_SQUARES)
        assert expand_to_monomial(form) == powersum_monomial(2)


class TestSquareInTriangular:
    def test_square_of_sum_of_squares(self):
        assert square_in_triangular(2) == Polynomial((0, 0, F(1, 9), F(8, 9)))

    def test_square_of_power_four_sum_numerically(self):
        q = square_in_triangular(4)
        for n in range(1, 21):
            u = n * (n + 1) // 2
            assert q(u) == oracle_sum(4, n) ** 2

    def test_even_powers_up_to_ten_numerically(self):
        for power in range(2, 11, 2):
            q = square_in_triangular(power)
            for n in range(1, 21):
                assert q(n * (n + 1) // 2) == oracle_sum(power, n) ** 2

    def test_odd_power_rejected(self):
        with pytest.raises(ValueError):
            square_in_triangular(3)
        with pytest.raises(ValueError):
            square_in_triangular(0)


class TestLemma:
    def test_passes_symbolically_and_numerically(self):
        report = verify_lemma(30)
        assert report.passed
        assert len(report.lines) == 4

    def test_hand_values_at_two(self):
        # (2 + 1/2) * 3^2 == (3/2) * 3 * 5 and (2 + 1/2) * 5 == (4 + 1/6) * 3
        assert (2 + F(1, 2)) * oracle_sum(1, 2) ** 2 == F(3, 2) * 3 * oracle_sum(2, 2)
        assert (2 + F(1, 2)) * oracle_sum(2, 2) == (F(4, 3) * 3 + F(1, 6)) * oracle_sum(1, 2)

    def test_symbolic_identity_restated(self):
        half = F(1, 2)
        sum_sq = powersum_monomial(2)
        sq_sum = powersum_monomial(1) * powersum_monomial(1)
        assert (X + half) * sq_sum == F(3, 2) * U_OF_N * sum_sq
        assert (X + half) * sum_sq == (F(4, 3) * U_OF_N + F(1, 6)) * U_OF_N

    def test_bound_rejected(self):
        with pytest.raises(ValueError):
            verify_lemma(0)


class TestConstantTermBridge:
    def test_power_four_case(self):
        assert faulhaber_form(4).coefficients[-1] / 6 == F(-1, 30) == bernoulli_number(4)

    def test_power_six_case(self):
        assert faulhaber_form(6).coefficients[-1] / 6 == bernoulli_number(6) == F(1, 42)

    def test_report(self):
        report = verify_constant_term_bernoulli(30)
        assert report.passed
        assert len(report.lines) == 29

    def test_bound_rejected(self):
        with pytest.raises(ValueError):
            verify_constant_term_bernoulli(1)
