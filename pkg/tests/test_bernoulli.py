"""Bernoulli numbers and polynomials, cross-checked against an independent
Akiyama-Tanigawa oracle that shares nothing with the recurrence in the package."""

from __future__ import annotations

import threading
from fractions import Fraction
from math import comb

import pytest

from faulhaber.bernoulli import (
    BernoulliCache,
    bernoulli_at_half,
    bernoulli_number,
    bernoulli_polynomial,
    verify_odd_zero,
)
from faulhaber.polynomial import Polynomial

F = Fraction


def akiyama_tanigawa(n: int) -> list[Fraction]:
    """Independent oracle; produces B_1 = +1/2, so index 1 is flipped."""
    row = [F(0)] * (n + 1)
    out = []
    for m in range(n + 1):
        row[m] = F(1, m + 1)
        for j in range(m, 0, -1):
            row[j - 1] = j * (row[j - 1] - row[j])
        out.append(row[0])
    out[1] = -out[1]
    return out


ORACLE = akiyama_tanigawa(60)


class TestNumbers:
    @pytest.mark.parametrize(
        "m, expected",
        [
            (0, F(1)),
            (1, F(-1, 2)),
            (2, F(1, 6)),
            (3, F(0)),
            (4, F(-1, 30)),
            (6, F(1, 42)),
            (12, F(-691, 2730)),
        ],
    )
    def test_known_values(self, m, expected):
        assert bernoulli_number(m) == expected

    def test_matches_independent_oracle(self):
        assert [bernoulli_number(m) for m in range(61)] == ORACLE

    def test_defining_recurrence_residue_vanishes(self):
        # sum(C(n+1, k) B_k, k = 0..n) == 0 for n >= 1
        for n in range(1, 61):
            residue = sum(comb(n + 1, k) * bernoulli_number(k) for k in range(n + 1))
            assert residue == 0, n

    def test_odd_values_vanish(self):
        assert all(bernoulli_number(2 * m + 1) == 0 for m in range(1, 101))

    def test_values_are_reduced_with_positive_denominator(self):
        for m in range(40):
            b = bernoulli_number(m)
            assert b.denominator > 0

    def test_negative_index_rejected(self):
        with pytest.raises(ValueError):
            bernoulli_number(-1)


class TestCache:
    def test_fills_all_lower_indices(self):
        cache = BernoulliCache()
        assert cache.high_water == 0
        cache.get(10)
        assert cache.high_water == 10

    def test_reuse_does_not_shrink(self):
        cache = BernoulliCache()
        cache.get(8)
        cache.get(3)
        assert cache.high_water == 8

    def test_concurrent_readers_and_extenders(self):
        cache = BernoulliCache()
        results: dict[int, Fraction] = {}

        def worker(idx: int) -> None:
            results[idx] = cache.get(40 + idx % 7)

        threads = [threading.Thread(target=worker, args=(i,)) for i in range(16)]
        for t in threads:
            t.start()
        for t in threads:
            t.join()
        for idx, value in results.items():
            assert value == ORACLE[40 + idx % 7]


class TestPolynomials:
    def test_degree_zero(self):
        assert bernoulli_polynomial(0) == Polynomial((1,))

    def test_degree_one(self):
        assert bernoulli_polynomial(1) == Polynomial((F(-1, 2), 1))

    def test_degree_two(self):
        assert bernoulli_polynomial(2) == Polynomial((F(1, 6), -1, 1))

    def test_value_at_zero_is_the_number(self):
        for m in range(61):
            assert bernoulli_polynomial(m)(0) == bernoulli_number(m)

    def test_leading_coefficient_is_one(self):
        for m in range(20):
            assert bernoulli_polynomial(m).leading_coefficient == 1

    def test_negative_index_rejected(self):
        with pytest.raises(ValueError):
            bernoulli_polynomial(-2)


class TestAtHalf:
    @pytest.mark.parametrize(
        "r, expected",
        [(0, F(1)), (1, F(0)), (2, F(-1, 12)), (4, F(7, 240))],
    )
    def test_known_values(self, r, expected):
        assert bernoulli_at_half(r) == expected

    def test_closed_form_matches_polynomial_evaluation(self):
        for r in range(61):
            assert bernoulli_at_half(r) == bernoulli_polynomial(r)(F(1, 2))


class TestVerifyOddZero:
    def test_single_check(self):
        report = verify_odd_zero(1)
        assert report.passed
        assert len(report.lines) == 1
        assert report.lines[0].label == "B_3 = 0"

    def test_longer_run(self):
        report = verify_odd_zero(50)
        assert report.passed
        assert len(report.lines) == 50
        assert report.first_failure is None

    def test_zero_bound_rejected(self):
        with pytest.raises(ValueError):
            verify_odd_zero(0)

    def test_summary_text(self):
        assert verify_odd_zero(3).summary() == "odd-bernoulli: PASS (3 checks)"
