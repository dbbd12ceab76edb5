import math

import mpmath
import pytest
from hypothesis import given, strategies as st

from composition_runs.asymptotics import (
    Region,
    central_window,
    classify,
    exact_law_probability,
    law_probability,
    law_probability_h,
    omega,
    residue_probability,
    solve_rho,
)
from composition_runs.errors import DomainError
from composition_runs.series import exact_cdf, run_count


@pytest.mark.parametrize("k", [2, 5, 11])
def test_exponent_minus_one(k):
    assert float(law_probability(2 ** (k + 2), k).probability) == pytest.approx(math.exp(-1), abs=1e-15)


def test_n_500_k_9():
    law = law_probability(500, 9)
    assert float(law.probability) == pytest.approx(0.7833, abs=1e-4)
    exact = run_count(500, 9) / 2**499
    assert abs(exact - float(law.probability)) < 0.02


@given(st.integers(2, 10**9), st.integers(-3, 6))
def test_h_form_matches_k_form(n, h):
    k = n.bit_length() - 1 + h
    if k < 1:
        return
    by_h = law_probability_h(n, h)
    by_k = law_probability(n, k)
    assert by_h.k == by_k.k
    assert abs(by_h.probability - by_k.probability) < mpmath.mpf(10) ** -45


def test_omega():
    assert omega(1024) == 1
    assert 1 <= omega(1500) < 2
    assert omega(1536) == 1.5


def test_regions():
    assert central_window(1024) == (8, 20)
    assert classify(1024, 7) is Region.LEFT_TAIL
    assert classify(1024, 8) is Region.CENTRAL
    assert classify(1024, 20) is Region.CENTRAL
    assert classify(1024, 21) is Region.RIGHT_TAIL


def test_tail_bounds():
    left = law_probability(1024, 4)
    assert float(left.tail_bound) == pytest.approx(math.exp(-(1024**0.25) / 4))
    right = law_probability(1024, 23)
    assert float(right.tail_bound) == pytest.approx(2.0**-3 / 1024)
    assert law_probability(1024, 12).tail_bound is None


def test_law_domain():
    with pytest.raises(DomainError):
        law_probability(1, 3)
    with pytest.raises(DomainError):
        law_probability(100, 0)


def test_pre_asymptotic_form_is_close_to_residue():
    pole = solve_rho(10)
    residue = residue_probability(600, 10, pole)
    leading = exact_law_probability(600, 10, pole)
    assert abs(residue - leading) / residue < 0.01


@pytest.mark.slow
def test_envelope_shrinks():
    scaled = []
    for m in range(6, 12):
        n = 2**m
        lo, hi = central_window(n)
        cdf = exact_cdf(n, range(lo, hi + 1))
        worst = max(abs(float(q) - float(law_probability(n, k).probability)) for k, q in cdf.items())
        scaled.append(worst * math.sqrt(n) / m)
    assert all(b <= 2 * a for a, b in zip(scaled, scaled[1:]))


@pytest.mark.slow
def test_tails_at_2048():
    n = 2048
    lg = math.log2(n)
    total = 2 ** (n - 1)
    left_k = math.floor(0.75 * lg)
    assert run_count(n, left_k) / total <= 2 * math.exp(-(n**0.25) / 4)
    assert run_count(n, math.floor(lg / 2)) / total < 1e-3
    assert 1 - run_count(n, 22) / total < 10 / n
