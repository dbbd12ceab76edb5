import math

import mpmath
import pytest

from composition_runs.asymptotics import (
    first_iterate,
    g_eval,
    residue_count,
    residue_leading_form,
    rouche_witness,
    solve_rho,
)
from composition_runs.errors import ConvergenceError, DegenerateRunBound, DomainError, IsolationRefused
from composition_runs.series import run_count, run_series


def _g_direct(z, k, terms=400):
    return sum(z ** (j * k) * (1 - z**j) / (1 - z ** (j * k)) for j in range(1, terms))


def test_g_at_one_half():
    with mpmath.workdps(50):
        result = g_eval(mpmath.mpf(1) / 2, 4, tol=1e-15)
        assert result.tail_bound < 1e-15
        assert abs(result.value - _g_direct(mpmath.mpf(1) / 2, 4)) < 1e-15
        assert abs(result.value - mpmath.mpf(1) / 30) < 0.004


def test_g_small_z():
    assert g_eval(1e-6, 3).value < 1e-17


def test_h_beats_g_at_three_fifths():
    z = mpmath.mpf(3) / 5
    assert z / (1 - z) - g_eval(z, 2).value > 1


def test_g_close_to_one():
    with mpmath.workdps(50):
        z = mpmath.mpf("0.9")
        assert abs(g_eval(z, 2).value - _g_direct(z, 2)) < 1e-30
    with pytest.raises(ConvergenceError, match="further from 1"):
        g_eval(0.99999, 2)


@pytest.mark.parametrize("z", [0, 1, -0.5, 1.5])
def test_g_domain(z):
    with pytest.raises(DomainError):
        g_eval(z, 3)


def test_k_below_two_is_degenerate():
    with pytest.raises(DegenerateRunBound):
        solve_rho(1)


def test_carlitz_pole():
    pole = solve_rho(2)
    assert pole.residual <= 1e-30
    assert mpmath.mpf(1) / 2 < pole.rho < mpmath.mpf(3) / 5
    assert not pole.isolation_proven
    series = run_series(2, 401)
    with mpmath.workdps(50):
        ratio = mpmath.mpf(series[401]) / series[400]
        assert abs(ratio * pole.rho - 1) < 1e-8


def test_pole_brackets_and_orders():
    rhos = [solve_rho(k).rho for k in range(2, 13)]
    assert all(b < a for a, b in zip(rhos, rhos[1:]))
    for k in range(2, 13):
        pole = solve_rho(k)
        assert pole.bracket[0] < pole.rho < pole.bracket[1]
        assert pole.isolation_proven == (k >= 4)


@pytest.mark.slow
def test_pole_residual_and_order_to_sixty_four():
    rhos = []
    for k in range(2, 65):
        pole = solve_rho(k)
        assert pole.residual <= 1e-30
        rhos.append(pole.rho)
    assert all(b < a for a, b in zip(rhos, rhos[1:]))


def test_large_k_pole():
    pole = solve_rho(60)
    with mpmath.workdps(50):
        assert abs((pole.rho - mpmath.mpf(1) / 2) / mpmath.mpf(2) ** -63 - 1) < 1e-3


def test_first_order_ratio_is_bounded():
    ratios = [solve_rho(k).first_order_ratio() for k in range(8, 41)]
    assert 0 < max(ratios) < 1


@pytest.mark.parametrize("k", [4, 8, 12])
def test_first_iterate(k):
    with mpmath.workdps(50):
        z1 = first_iterate(k)
        expected = mpmath.mpf(1) / 2 + mpmath.mpf(2) ** (-k - 3)
        assert abs(z1 - expected) < 4 * mpmath.mpf(2) ** (-2 * k)
        assert z1 == solve_rho(k).first_iterate


def test_infeasible_tolerance():
    with pytest.raises(ConvergenceError):
        solve_rho(5, tol=1e-40, precision=20)


def test_residue_matches_exact():
    exact = run_count(100, 5)
    approx = residue_count(100, 5, solve_rho(5))
    assert abs(approx - exact) / exact < 1e-3


def test_residue_error_shrinks():
    errors = []
    for n in (64, 128, 256, 512):
        k = math.ceil(math.log2(n))
        exact = run_count(n, k)
        with mpmath.workdps(50):
            errors.append(abs(residue_count(n, k, solve_rho(k)) - exact) / exact)
    assert errors[-1] < 1e-2
    assert all(b < a for a, b in zip(errors, errors[1:]))


def test_residue_when_k_exceeds_n():
    # k > n: every composition qualifies, C_30^<31> = 2^29
    assert run_count(30, 31) == 2**29
    approx = residue_count(30, 31, solve_rho(31))
    assert abs(float(approx) / 2**29 - 1) < 1e-4


def test_residue_needs_matching_pole():
    with pytest.raises(DomainError):
        residue_count(50, 4, solve_rho(5))


def test_leading_form_ratio():
    pole = solve_rho(20)
    with mpmath.workdps(50):
        ratio = residue_count(1000, 20, pole) / residue_leading_form(1000, pole)
        assert abs(ratio - 1) < 20 * mpmath.mpf(2) ** -20 * 4


def test_rouche_at_four():
    witness = rouche_witness(4, samples=4096)
    assert witness.analytic_g_bound == pytest.approx(0.2737, abs=1e-4)
    assert witness.max_g < witness.analytic_g_bound
    assert witness.min_f >= 0.5 - 1e-9
    assert witness.min_f_at.real == pytest.approx(0.6)
    assert witness.verdict


def test_rouche_larger_k():
    assert rouche_witness(10).max_g < 0.01
    assert rouche_witness(20, samples=4096).max_g < 1e-4


def test_rouche_refuses_small_k():
    with pytest.raises(IsolationRefused):
        rouche_witness(3)


def test_rouche_needs_samples():
    with pytest.raises(DomainError):
        rouche_witness(5, samples=100)
