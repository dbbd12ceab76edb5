import pytest
from hypothesis import given, strategies as st

from composition_runs.errors import DegenerateRunBound, InvalidSeries
from composition_runs.series import TruncatedSeries, denominator_series, run_series, series_reciprocal

CARLITZ = [1, 1, 1, 3, 4, 7, 14, 23, 39, 71, 124]


def test_denominator_for_carlitz():
    assert list(denominator_series(2, 4).coeffs) == [1, -1, 0, -2, 1]


def test_carlitz_numbers():
    assert list(run_series(2, 10).coeffs) == CARLITZ


def test_reciprocal_of_one_minus_z_is_geometric():
    d = TruncatedSeries.from_coefficients([1, -1], 6)
    assert list(series_reciprocal(d).coeffs) == [1] * 7


def test_reciprocal_needs_unit_constant():
    with pytest.raises(InvalidSeries):
        series_reciprocal(TruncatedSeries.from_coefficients([2, 1], 3))


@given(st.lists(st.integers(-50, 50), min_size=0, max_size=64))
def test_reciprocal_inverts(tail):
    d = TruncatedSeries.from_coefficients([1] + tail)
    product = d * series_reciprocal(d)
    assert product == TruncatedSeries.one(d.order)


@pytest.mark.parametrize("k", [0, 1])
def test_degenerate_run_bound(k):
    with pytest.raises(DegenerateRunBound):
        denominator_series(k, 5)
    with pytest.raises(DegenerateRunBound):
        run_series(k, 5)


def test_order_mismatch():
    with pytest.raises(InvalidSeries):
        TruncatedSeries.one(3) + TruncatedSeries.one(4)


def test_coefficients_must_match_order():
    with pytest.raises(InvalidSeries):
        TruncatedSeries((1, 2), 3)


@pytest.mark.parametrize("k", [2, 3, 5, 9])
def test_saturation_and_constant_term(k):
    series = run_series(k, 12)
    assert series[0] == 1
    for n in range(1, k):
        # no run of length k fits in fewer than k parts
        assert series[n] == 2 ** (n - 1)


def test_run_series_grows_with_k():
    low, high = run_series(3, 20), run_series(4, 20)
    assert all(a <= b for a, b in zip(low.coeffs, high.coeffs))
