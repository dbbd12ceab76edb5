"""
Harmonic sums behind the moments of L and their periodic fluctuations.

    Phi(x) = sum_{h>=0} (1 - exp(-x/2^h))
    Psi(x) = sum_{h>=0} (2h - 1)(1 - exp(-x/2^h))

E_n(L) ~ Phi(n/4) - 1 and E_n(L^2) ~ Psi(n/4) + 1. Their Mellin expansions
carry the period-1 functions P and Q, written here as Fourier series over
chi_k = 2 i k pi / log 2.
"""
import logging
import math
from dataclasses import dataclass
from typing import Tuple

import mpmath
import numpy as np
import pandas as pd

from composition_runs.asymptotics.pole import DEFAULT_PRECISION
from composition_runs.errors import ConvergenceError, DomainError

logger = logging.getLogger(__name__)

DEFAULT_FOURIER_TERMS = 16
IMAGINARY_RESIDUAL = 1e-12


def _tol(tol, precision):
    return mpmath.mpf(10) ** (-precision) if tol is None else mpmath.mpf(tol)


def _check_positive(x):
    if not x > 0:
        raise DomainError(f"x must be positive (got {x})")


def phi(x, tol=None, precision: int = DEFAULT_PRECISION) -> mpmath.mpf:
    with mpmath.workdps(precision):
        x = mpmath.mpf(x)
        _check_positive(x)
        tol = _tol(tol, precision)
        total = mpmath.mpf(0)
        t = x
        while True:
            total += -mpmath.expm1(-t)
            # sum of the remaining terms is at most t
            if 2 * t < tol:
                return total
            t /= 2


def psi_big(x, tol=None, precision: int = DEFAULT_PRECISION) -> mpmath.mpf:
    with mpmath.workdps(precision):
        x = mpmath.mpf(x)
        _check_positive(x)
        tol = _tol(tol, precision)
        total = mpmath.mpf(0)
        h = 0
        t = x
        while True:
            total += (2 * h - 1) * -mpmath.expm1(-t)
            # sum_{h' > h} (2h'-1) x/2^h' = (2h+3) x/2^h
            if (2 * h + 3) * t < tol:
                return total
            h += 1
            t /= 2


def _chi(k: int) -> mpmath.mpc:
    return mpmath.mpc(0, 2 * k * mpmath.pi / mpmath.log(2))


def _fourier(w, terms: int, coefficient) -> mpmath.mpf:
    if terms < 1:
        raise DomainError(f"need at least one Fourier term (got {terms})")
    w = mpmath.mpf(w)
    total = mpmath.mpc(0)
    for k in range(1, terms + 1):
        for s in (k, -k):
            total += coefficient(_chi(s)) * mpmath.expjpi(-2 * s * w)
    if abs(total.imag) > IMAGINARY_RESIDUAL:
        raise ConvergenceError(f"Fourier sum left an imaginary part {mpmath.nstr(total.imag, 5)}")
    return total.real


def fourier_P(w, terms: int = DEFAULT_FOURIER_TERMS, precision: int = DEFAULT_PRECISION) -> mpmath.mpf:
    """P(w) = -(1/log 2) sum_{k != 0} Gamma(chi_k) e^{-2 i k pi w}."""
    with mpmath.workdps(precision):
        return -_fourier(w, terms, mpmath.gamma) / mpmath.log(2)


def fourier_Q(w, terms: int = DEFAULT_FOURIER_TERMS, precision: int = DEFAULT_PRECISION) -> mpmath.mpf:
    """Q(w) = (2/log^2 2) sum_{k != 0} digamma(chi_k) Gamma(chi_k) e^{-2 i k pi w}."""
    with mpmath.workdps(precision):
        s = _fourier(w, terms, lambda c: mpmath.digamma(c) * mpmath.gamma(c))
        return 2 * s / mpmath.log(2) ** 2


def mean_constant() -> mpmath.mpf:
    return mpmath.euler / mpmath.log(2) - mpmath.mpf(5) / 2


def variance_constant() -> mpmath.mpf:
    return mpmath.mpf(1) / 12 + mpmath.pi**2 / (6 * mpmath.log(2) ** 2)


def phi_smooth(w) -> mpmath.mpf:
    """Non-oscillating part of Phi(2^w)."""
    return w + mpmath.euler / mpmath.log(2) + mpmath.mpf(1) / 2


def psi_smooth(w, p) -> mpmath.mpf:
    """Psi(2^w) less Q(w), given p = P(w)."""
    L = mpmath.log(2)
    g = mpmath.euler
    return (
        w**2
        + w * (2 * g / L - 1 + 2 * p)
        - mpmath.mpf(2) / 3
        + (mpmath.pi**2 + 6 * g**2) / (6 * L**2)
        - g / L
        - p
    )


def direct_fluctuations(w, precision: int = DEFAULT_PRECISION) -> Tuple[mpmath.mpf, mpmath.mpf]:
    """(P(w), Q(w)) recovered from the direct sums Phi(2^w), Psi(2^w)."""
    with mpmath.workdps(precision):
        w = mpmath.mpf(w)
        x = mpmath.power(2, w)
        p = phi(x, precision=precision) - phi_smooth(w)
        q = psi_big(x, precision=precision) - psi_smooth(w, p)
        return p, q


def mean_fluctuation(x, precision: int = DEFAULT_PRECISION) -> mpmath.mpf:
    """Phi(x/4) - lg x - 1, which oscillates around gamma/log 2 - 5/2."""
    with mpmath.workdps(precision):
        x = mpmath.mpf(x)
        return phi(x / 4, precision=precision) - mpmath.log(x, 2) - 1


def variance_fluctuation(x, precision: int = DEFAULT_PRECISION) -> mpmath.mpf:
    """Psi(x/4) + 1 - (Phi(x/4) - 1)^2, which oscillates around 1/12 + pi^2/(6 log^2 2)."""
    with mpmath.workdps(precision):
        x = mpmath.mpf(x)
        first = phi(x / 4, precision=precision) - 1
        return psi_big(x / 4, precision=precision) + 1 - first**2


def fluctuation_curves(
    lo: float,
    hi: float,
    step: float,
    terms: int = DEFAULT_FOURIER_TERMS,
    precision: int = DEFAULT_PRECISION,
) -> pd.DataFrame:
    """
    Both constant-part curves over lg x in [lo, hi], beside the Fourier
    values of P and Q at the same points.
    """
    if step <= 0 or hi < lo:
        raise DomainError(f"need lo <= hi and step > 0 (got {lo}, {hi}, {step})")
    count = int(math.floor((hi - lo) / step + 1e-9)) + 1
    grid = lo + step * np.arange(count)
    rows = []
    with mpmath.workdps(precision):
        for lg_x in grid:
            # round off float drift in the grid so rows print cleanly
            lg_x = mpmath.mpf(round(float(lg_x), 12))
            x = mpmath.power(2, lg_x)
            p_direct, q_direct = direct_fluctuations(lg_x, precision)
            rows.append({
                "lg_x": lg_x,
                "mean_part": mean_fluctuation(x, precision),
                "variance_part": variance_fluctuation(x, precision),
                "P_direct": p_direct,
                "P_fourier": fourier_P(lg_x, terms, precision),
                "Q_direct": q_direct,
                "Q_fourier": fourier_Q(lg_x, terms, precision),
            })
    logger.info("fluctuation curves: %d points on [%s, %s]", count, lo, hi)
    return pd.DataFrame(rows)


@dataclass(frozen=True)
class MomentReport:
    n: int
    mean_asym: mpmath.mpf
    var_asym: mpmath.mpf
    phi_mean: mpmath.mpf
    psi_second_moment: mpmath.mpf
    fluctuation_P: mpmath.mpf
    fluctuation_Q: mpmath.mpf
    fourier_terms: int
    precision: int = DEFAULT_PRECISION

    @property
    def phi_variance(self) -> mpmath.mpf:
        with mpmath.workdps(self.precision):
            return self.psi_second_moment - self.phi_mean**2


def moment_report(n: int, terms: int = DEFAULT_FOURIER_TERMS, precision: int = DEFAULT_PRECISION) -> MomentReport:
    if n < 2:
        raise DomainError(f"moment asymptotics need n >= 2 (got {n})")
    with mpmath.workdps(precision):
        w = mpmath.log(n, 2)
        p = fourier_P(w, terms, precision)
        q = fourier_Q(w, terms, precision)
        L = mpmath.log(2)
        quarter = mpmath.mpf(n) / 4
        return MomentReport(
            n=n,
            mean_asym=w + mean_constant() + p,
            var_asym=variance_constant() + q - (2 * mpmath.euler / L) * p - p**2,
            phi_mean=phi(quarter, precision=precision) - 1,
            psi_second_moment=psi_big(quarter, precision=precision) + 1,
            fluctuation_P=p,
            fluctuation_Q=q,
            fourier_terms=terms,
            precision=precision,
        )


@dataclass(frozen=True)
class RunPrediction:
    n: int
    r: int
    leading: float
    lower: float
    upper: float


def expected_run_of_r(n: int, r: int, band: float = 3.0) -> RunPrediction:
    """(1/r) lg n, with a band of +-``band`` for the unspecified O(1) term."""
    if n < 2:
        raise DomainError(f"n must be >= 2 (got {n})")
    if r < 1:
        raise DomainError(f"part value r must be >= 1 (got {r})")
    leading = math.log2(n) / r
    return RunPrediction(n=n, r=r, leading=leading, lower=leading - band, upper=leading + band)


@dataclass(frozen=True)
class GammaCheck:
    y: float
    modulus_error: mpmath.mpf
    recurrence_error: mpmath.mpf


def gamma_check(y: float, precision: int = DEFAULT_PRECISION) -> GammaCheck:
    """
    Relative errors of |Gamma(iy)|^2 = pi/(y sinh(pi y)) and of
    Gamma(z+1) = z Gamma(z) at z = 1/2 + iy.
    """
    if y == 0:
        raise DomainError("Gamma has a pole at 0")
    with mpmath.workdps(precision):
        y = mpmath.mpf(y)
        lhs = abs(mpmath.gamma(mpmath.mpc(0, y))) ** 2
        rhs = mpmath.pi / (y * mpmath.sinh(mpmath.pi * y))
        z = mpmath.mpc(mpmath.mpf(1) / 2, y)
        shifted = mpmath.gamma(z + 1)
        return GammaCheck(
            y=float(y),
            modulus_error=abs(lhs - rhs) / abs(rhs),
            recurrence_error=abs(shifted - z * mpmath.gamma(z)) / abs(shifted),
        )
