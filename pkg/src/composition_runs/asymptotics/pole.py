"""
Dominant pole of C^<k>(z) = 1/D_k(z) and what it says about C_n^<k>.

D_k(z) = 1 - h(z) + g(z) with h(z) = z/(1-z) and
g(z) = sum_{j>=1} z^{jk} (1 - z^j) / (1 - z^{jk}).
"""
import logging
from dataclasses import dataclass
from functools import lru_cache
from typing import NamedTuple, Tuple

import mpmath
import numpy as np

from composition_runs.errors import (
    ConvergenceError,
    DegenerateRunBound,
    DomainError,
    IsolationRefused,
)

logger = logging.getLogger(__name__)

DEFAULT_PRECISION = 50
DEFAULT_TOLERANCE = 1e-30
MAX_TERMS = 1_000_000


class TailBoundedSum(NamedTuple):
    value: mpmath.mpf
    tail_bound: mpmath.mpf
    terms: int


def _check_k(k: int, least: int = 2):
    if k < least:
        raise DegenerateRunBound(f"run bound k must be >= {least} (got {k})")


def _check_unit_interval(z):
    if not 0 < z < 1:
        raise DomainError(f"z must lie in (0, 1) (got {z})")


def _g_sum(z: mpmath.mpf, k: int, tol: mpmath.mpf) -> TailBoundedSum:
    # term j is at most z^{jk} (1+z)/(1-z^k); the tail beyond J sums to
    # z^{(J+1)k} (1+z) / (1-z^k)^2
    q = z**k
    scale = (1 + z) / (1 - q) ** 2
    needed = mpmath.ceil(mpmath.log(tol / scale) / mpmath.log(q))
    if needed > MAX_TERMS:
        raise ConvergenceError(
            f"g(z) at z={mpmath.nstr(z, 10)}, k={k} needs about {int(needed)} terms to reach {tol}; "
            f"the limit is {MAX_TERMS}, so z must stay further from 1"
        )
    total = mpmath.mpf(0)
    qj = q
    for j in range(1, MAX_TERMS):
        zj = z**j
        total += qj * (1 - zj) / (1 - qj)
        qj *= q
        bound = qj * scale
        if bound < tol:
            return TailBoundedSum(total, bound, j)
    raise ConvergenceError(f"g(z) did not reach tolerance {tol} at z={z}, k={k}")


def g_eval(z, k: int, tol=None, precision: int = DEFAULT_PRECISION) -> TailBoundedSum:
    """
    g(z) on (0, 1), with a certified bound on the neglected tail.

    The sum converges like z^{jk}, so z very close to 1 needs more than
    MAX_TERMS terms; those raise ConvergenceError up front. At the default
    50 digits this holds for z up to about 0.9999 at k = 2.
    """
    _check_k(k)
    with mpmath.workdps(precision):
        z = mpmath.mpf(z)
        _check_unit_interval(z)
        tol = mpmath.mpf(10) ** (-precision) if tol is None else mpmath.mpf(tol)
        return _g_sum(z, k, tol)


def _d_value(z, k, tol) -> mpmath.mpf:
    return 1 - z / (1 - z) + _g_sum(z, k, tol).value


def _d_prime(z: mpmath.mpf, k: int, tol: mpmath.mpf) -> TailBoundedSum:
    """D_k'(z) by term-wise differentiation; tail bounded by sum_{j>J} j(3k+1) z^{jk-1}/(1-z^k)^2."""
    q = z**k
    scale = (3 * k + 1) / (z * (1 - q) ** 2)
    total = -1 / (1 - z) ** 2
    for j in range(1, MAX_TERMS):
        u = z ** (j * k)
        num = u - z ** (j * (k + 1))
        num_prime = j * k * z ** (j * k - 1) - j * (k + 1) * z ** (j * (k + 1) - 1)
        den = 1 - u
        den_prime = -j * k * z ** (j * k - 1)
        total += (num_prime * den - num * den_prime) / den**2
        q_next = u * q
        bound = scale * q_next * ((j + 1) - j * q) / (1 - q) ** 2
        if bound < tol:
            return TailBoundedSum(total, bound, j)
    raise ConvergenceError(f"D_k'(z) did not reach tolerance {tol} at z={z}, k={k}")


@dataclass(frozen=True)
class PoleEstimate:
    k: int
    rho: mpmath.mpf
    bracket: Tuple[mpmath.mpf, mpmath.mpf]
    residual: mpmath.mpf
    first_order: mpmath.mpf
    tail_bound: mpmath.mpf
    first_iterate: mpmath.mpf
    iterations: int
    precision: int

    @property
    def isolation_proven(self) -> bool:
        # the circle argument only covers k >= 4
        return self.k >= 4

    def first_order_ratio(self) -> mpmath.mpf:
        """|rho - (1 + 2^{-k-2})/2| / (k 2^{-2k}); bounded as k grows."""
        with mpmath.workdps(self.precision):
            return abs(self.rho - self.first_order) / (self.k * mpmath.mpf(2) ** (-2 * self.k))


def first_order_estimate(k: int) -> mpmath.mpf:
    return (1 + mpmath.mpf(2) ** (-k - 2)) / 2


def first_iterate(k: int, precision: int = DEFAULT_PRECISION) -> mpmath.mpf:
    """z_1 = (1 + g(1/2)) / (2 + g(1/2))."""
    _check_k(k)
    with mpmath.workdps(precision):
        g_half = _g_sum(mpmath.mpf(1) / 2, k, mpmath.mpf(10) ** (-precision)).value
        return (1 + g_half) / (2 + g_half)


@lru_cache(maxsize=512)
def solve_rho(
    k: int,
    tol: float = DEFAULT_TOLERANCE,
    precision: int = DEFAULT_PRECISION,
    max_iter: int = 2000,
) -> PoleEstimate:
    """
    rho_k, the root of h(z) - g(z) = 1 in (1/2, 3/5).

    Fixed-point iteration z <- (1 + g(z)) / (2 + g(z)) from z = 1/2 climbs
    monotonically toward rho_k; the last iterate and 3/5 then bracket the
    root for bisection.
    """
    _check_k(k)
    with mpmath.workdps(precision):
        tol_m = mpmath.mpf(tol)
        if tol_m < mpmath.mpf(10) ** (5 - precision):
            raise ConvergenceError(
                f"tolerance {tol} is infeasible at {precision} digits; "
                f"raise the precision or loosen the tolerance"
            )
        inner = mpmath.mpf(10) ** (-precision)
        slack = 10 * mpmath.eps

        def excess(z):
            return z / (1 - z) - _g_sum(z, k, inner).value - 1

        z = mpmath.mpf(1) / 2
        z1 = None
        iterations = 0
        for iterations in range(1, max_iter + 1):
            gz = _g_sum(z, k, inner).value
            z_next = (1 + gz) / (2 + gz)
            if z_next < z - slack:
                raise ConvergenceError(f"fixed-point iterates decreased at step {iterations} for k={k}")
            if z1 is None:
                z1 = z_next
            step = z_next - z
            z = max(z, z_next)
            if step < tol_m / 10:
                break
        else:
            raise ConvergenceError(f"fixed-point iteration for k={k} did not settle in {max_iter} steps")
        logger.debug("k=%d: fixed point settled after %d iterations", k, iterations)

        lo, hi = z, mpmath.mpf(3) / 5
        if excess(lo) > 0:
            # the last iterate already sits on the far side within rounding
            lo = z - tol_m
        rho = mpmath.findroot(excess, (lo, hi), solver="bisect", maxsteps=10 * precision, verify=False)

        delta = tol_m / 10
        bracket = (rho - delta, rho + delta)
        if not (excess(bracket[0]) <= 0 <= excess(bracket[1])):
            raise ConvergenceError(f"no sign change around the root for k={k}")
        residual = abs(_d_value(rho, k, inner))
        if residual > tol_m:
            raise ConvergenceError(f"residual {mpmath.nstr(residual, 5)} above tolerance {tol} for k={k}")
        if not (mpmath.mpf(1) / 2 < rho < mpmath.mpf(3) / 5):
            raise ConvergenceError(f"root {rho} escaped the bracket (1/2, 3/5)")

        return PoleEstimate(
            k=k,
            rho=rho,
            bracket=bracket,
            residual=residual,
            first_order=first_order_estimate(k),
            tail_bound=_g_sum(rho, k, inner).tail_bound,
            first_iterate=z1,
            iterations=iterations,
            precision=precision,
        )


def residue_count(n: int, k: int, pole: PoleEstimate) -> mpmath.mpf:
    """R_{n,k} = -rho^{-n-1} / D_k'(rho), the pole's share of C_n^<k>."""
    if pole.k != k:
        raise DomainError(f"pole was solved for k={pole.k}, not k={k}")
    if n < 0:
        raise DomainError(f"n must be nonnegative (got {n})")
    with mpmath.workdps(pole.precision):
        d_prime = _d_prime(pole.rho, k, mpmath.mpf(10) ** (-pole.precision)).value
        return -(pole.rho ** (-n - 1)) / d_prime


def residue_leading_form(n: int, pole: PoleEstimate) -> mpmath.mpf:
    """rho^{-n-1} (1 - rho)^2; residue_count divided by this is 1 + eps(k)."""
    with mpmath.workdps(pole.precision):
        return pole.rho ** (-n - 1) * (1 - pole.rho) ** 2


@dataclass(frozen=True)
class RoucheWitness:
    k: int
    samples: int
    radius: float
    max_g: float
    min_f: float
    min_f_at: complex
    tail_bound: float
    analytic_g_bound: float
    analytic_f_bound: float

    @property
    def verdict(self) -> bool:
        return self.max_g + self.tail_bound < self.min_f


def rouche_witness(k: int, samples: int = 4096, radius: float = 0.6, tol: float = 1e-15) -> RoucheWitness:
    """
    Sample |g| and |f| = |1 - z/(1-z)| on the circle |z| = radius.
    """
    if k < 4:
        raise IsolationRefused(
            f"the bound |g| < |f| on |z| = 3/5 is only established for k >= 4 (got k={k}); "
            "poles for k = 2, 3 are solved but their isolation is unproven"
        )
    if samples < 1024:
        raise DomainError(f"need at least 1024 sample points on the circle (got {samples})")

    theta = 2 * np.pi * np.arange(samples) / samples
    z = radius * np.exp(1j * theta)
    q = radius**k
    scale = (1 + radius) / (1 - q) ** 2

    g = np.zeros(samples, dtype=complex)
    terms = 0
    for j in range(1, MAX_TERMS):
        zjk = z ** (j * k)
        g += zjk * (1 - z**j) / (1 - zjk)
        terms = j
        if q ** (j + 1) * scale < tol:
            break
    tail = q ** (terms + 1) * scale
    f = 1 - z / (1 - z)

    abs_f = np.abs(f)
    at = int(np.argmin(abs_f))
    witness = RoucheWitness(
        k=k,
        samples=samples,
        radius=radius,
        max_g=float(np.abs(g).max()),
        min_f=float(abs_f[at]),
        min_f_at=complex(z[at]),
        tail_bound=float(tail),
        analytic_g_bound=(1 + radius) * q / (1 - q) ** 2,
        analytic_f_bound=abs(1 - radius / (1 - radius)),
    )
    logger.debug("rouche k=%d: max|g|=%.3e min|f|=%.6f", k, witness.max_g, witness.min_f)
    return witness
