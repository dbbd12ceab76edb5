"""
Double-exponential law for the longest run: P_n(L < k) ~ exp(-n / 2^(k+2)).
"""
import logging
import math
from dataclasses import dataclass
from enum import Enum
from typing import Optional, Tuple

import mpmath

from composition_runs.asymptotics.pole import DEFAULT_PRECISION, PoleEstimate, residue_count, solve_rho
from composition_runs.errors import DomainError

logger = logging.getLogger(__name__)


class Region(str, Enum):
    CENTRAL = "central"
    LEFT_TAIL = "left-tail"
    RIGHT_TAIL = "right-tail"


@dataclass(frozen=True)
class AsymptoticLaw:
    n: int
    k: int
    h: int
    omega: mpmath.mpf
    probability: mpmath.mpf
    region: Region
    # left tail bounds P(L < k), right tail bounds P(L >= k); None in the window
    tail_bound: Optional[mpmath.mpf] = None


def _check_n(n: int):
    if n < 2:
        raise DomainError(f"the law needs n >= 2 (got {n})")


def floor_lg(n: int) -> int:
    return n.bit_length() - 1


def omega(n: int) -> mpmath.mpf:
    """2^{frac(lg n)} = n / 2^{floor(lg n)}, in [1, 2)."""
    return mpmath.mpf(n) / 2 ** floor_lg(n)


def central_window(n: int) -> Tuple[int, int]:
    """Integer k with 3/4 lg n <= k <= 2 lg n."""
    _check_n(n)
    lg = math.log2(n)
    return math.ceil(0.75 * lg - 1e-12), math.floor(2 * lg + 1e-12)


def classify(n: int, k: int) -> Region:
    lo, hi = central_window(n)
    if k < lo:
        return Region.LEFT_TAIL
    if k > hi:
        return Region.RIGHT_TAIL
    return Region.CENTRAL


def tail_bound(n: int, k: int, region: Region) -> Optional[mpmath.mpf]:
    if region is Region.LEFT_TAIL:
        return mpmath.exp(-mpmath.root(n, 4) / 4)
    if region is Region.RIGHT_TAIL:
        y = k - 2 * mpmath.log(n, 2)
        return mpmath.power(2, -y) / n
    return None


def law_probability(n: int, k: int, precision: int = DEFAULT_PRECISION) -> AsymptoticLaw:
    _check_n(n)
    if k < 1:
        raise DomainError(f"k must be >= 1 (got {k})")
    with mpmath.workdps(precision):
        region = classify(n, k)
        return AsymptoticLaw(
            n=n,
            k=k,
            h=k - floor_lg(n),
            omega=omega(n),
            probability=mpmath.exp(-mpmath.mpf(n) / mpmath.mpf(2) ** (k + 2)),
            region=region,
            tail_bound=tail_bound(n, k, region),
        )


def law_probability_h(n: int, h: int, precision: int = DEFAULT_PRECISION) -> AsymptoticLaw:
    """The same law indexed by h = k - floor(lg n): exp(-omega(n) 2^{-h-2})."""
    _check_n(n)
    k = floor_lg(n) + h
    if k < 1:
        raise DomainError(f"h={h} puts k below 1 for n={n}")
    with mpmath.workdps(precision):
        w = omega(n)
        region = classify(n, k)
        return AsymptoticLaw(
            n=n,
            k=k,
            h=h,
            omega=w,
            probability=mpmath.exp(-w * mpmath.mpf(2) ** (-h - 2)),
            region=region,
            tail_bound=tail_bound(n, k, region),
        )


def exact_law_probability(n: int, k: int, pole: Optional[PoleEstimate] = None) -> mpmath.mpf:
    """Pre-asymptotic form (2/rho)(2 rho)^{-n} (1-rho)^2 of P_n(L < k)."""
    _check_n(n)
    pole = pole or solve_rho(k)
    with mpmath.workdps(pole.precision):
        rho = pole.rho
        return (2 / rho) * (2 * rho) ** (-n) * (1 - rho) ** 2


def residue_probability(n: int, k: int, pole: Optional[PoleEstimate] = None) -> mpmath.mpf:
    """residue_count(n, k) / 2^{n-1}."""
    pole = pole or solve_rho(k)
    with mpmath.workdps(pole.precision):
        return residue_count(n, k, pole) / mpmath.mpf(2) ** (n - 1)
