import logging
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Dict, Iterable, Optional, Tuple

import mpmath
import pandas as pd

from composition_runs.errors import DomainError
from composition_runs.series.truncated import run_series

logger = logging.getLogger(__name__)


def _check_size(n: int):
    if n < 1:
        raise DomainError(f"composition size n must be >= 1 (got {n})")


def run_count(n: int, k: int) -> int:
    """
    C_n^<k>: number of compositions of n with no run of k equal parts (L < k).
    """
    _check_size(n)
    if k < 1:
        raise DomainError(f"run bound k must be >= 1 (got {k})")
    if k == 1:
        return 0
    if k > n:
        return 2 ** (n - 1)
    return run_series(k, n)[n]


@dataclass(frozen=True)
class RunCountTable:
    """
    Exact counts C_n^<k> for k = 1..k_max.

    counts[k] is the number of compositions of n whose longest run is < k.
    """

    n: int
    counts: Dict[int, int]
    total: int
    k_max: int

    def cdf(self) -> Dict[int, Fraction]:
        """k -> P_n(L < k), exact."""
        return {k: Fraction(c, self.total) for k, c in self.counts.items()}

    def histogram(self) -> Dict[int, int]:
        """k -> number of compositions with L = k, for k = 1..n."""
        return {k: self.counts[k + 1] - self.counts[k] for k in range(1, self.n + 1)}

    def pmf(self) -> Dict[int, Fraction]:
        """k -> P_n(L = k) over the support (zero masses left out)."""
        return {
            k: Fraction(c, self.total) for k, c in self.histogram().items() if c
        }

    def to_frame(self) -> pd.DataFrame:
        hist = self.histogram()
        rows = []
        below = 0
        for k in range(1, self.n + 1):
            below += hist[k]
            rows.append({
                "k": k,
                "count": hist[k],
                "pmf": Fraction(hist[k], self.total),
                "cdf": Fraction(below, self.total),
            })
        return pd.DataFrame(rows, columns=["k", "count", "pmf", "cdf"])


def count_table(n: int, k_max: Optional[int] = None) -> RunCountTable:
    _check_size(n)
    k_max = n + 1 if k_max is None else k_max
    if k_max < n + 1:
        raise DomainError(f"k_max must be >= n + 1 = {n + 1} so the table saturates (got {k_max})")

    total = 2 ** (n - 1)
    counts = {1: 0}
    for k in range(2, k_max + 1):
        counts[k] = run_series(k, n)[n] if k <= n else total
    logger.info("count table built for n=%d (k_max=%d)", n, k_max)
    return RunCountTable(n=n, counts=counts, total=total, k_max=k_max)


def exact_cdf(n: int, ks: Iterable[int]) -> Dict[int, Fraction]:
    """P_n(L < k) for just the requested k."""
    total = 2 ** (n - 1)
    return {k: Fraction(run_count(n, k), total) for k in sorted(set(ks))}


@dataclass(frozen=True)
class ExactDistribution:
    n: int
    cdf: Dict[int, Fraction] = field(repr=False)
    pmf: Dict[int, Fraction]


def exact_distribution(n: int) -> ExactDistribution:
    table = count_table(n)
    return ExactDistribution(n=n, cdf=table.cdf(), pmf=table.pmf())


def _to_mpf(q: Fraction) -> mpmath.mpf:
    return mpmath.mpf(q.numerator) / q.denominator


def exact_moments(
    n: int,
    precision: int = 50,
    table: Optional[RunCountTable] = None,
) -> Tuple[mpmath.mpf, mpmath.mpf]:
    """
    Mean and variance of L under the uniform model on compositions of n.

    Computed as exact rationals, converted at ``precision`` digits.
    """
    if precision < 10:
        raise DomainError(f"precision must be >= 10 digits (got {precision})")
    table = table or count_table(n)
    pmf = table.pmf()
    mean = sum((k * p for k, p in pmf.items()), Fraction(0))
    second = sum((k * k * p for k, p in pmf.items()), Fraction(0))
    variance = second - mean * mean
    with mpmath.workdps(precision):
        return _to_mpf(mean), _to_mpf(variance)


def exact_moments_fraction(table: RunCountTable) -> Tuple[Fraction, Fraction]:
    """Mean via sum_k P(L >= k) and variance, both exact."""
    cdf = table.cdf()
    mean = sum((1 - cdf[k] for k in range(1, table.n + 1)), Fraction(0))
    second = sum(((2 * k - 1) * (1 - cdf[k]) for k in range(1, table.n + 1)), Fraction(0))
    return mean, second - mean * mean
