"""
Brute-force ground truth over all 2^(n-1) compositions of n.

A composition of n is identified with a bar mask: bit i (0 <= i < n-1) set
means a separation bar sits in the gap after the (i+1)-th ball.
"""
import logging
from collections import Counter
from dataclasses import dataclass
from itertools import groupby
from typing import Dict, Iterator, Optional, Tuple

from composition_runs.config import settings_from_env
from composition_runs.errors import CapExceeded, DomainError

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class Composition:
    parts: Tuple[int, ...]

    def __post_init__(self):
        if not self.parts:
            raise DomainError("a composition needs at least one part")
        if any(p < 1 for p in self.parts):
            raise DomainError(f"parts must be positive integers: {self.parts}")

    @property
    def n(self) -> int:
        return sum(self.parts)

    @classmethod
    def from_bar_mask(cls, n: int, mask: int) -> "Composition":
        if n < 1:
            raise DomainError(f"composition size n must be >= 1 (got {n})")
        parts = []
        size = 1
        for gap in range(n - 1):
            if mask >> gap & 1:
                parts.append(size)
                size = 1
            else:
                size += 1
        parts.append(size)
        return cls(tuple(parts))

    def bar_mask(self) -> int:
        mask = 0
        position = 0
        for part in self.parts[:-1]:
            position += part
            mask |= 1 << (position - 1)
        return mask


def runs(c: Composition) -> Iterator[Tuple[int, int]]:
    """Maximal blocks of equal parts as (value, length)."""
    for value, block in groupby(c.parts):
        yield value, sum(1 for _ in block)


def longest_run(c: Composition) -> int:
    return max(length for _, length in runs(c))


def longest_run_of(c: Composition, r: int) -> int:
    """Longest block of consecutive parts equal to ``r`` (0 when absent)."""
    if r < 1:
        raise DomainError(f"part value r must be >= 1 (got {r})")
    return max((length for value, length in runs(c) if value == r), default=0)


def run_profile(c: Composition) -> Dict[int, int]:
    """r -> L_r for every part value present in ``c``."""
    profile: Dict[int, int] = {}
    for value, length in runs(c):
        if length > profile.get(value, 0):
            profile[value] = length
    return profile


def _check_cap(n: int, cap: Optional[int]):
    # unset cap falls back to COMPOSITION_RUNS_ENUM_CAP, then the Settings default
    if cap is None:
        cap = settings_from_env().enumeration_cap
    if n < 1:
        raise DomainError(f"composition size n must be >= 1 (got {n})")
    if n > cap:
        raise CapExceeded("enumeration size n", n, cap)


def enumerate_all(n: int, cap: Optional[int] = None) -> Iterator[Composition]:
    """Every composition of n exactly once, in bar-mask order."""
    _check_cap(n, cap)
    for mask in range(2 ** (n - 1)):
        yield Composition.from_bar_mask(n, mask)


def brute_distribution(n: int, cap: Optional[int] = None) -> Dict[int, int]:
    """k -> number of compositions of n with L = k."""
    histogram = Counter(longest_run(c) for c in enumerate_all(n, cap))
    logger.debug("brute-force histogram for n=%d: %s", n, dict(histogram))
    return dict(sorted(histogram.items()))


def brute_cumulative(n: int, cap: Optional[int] = None) -> Dict[int, int]:
    """k -> number of compositions with L < k, for k = 1..n+1."""
    histogram = brute_distribution(n, cap)
    out = {}
    below = 0
    for k in range(1, n + 2):
        out[k] = below
        below += histogram.get(k, 0)
    return out
