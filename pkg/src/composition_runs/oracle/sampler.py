"""
Seeded uniform sampling of compositions and Monte Carlo aggregation.

Uniformity comes from the bar-mask bijection: n-1 independent fair bits.
The generator is numpy's PCG64. Trials are cut into fixed-size blocks and
block b draws from the substream SeedSequence(seed, spawn_key=(b,)), so the
report does not depend on how blocks are spread over workers.
"""
import logging
import math
from dataclasses import dataclass, field
from multiprocessing import Pool
from typing import Dict, Iterable, List, Optional, Tuple

import mpmath
import numpy as np
import pandas as pd

from composition_runs.errors import DomainError
from composition_runs.oracle.compositions import Composition

logger = logging.getLogger(__name__)

SEED_LIMIT = 2**64


def substream(seed: int, index: int) -> np.random.Generator:
    if not 0 <= seed < SEED_LIMIT:
        raise DomainError(f"seed must be a 64-bit nonnegative integer (got {seed})")
    return np.random.Generator(np.random.PCG64(np.random.SeedSequence(seed, spawn_key=(index,))))


def default_r_max(n: int) -> int:
    """ceil(2 lg n) + 2; parts beyond this almost surely never occur."""
    return math.ceil(2 * math.log2(n)) + 2 if n > 1 else 3


def _sample_parts(n: int, rng: np.random.Generator) -> np.ndarray:
    bits = rng.integers(0, 2, size=n - 1, dtype=np.int8)
    cuts = np.concatenate(([0], np.flatnonzero(bits) + 1, [n]))
    return np.diff(cuts)


def sample_composition(n: int, rng: np.random.Generator) -> Composition:
    if n < 1:
        raise DomainError(f"composition size n must be >= 1 (got {n})")
    return Composition(tuple(int(p) for p in _sample_parts(n, rng)))


def _profile(parts: np.ndarray) -> Tuple[int, np.ndarray]:
    """(longest run, array indexed by part value of the longest run of that value)."""
    starts = np.concatenate(([0], np.flatnonzero(parts[1:] != parts[:-1]) + 1))
    lengths = np.diff(np.concatenate((starts, [len(parts)])))
    values = parts[starts]
    per_value = np.zeros(int(values.max()) + 1, dtype=np.int64)
    np.maximum.at(per_value, values, lengths)
    return int(lengths.max()), per_value


@dataclass(frozen=True)
class SimulationReport:
    n: int
    trials: int
    seed: int
    r_max: int
    longest_run_mean: float
    per_value_runs: Dict[int, float]
    largest_part_mean: float
    # standard deviation of L across trials, for tolerance checks
    longest_run_std: float = field(default=0.0)

    def to_frame(self) -> pd.DataFrame:
        rows = [{"statistic": "L", "r": 0, "mean": self.longest_run_mean}]
        rows += [
            {"statistic": "L_r", "r": r, "mean": m} for r, m in self.per_value_runs.items()
        ]
        rows.append({"statistic": "largest_part", "r": 0, "mean": self.largest_part_mean})
        return pd.DataFrame(rows, columns=["statistic", "r", "mean"])


@dataclass
class _BlockTotals:
    trials: int = 0
    longest: int = 0
    longest_sq: int = 0
    largest_part: int = 0
    per_value: List[int] = field(default_factory=list)

    def merge(self, other: "_BlockTotals"):
        self.trials += other.trials
        self.longest += other.longest
        self.longest_sq += other.longest_sq
        self.largest_part += other.largest_part
        if not self.per_value:
            self.per_value = [0] * len(other.per_value)
        for r, v in enumerate(other.per_value):
            self.per_value[r] += v


def _run_block(args: Tuple[int, int, int, int, int]) -> _BlockTotals:
    n, seed, block, count, r_max = args
    rng = substream(seed, block)
    totals = _BlockTotals(per_value=[0] * (r_max + 1))
    for _ in range(count):
        parts = _sample_parts(n, rng)
        longest, per_value = _profile(parts)
        totals.trials += 1
        totals.longest += longest
        totals.longest_sq += longest * longest
        totals.largest_part += int(parts.max())
        upto = min(len(per_value), r_max + 1)
        for r in range(1, upto):
            totals.per_value[r] += int(per_value[r])
    return totals


def simulate(
    n: int,
    trials: int,
    seed: int,
    r_max: Optional[int] = None,
    workers: int = 1,
    block_size: int = 64,
) -> SimulationReport:
    """
    Monte Carlo estimate of E_n(L), E_n(L_r) for r = 1..r_max and the mean
    largest part, over ``trials`` uniform compositions of n.
    """
    if n < 1:
        raise DomainError(f"composition size n must be >= 1 (got {n})")
    if trials < 1:
        raise DomainError(f"trials must be >= 1 (got {trials})")
    r_max = default_r_max(n) if r_max is None else r_max
    if r_max < 1:
        raise DomainError(f"r_max must be >= 1 (got {r_max})")

    jobs = []
    for block, start in enumerate(range(0, trials, block_size)):
        jobs.append((n, seed, block, min(block_size, trials - start), r_max))

    totals = _BlockTotals(per_value=[0] * (r_max + 1))
    if workers > 1 and len(jobs) > 1:
        with Pool(processes=workers) as pool:
            for part in pool.imap(_run_block, jobs):
                totals.merge(part)
    else:
        for job in jobs:
            totals.merge(_run_block(job))
            logger.debug("block %d done", job[2])
    logger.info("simulated %d compositions of size %d (seed=%d)", trials, n, seed)

    mean = totals.longest / trials
    variance = max(totals.longest_sq / trials - mean * mean, 0.0)
    return SimulationReport(
        n=n,
        trials=trials,
        seed=seed,
        r_max=r_max,
        longest_run_mean=mean,
        per_value_runs={r: totals.per_value[r] / trials for r in range(1, r_max + 1)},
        largest_part_mean=totals.largest_part / trials,
        longest_run_std=math.sqrt(variance),
    )


def single_profiles(n: int, seeds: Iterable[int], r_max: Optional[int] = None) -> pd.DataFrame:
    """
    One composition per seed and its (r, L_r) profile for r = 1..r_max.
    """
    r_max = default_r_max(n) if r_max is None else r_max
    rows = []
    for seed in seeds:
        parts = _sample_parts(n, substream(seed, 0))
        _, per_value = _profile(parts)
        for r in range(1, r_max + 1):
            rows.append({
                "seed": seed,
                "r": r,
                "L_r": int(per_value[r]) if r < len(per_value) else 0,
            })
    return pd.DataFrame(rows, columns=["seed", "r", "L_r"])


def chi_square_uniformity(counts: np.ndarray) -> Tuple[float, float]:
    """Pearson statistic against the uniform law and its upper-tail p-value."""
    counts = np.asarray(counts, dtype=float)
    expected = counts.sum() / len(counts)
    statistic = float(((counts - expected) ** 2 / expected).sum())
    dof = len(counts) - 1
    p_value = mpmath.gammainc(mpmath.mpf(dof) / 2, statistic / 2, mpmath.inf, regularized=True)
    return statistic, float(p_value)
