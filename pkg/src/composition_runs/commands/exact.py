import logging
from dataclasses import asdict, dataclass
from fractions import Fraction
from typing import Optional

import mpmath

from composition_runs.commands.base import Command, parse_sweep
from composition_runs.commands.output import OutputRecord
from composition_runs.series import count_table

logger = logging.getLogger(__name__)


@dataclass
class ExactParams:
    n: int = 10
    # rows are cut at k <= k_max
    k_max: Optional[int] = None
    # 'start:end:step'; replaces n with the swept sizes
    sweep: Optional[str] = None


def to_decimal(q: Fraction) -> mpmath.mpf:
    return mpmath.mpf(q.numerator) / q.denominator


class ExactCommand(Command):
    """Exact pmf and cdf of L, one row per (n, k)."""

    name = "exact"
    columns = ["n", "k", "count", "pmf", "cdf", "pmf_exact", "cdf_exact"]

    def run(self, **params) -> OutputRecord:
        p = ExactParams(**params)
        sizes = parse_sweep(p.sweep) if p.sweep else [p.n]
        for n in sizes:
            self._check_series_cap(n)

        rows = []
        with mpmath.workdps(self.settings.precision):
            for n in sizes:
                frame = count_table(n).to_frame()
                if p.k_max is not None:
                    frame = frame[frame["k"] <= p.k_max]
                for k, count, pmf, cdf in frame.itertuples(index=False, name=None):
                    rows.append({
                        "n": n,
                        "k": k,
                        "count": count,
                        "pmf": to_decimal(pmf),
                        "cdf": to_decimal(cdf),
                        "pmf_exact": pmf,
                        "cdf_exact": cdf,
                    })
        logger.info("exact: %d rows over %d sizes", len(rows), len(sizes))
        return self._record(asdict(p), rows)
