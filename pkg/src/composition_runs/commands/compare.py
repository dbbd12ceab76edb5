import logging
import math
from dataclasses import asdict, dataclass
from typing import Optional

import mpmath

from composition_runs.asymptotics import law_probability, residue_probability, solve_rho
from composition_runs.commands.base import Command
from composition_runs.commands.exact import to_decimal
from composition_runs.errors import DomainError
from composition_runs.series import exact_cdf

logger = logging.getLogger(__name__)


@dataclass
class CompareParams:
    n: int = 500
    # defaults to ceil(2 lg n) + 4, past which every column is 1 to working precision
    k_max: Optional[int] = None


def default_k_max(n: int) -> int:
    return min(n + 1, math.ceil(2 * math.log2(n)) + 4)


class CompareCommand(Command):
    """P_n(L < k): exact, double exponential and residue based, side by side."""

    name = "compare"
    columns = ["k", "region", "exact", "double_exponential", "residue_based", "abs_err", "residue_abs_err"]

    def run(self, **params):
        p = CompareParams(**params)
        if p.n < 2:
            raise DomainError(f"compare needs n >= 2 (got {p.n})")
        self._check_series_cap(p.n)
        k_max = default_k_max(p.n) if p.k_max is None else p.k_max
        if k_max < 1:
            raise DomainError(f"k_max must be >= 1 (got {k_max})")
        precision = self.settings.precision

        exact = exact_cdf(p.n, range(1, k_max + 1))
        rows = []
        with mpmath.workdps(precision):
            for k, q in exact.items():
                law = law_probability(p.n, k, precision)
                value = to_decimal(q)
                residue = None
                if k >= 2:
                    pole = solve_rho(k, self.settings.tolerance, precision)
                    residue = residue_probability(p.n, k, pole)
                rows.append({
                    "k": k,
                    "region": law.region.value,
                    "exact": value,
                    "double_exponential": law.probability,
                    "residue_based": residue,
                    "abs_err": abs(value - law.probability),
                    "residue_abs_err": None if residue is None else abs(value - residue),
                })
        logger.info("compare: n=%d over k=1..%d", p.n, k_max)
        return self._record(asdict(p), rows)
