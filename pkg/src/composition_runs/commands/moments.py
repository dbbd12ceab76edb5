import logging
from dataclasses import asdict, dataclass, field
from typing import List, Optional

import mpmath

from composition_runs.asymptotics import fluctuation_curves, moment_report
from composition_runs.commands.base import Command
from composition_runs.series import exact_moments

logger = logging.getLogger(__name__)

CURVE_COLUMNS = ["lg_x", "mean_part", "variance_part", "P_direct", "P_fourier", "Q_direct", "Q_fourier"]


@dataclass
class MomentsParams:
    n: List[int] = field(default_factory=lambda: [1024])
    terms: Optional[int] = None
    # sweep lg x over [lo, hi] instead of tabulating n
    curves: bool = False
    lo: float = 10.0
    hi: float = 12.0
    step: float = 0.01


class MomentsCommand(Command):
    """Mean and variance of L: exact, harmonic-sum and asymptotic forms."""

    name = "moments"
    columns = ["n", "exact_mean", "phi_mean", "mean_asym", "exact_var", "var_asym", "P", "Q"]

    def run(self, **params):
        p = MomentsParams(**params)
        p.n = [int(v) for v in ([p.n] if isinstance(p.n, int) else p.n)]
        terms = p.terms or self.settings.fourier_terms
        precision = self.settings.precision

        if p.curves:
            frame = fluctuation_curves(p.lo, p.hi, p.step, terms, precision)
            return self._record(asdict(p), frame, CURVE_COLUMNS)

        for n in p.n:
            self._check_series_cap(n)
        rows = []
        with mpmath.workdps(precision):
            for n in p.n:
                report = moment_report(n, terms, precision)
                mean, var = exact_moments(n, precision)
                rows.append({
                    "n": n,
                    "exact_mean": mean,
                    "phi_mean": report.phi_mean,
                    "mean_asym": report.mean_asym,
                    "exact_var": var,
                    "var_asym": report.var_asym,
                    "P": report.fluctuation_P,
                    "Q": report.fluctuation_Q,
                })
                logger.info("moments: n=%d done", n)
        return self._record(asdict(p), rows)
