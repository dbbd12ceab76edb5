from dataclasses import asdict, dataclass
from typing import Optional

from composition_runs.asymptotics import solve_rho
from composition_runs.commands.base import Command, expand_range


@dataclass
class RhoParams:
    # single k or 'lo..hi'
    k: str = "2..10"
    tol: Optional[float] = None


class RhoCommand(Command):

    name = "rho"
    columns = [
        "k",
        "rho",
        "first_order",
        "residual",
        "isolation_proven",
        "iterations",
        "first_iterate",
        "first_order_ratio",
        "bracket_lo",
        "bracket_hi",
    ]

    def run(self, **params):
        p = RhoParams(**params)
        p.k = str(p.k)
        tol = self.settings.tolerance if p.tol is None else p.tol
        rows = []
        for k in expand_range(p.k):
            pole = solve_rho(k, tol, self.settings.precision)
            rows.append({
                "k": k,
                "rho": pole.rho,
                "first_order": pole.first_order,
                "residual": pole.residual,
                "isolation_proven": pole.isolation_proven,
                "iterations": pole.iterations,
                "first_iterate": pole.first_iterate,
                "first_order_ratio": pole.first_order_ratio(),
                "bracket_lo": pole.bracket[0],
                "bracket_hi": pole.bracket[1],
            })
        return self._record(asdict(p), rows)
