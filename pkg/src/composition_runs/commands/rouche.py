from dataclasses import asdict, dataclass

from composition_runs.asymptotics import rouche_witness
from composition_runs.commands.base import Command, expand_range


@dataclass
class RoucheParams:
    k: str = "4"
    samples: int = 4096


class RoucheCommand(Command):
    """|g| against |f| on the circle |z| = 3/5."""

    name = "rouche"
    columns = [
        "k",
        "samples",
        "max_g_sampled",
        "analytic_g_bound",
        "tail_bound",
        "min_f_sampled",
        "analytic_f_bound",
        "verdict",
    ]

    def run(self, **params):
        p = RoucheParams(**params)
        p.k = str(p.k)
        rows = []
        for k in expand_range(p.k):
            w = rouche_witness(k, p.samples)
            rows.append({
                "k": k,
                "samples": w.samples,
                "max_g_sampled": w.max_g,
                "analytic_g_bound": w.analytic_g_bound,
                "tail_bound": w.tail_bound,
                "min_f_sampled": w.min_f,
                "analytic_f_bound": w.analytic_f_bound,
                "verdict": w.verdict,
            })
        return self._record(asdict(p), rows)
