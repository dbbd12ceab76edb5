from dataclasses import asdict, dataclass
from typing import Optional

import pandas as pd

from composition_runs.commands.base import Command, expand_range
from composition_runs.oracle import simulate, single_profiles

SINGLE_COLUMNS = ["seed", "r", "L_r"]


@dataclass
class SimulateParams:
    n: int = 100_000
    trials: int = 200
    # single seed or 'lo..hi'
    seed: str = "1"
    r_max: Optional[int] = None
    # one composition per seed instead of the aggregate report
    single: bool = False


class SimulateCommand(Command):

    name = "simulate"
    columns = ["seed", "statistic", "r", "mean"]

    def run(self, **params):
        p = SimulateParams(**params)
        p.seed = str(p.seed)
        seeds = expand_range(p.seed)

        if p.single:
            frame = single_profiles(p.n, seeds, p.r_max)
            return self._record(asdict(p), frame, SINGLE_COLUMNS)

        frames = []
        for seed in seeds:
            report = simulate(
                p.n,
                p.trials,
                seed,
                r_max=p.r_max,
                workers=self.settings.workers,
                block_size=self.settings.block_size,
            )
            frame = report.to_frame()
            extra = pd.DataFrame([{"statistic": "L_std", "r": 0, "mean": report.longest_run_std}])
            frame = pd.concat([frame, extra], ignore_index=True)
            frame.insert(0, "seed", seed)
            frames.append(frame)
        return self._record(asdict(p), pd.concat(frames, ignore_index=True))
