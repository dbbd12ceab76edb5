"""
Writes every figure / table dataset to data/processed/ as CSV records.

    python scripts/build_figure_data.py
"""
import logging

from composition_runs.commands import CommandConfig, CommandRunner, export_local
from composition_runs.config import load_settings

OUTPUT_DIR = "data/processed"

# filename -> (command, params)
DATASETS = {
    "exact_distributions.csv": ("exact", {"sweep": "20:500:20"}),
    "poles.csv": ("rho", {"k": "2..40"}),
    "compare_n500.csv": ("compare", {"n": 500}),
    "moments.csv": ("moments", {"n": [64, 128, 256, 512, 1024]}),
    "fluctuations.csv": ("moments", {"curves": True, "lo": 10.0, "hi": 12.0, "step": 0.01}),
    "single_compositions.csv": ("simulate", {"n": 100_000, "seed": "1..4", "single": True}),
    "run_means.csv": ("simulate", {"n": 100_000, "trials": 200, "seed": "1"}),
    "rouche.csv": ("rouche", {"k": "4..20"}),
}


def main():
    logging.basicConfig(level=logging.INFO, format="%(asctime)s %(levelname)s %(name)s: %(message)s")

    # 1. settings from the environment (COMPOSITION_RUNS_*)
    runner = CommandRunner(CommandConfig(settings=load_settings()))

    # 2. build and save each dataset
    for filename, (command, params) in DATASETS.items():
        record = runner.run(command, **params)
        export_local(record, "csv", output_dir=OUTPUT_DIR, filename=filename)
        print(f"{filename}: {len(record.rows)} rows")


if __name__ == "__main__":
    main()
