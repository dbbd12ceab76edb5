from composition_runs.oracle.compositions import (
    Composition,
    brute_cumulative,
    brute_distribution,
    enumerate_all,
    longest_run,
    longest_run_of,
    run_profile,
    runs,
)
from composition_runs.oracle.sampler import (
    SimulationReport,
    chi_square_uniformity,
    default_r_max,
    sample_composition,
    simulate,
    single_profiles,
    substream,
)

__all__ = [
    "Composition",
    "brute_cumulative",
    "brute_distribution",
    "enumerate_all",
    "longest_run",
    "longest_run_of",
    "run_profile",
    "runs",
    "SimulationReport",
    "chi_square_uniformity",
    "default_r_max",
    "sample_composition",
    "simulate",
    "single_profiles",
    "substream",
]
