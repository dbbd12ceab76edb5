from composition_runs.series.truncated import (
    TruncatedSeries,
    denominator_series,
    run_series,
    series_reciprocal,
)
from composition_runs.series.counts import (
    ExactDistribution,
    RunCountTable,
    count_table,
    exact_cdf,
    exact_distribution,
    exact_moments,
    exact_moments_fraction,
    run_count,
)

__all__ = [
    "TruncatedSeries",
    "denominator_series",
    "run_series",
    "series_reciprocal",
    "ExactDistribution",
    "RunCountTable",
    "count_table",
    "exact_cdf",
    "exact_distribution",
    "exact_moments",
    "exact_moments_fraction",
    "run_count",
]
