from composition_runs.asymptotics.pole import (
    PoleEstimate,
    RoucheWitness,
    TailBoundedSum,
    first_iterate,
    first_order_estimate,
    g_eval,
    residue_count,
    residue_leading_form,
    rouche_witness,
    solve_rho,
)
from composition_runs.asymptotics.law import (
    AsymptoticLaw,
    Region,
    central_window,
    classify,
    exact_law_probability,
    law_probability,
    law_probability_h,
    omega,
    residue_probability,
)
from composition_runs.asymptotics.harmonic import (
    GammaCheck,
    MomentReport,
    RunPrediction,
    direct_fluctuations,
    expected_run_of_r,
    fluctuation_curves,
    fourier_P,
    fourier_Q,
    gamma_check,
    mean_constant,
    mean_fluctuation,
    moment_report,
    phi,
    psi_big,
    variance_constant,
    variance_fluctuation,
)

__all__ = [
    "PoleEstimate",
    "RoucheWitness",
    "TailBoundedSum",
    "first_iterate",
    "first_order_estimate",
    "g_eval",
    "residue_count",
    "residue_leading_form",
    "rouche_witness",
    "solve_rho",
    "AsymptoticLaw",
    "Region",
    "central_window",
    "classify",
    "exact_law_probability",
    "law_probability",
    "law_probability_h",
    "omega",
    "residue_probability",
    "GammaCheck",
    "MomentReport",
    "RunPrediction",
    "direct_fluctuations",
    "expected_run_of_r",
    "fluctuation_curves",
    "fourier_P",
    "fourier_Q",
    "gamma_check",
    "mean_constant",
    "mean_fluctuation",
    "moment_report",
    "phi",
    "psi_big",
    "variance_constant",
    "variance_fluctuation",
]
