"""
Exception hierarchy. Every error carries a stable ``code`` that the CLI
prints as ``error[<code>]``.
"""


class CompositionRunsError(ValueError):
    code: str = "error"


class DegenerateRunBound(CompositionRunsError):
    code = "degenerate_k"


class CapExceeded(CompositionRunsError):
    code = "cap_exceeded"

    def __init__(self, what: str, value: int, cap: int):
        self.value = value
        self.cap = cap
        super().__init__(f"{what} {value} exceeds the configured cap {cap}")


class InvalidSeries(CompositionRunsError):
    code = "invalid_series"


class DomainError(CompositionRunsError):
    code = "domain"


class ConvergenceError(CompositionRunsError):
    code = "no_convergence"


class IsolationRefused(CompositionRunsError):
    code = "rouche_refused"


class ConfigError(CompositionRunsError):
    code = "config"
