from abc import ABC, abstractmethod
from dataclasses import dataclass, field
from typing import Any, Dict, Iterable, List, Optional

import pandas as pd

from composition_runs.commands.output import OutputRecord, build_meta, format_value
from composition_runs.config import Settings
from composition_runs.errors import CapExceeded, ConfigError


@dataclass
class CommandConfig:

    settings: Settings = field(default_factory=Settings)
    # significant digits for high-precision columns
    digits: int = 30
    environ: Optional[Dict[str, str]] = None


class Command(ABC):
    """
    Base interface for all subcommands.
    Each command takes its parameters and returns an OutputRecord whose
    rows carry exactly ``columns``.
    """

    name: str = ""
    columns: list[str] = []

    def __init__(self, config: CommandConfig):
        self.config = config

    @property
    def settings(self) -> Settings:
        return self.config.settings

    def _validate_columns(self, df: pd.DataFrame, columns: List[str]):
        missing = [c for c in columns if c not in df.columns]
        if missing:
            raise ConfigError(
                f"Missing required columns: {missing}. "
                f"Available columns: {list(df.columns)}"
            )

    def _check_series_cap(self, n: int):
        if n > self.settings.series_cap:
            raise CapExceeded("series size n", n, self.settings.series_cap)

    def _record(
        self,
        params: Dict[str, Any],
        rows: Iterable[Dict[str, Any]] | pd.DataFrame,
        columns: Optional[List[str]] = None,
    ) -> OutputRecord:
        columns = columns or self.columns
        frame = rows if isinstance(rows, pd.DataFrame) else pd.DataFrame(list(rows), columns=columns)
        self._validate_columns(frame, columns)
        frame = frame[columns]
        digits = self.config.digits
        text = pd.DataFrame(
            [[format_value(v, digits) for v in row] for row in frame.itertuples(index=False, name=None)],
            columns=columns,
            dtype=str,
        )
        return OutputRecord(
            command=self.name,
            params=params,
            rows=text,
            meta=build_meta(self.settings.precision, self.config.environ),
        )

    @abstractmethod
    def run(self, **params: Any) -> OutputRecord:
        """
        Main entry point. Subclasses implement their own logic.
        """
        raise NotImplementedError


def expand_range(spec: str | int | List[int]) -> List[int]:
    """'2..10' -> [2, ..., 10]; '5' -> [5]; lists and ints pass through."""
    if isinstance(spec, int):
        return [spec]
    if isinstance(spec, list):
        return [int(v) for v in spec]
    text = str(spec).strip()
    try:
        if ".." in text:
            lo, hi = (int(part) for part in text.split(".."))
            if hi < lo:
                raise ValueError
            return list(range(lo, hi + 1))
        return [int(text)]
    except ValueError:
        raise ConfigError(f"expected an integer or a range 'lo..hi' (got {spec!r})") from None


def parse_sweep(spec: str) -> List[int]:
    """'start:end:step' with end included, positive values only."""
    try:
        a, b, c = (int(x) for x in spec.split(":"))
        if c == 0:
            raise ValueError
        out = [v for v in range(a, b + (1 if c > 0 else -1), c) if v > 0]
        if not out:
            raise ValueError
        return out
    except ValueError:
        raise ConfigError(f"sweep must be 'start:end:step' (got {spec!r})") from None
