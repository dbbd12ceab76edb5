"""
OutputRecord: what every subcommand returns, and its CSV / JSON forms.

CSV layout::

    # schema: "composition-runs/v1"
    # command: "exact"
    # params: {...}
    # meta: {...}
    k,count,pmf,...
    1,1,0.5,...

Header values are JSON. Table cells are strings already formatted by the
command, so parse(emit(record)) reproduces the record exactly.
"""
import io
import json
import logging
import os
from dataclasses import dataclass, field
from datetime import datetime, timezone
from fractions import Fraction
from importlib import resources
from pathlib import Path
from typing import Any, Dict, Optional

import mpmath
import numpy as np
import pandas as pd

from composition_runs import SCHEMA_ID, TOOL_NAME, __version__
from composition_runs.errors import ConfigError

logger = logging.getLogger(__name__)

FORMATS = ("csv", "json")
HEADER_KEYS = ("schema", "command", "params", "meta")


def format_value(value: Any, digits: int) -> str:
    """Render one cell with explicit precision and no locale."""
    if value is None:
        return ""
    if isinstance(value, (bool, np.bool_)):
        return "true" if value else "false"
    if isinstance(value, (int, np.integer)):
        return str(int(value))
    if isinstance(value, Fraction):
        return str(value)
    if isinstance(value, mpmath.mpf):
        return mpmath.nstr(value, digits)
    if isinstance(value, (float, np.floating)):
        if np.isnan(value):
            return ""
        return mpmath.nstr(mpmath.mpf(float(value)), min(digits, 17))
    return str(value)


def build_meta(precision: int, environ: Optional[Dict[str, str]] = None) -> Dict[str, Any]:
    environ = os.environ if environ is None else environ
    stamp = environ.get("SOURCE_DATE_EPOCH")
    timestamp = None
    if stamp:
        timestamp = datetime.fromtimestamp(int(stamp), tz=timezone.utc).isoformat()
    return {"tool": TOOL_NAME, "version": __version__, "precision": precision, "timestamp": timestamp}


@dataclass
class OutputRecord:
    command: str
    params: Dict[str, Any]
    rows: pd.DataFrame
    meta: Dict[str, Any] = field(default_factory=dict)
    schema: str = SCHEMA_ID

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, OutputRecord):
            return NotImplemented
        return (
            self.schema == other.schema
            and self.command == other.command
            and self.params == other.params
            and self.meta == other.meta
            and list(self.rows.columns) == list(other.rows.columns)
            and self.rows.astype(str).values.tolist() == other.rows.astype(str).values.tolist()
        )


def _dumps(value: Any) -> str:
    return json.dumps(value, sort_keys=True, separators=(",", ":"))


def to_csv(record: OutputRecord) -> str:
    header = "".join(f"# {key}: {_dumps(getattr(record, key))}\n" for key in HEADER_KEYS)
    return header + record.rows.to_csv(index=False, lineterminator="\n")


def to_json(record: OutputRecord) -> str:
    payload = {
        "schema": record.schema,
        "command": record.command,
        "params": record.params,
        "meta": record.meta,
        "columns": list(record.rows.columns),
        "rows": record.rows.astype(str).values.tolist(),
    }
    return json.dumps(payload, indent=2, sort_keys=True) + "\n"


def emit(record: OutputRecord, fmt: str = "csv") -> str:
    if fmt == "csv":
        return to_csv(record)
    if fmt == "json":
        return to_json(record)
    raise ConfigError(f"unknown output format {fmt!r}; choose one of {FORMATS}")


def _from_csv(text: str) -> OutputRecord:
    header: Dict[str, Any] = {}
    lines = text.splitlines(keepends=True)
    body_start = 0
    for i, line in enumerate(lines):
        if not line.startswith("# "):
            body_start = i
            break
        key, _, raw = line[2:].partition(": ")
        header[key] = json.loads(raw)
    else:
        body_start = len(lines)
    missing = [k for k in HEADER_KEYS if k not in header]
    if missing:
        raise ConfigError(f"CSV record is missing header lines: {missing}")
    body = "".join(lines[body_start:])
    rows = pd.read_csv(io.StringIO(body), dtype=str, keep_default_na=False) if body else pd.DataFrame()
    return OutputRecord(
        command=header["command"],
        params=header["params"],
        rows=rows,
        meta=header["meta"],
        schema=header["schema"],
    )


def _from_json(text: str) -> OutputRecord:
    payload = json.loads(text)
    validate_payload(payload)
    rows = pd.DataFrame(payload["rows"], columns=payload["columns"], dtype=str)
    return OutputRecord(
        command=payload["command"],
        params=payload["params"],
        rows=rows,
        meta=payload["meta"],
        schema=payload["schema"],
    )


def parse(text: str, fmt: str = "csv") -> OutputRecord:
    if fmt == "csv":
        return _from_csv(text)
    if fmt == "json":
        return _from_json(text)
    raise ConfigError(f"unknown output format {fmt!r}; choose one of {FORMATS}")


def load_schema() -> Dict[str, Any]:
    text = resources.files("composition_runs").joinpath("schema/composition-runs-v1.json").read_text("utf-8")
    return json.loads(text)


_JSON_TYPES = {
    "string": str,
    "object": dict,
    "array": list,
    "integer": int,
}


def validate_payload(payload: Dict[str, Any], schema: Optional[Dict[str, Any]] = None):
    """Structural check of a JSON record against the shipped schema."""
    schema = schema or load_schema()
    missing = [k for k in schema["required"] if k not in payload]
    if missing:
        raise ConfigError(f"record is missing keys: {missing}")
    for key, spec in schema["properties"].items():
        if key not in payload:
            continue
        expected = _JSON_TYPES.get(spec.get("type"))
        if expected and not isinstance(payload[key], expected):
            raise ConfigError(f"record key {key!r} should be {spec['type']}")
        if "const" in spec and payload[key] != spec["const"]:
            raise ConfigError(f"record key {key!r} must be {spec['const']!r} (got {payload[key]!r})")
        if "enum" in spec and payload[key] not in spec["enum"]:
            raise ConfigError(f"record key {key!r} must be one of {spec['enum']} (got {payload[key]!r})")
    width = len(payload["columns"])
    for i, row in enumerate(payload["rows"]):
        if len(row) != width or not all(isinstance(cell, str) for cell in row):
            raise ConfigError(f"row {i} must hold {width} string cells")
    for key in schema["properties"]["meta"]["required"]:
        if key not in payload["meta"]:
            raise ConfigError(f"meta is missing {key!r}")


def export_local(record: OutputRecord, fmt: str = "csv", output_dir: str = "data/processed", filename: Optional[str] = None) -> Path:
    output_path = Path(output_dir)
    output_path.mkdir(parents=True, exist_ok=True)
    file_path = output_path / (filename or f"{record.command}.{fmt}")
    file_path.write_text(emit(record, fmt), encoding="utf-8")
    logger.info("saved %s", file_path)
    return file_path
