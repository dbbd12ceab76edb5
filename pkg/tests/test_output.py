import json
from fractions import Fraction

import mpmath
import pandas as pd
import pytest

from composition_runs.commands import CommandRunner, emit, export_local, parse, validate_payload
from composition_runs.commands.output import OutputRecord, build_meta, format_value
from composition_runs.errors import ConfigError


@pytest.fixture
def record(command_config):
    return CommandRunner(command_config).run("exact", n=6)


@pytest.mark.parametrize("fmt", ["csv", "json"])
def test_round_trip(record, fmt):
    assert parse(emit(record, fmt), fmt) == record


def test_round_trip_keeps_empty_cells(command_config):
    record = CommandRunner(command_config).run("compare", n=8)
    back = parse(emit(record, "csv"), "csv")
    assert back == record
    assert back.rows.loc[0, "residue_based"] == ""


def test_csv_header(record):
    lines = emit(record, "csv").splitlines()
    assert lines[0] == '# schema: "composition-runs/v1"'
    assert lines[1] == '# command: "exact"'
    assert lines[4] == "n,k,count,pmf,cdf,pmf_exact,cdf_exact"


def test_json_validates(record):
    payload = json.loads(emit(record, "json"))
    validate_payload(payload)
    assert payload["meta"]["timestamp"] is None


def test_schema_rejects_bad_payload(record):
    payload = json.loads(emit(record, "json"))
    payload["schema"] = "composition-runs/v0"
    with pytest.raises(ConfigError):
        validate_payload(payload)
    del payload["rows"]
    with pytest.raises(ConfigError):
        validate_payload(payload)


def test_missing_header_lines():
    with pytest.raises(ConfigError):
        parse("k,count\n1,1\n", "csv")


def test_unknown_format(record):
    with pytest.raises(ConfigError):
        emit(record, "xml")


def test_format_value():
    assert format_value(Fraction(1, 2), 30) == "1/2"
    assert format_value(True, 30) == "true"
    assert format_value(None, 30) == ""
    assert format_value(7, 30) == "7"
    assert format_value(0.5, 30) == "0.5"
    assert format_value(mpmath.mpf(1), 30) == "1.0"


def test_timestamp_from_source_date_epoch():
    assert build_meta(50, {"SOURCE_DATE_EPOCH": "0"})["timestamp"] == "1970-01-01T00:00:00+00:00"
    assert build_meta(50, {})["timestamp"] is None


def test_export_local(record, tmp_path):
    path = export_local(record, "json", output_dir=str(tmp_path / "out"))
    assert path.name == "exact.json"
    assert parse(path.read_text(), "json") == record


def test_equality_sees_cells():
    rows = pd.DataFrame([["1"]], columns=["k"], dtype=str)
    a = OutputRecord("exact", {}, rows, {})
    b = OutputRecord("exact", {}, rows.replace("1", "2"), {})
    assert a != b
