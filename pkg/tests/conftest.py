import pytest

from composition_runs.cli import main
from composition_runs.commands import CommandConfig, parse
from composition_runs.config import Settings


@pytest.fixture
def command_config():
    return CommandConfig(settings=Settings(), environ={})


@pytest.fixture
def run_cli(capsys, monkeypatch):
    monkeypatch.delenv("SOURCE_DATE_EPOCH", raising=False)
    for suffix in ("PRECISION", "ENUM_CAP", "SERIES_CAP"):
        monkeypatch.delenv(f"COMPOSITION_RUNS_{suffix}", raising=False)

    def _run(*argv):
        code = main(list(argv))
        captured = capsys.readouterr()
        return code, captured.out, captured.err

    return _run


@pytest.fixture
def cli_rows(run_cli):
    """Run a subcommand in CSV mode and hand back its parsed rows."""

    def _rows(*argv):
        code, out, err = run_cli(*argv)
        assert code == 0, err
        return parse(out, "csv").rows

    return _rows
