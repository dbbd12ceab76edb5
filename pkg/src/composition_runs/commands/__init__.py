from composition_runs.commands.base import Command, CommandConfig, expand_range, parse_sweep
from composition_runs.commands.output import OutputRecord, emit, export_local, parse, validate_payload
from composition_runs.commands.runner import (
    COMMANDS,
    CommandRunner,
    cmd_compare,
    cmd_exact,
    cmd_moments,
    cmd_rho,
    cmd_rouche,
    cmd_simulate,
)

__all__ = [
    "Command",
    "CommandConfig",
    "expand_range",
    "parse_sweep",
    "OutputRecord",
    "emit",
    "export_local",
    "parse",
    "validate_payload",
    "COMMANDS",
    "CommandRunner",
    "cmd_compare",
    "cmd_exact",
    "cmd_moments",
    "cmd_rho",
    "cmd_rouche",
    "cmd_simulate",
]
