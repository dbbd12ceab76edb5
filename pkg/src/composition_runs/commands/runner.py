import logging
from typing import Any, Dict, Optional, Type

from composition_runs.commands.base import Command, CommandConfig
from composition_runs.commands.compare import CompareCommand
from composition_runs.commands.exact import ExactCommand
from composition_runs.commands.moments import MomentsCommand
from composition_runs.commands.output import OutputRecord
from composition_runs.commands.rho import RhoCommand
from composition_runs.commands.rouche import RoucheCommand
from composition_runs.commands.simulate import SimulateCommand
from composition_runs.errors import ConfigError

logger = logging.getLogger(__name__)

COMMANDS: Dict[str, Type[Command]] = {
    cls.name: cls
    for cls in (ExactCommand, RhoCommand, CompareCommand, MomentsCommand, SimulateCommand, RoucheCommand)
}


class CommandRunner:

    def __init__(self, command_config: Optional[CommandConfig] = None):

        self.cfg = command_config or CommandConfig()
        self.commands = {name: cls(self.cfg) for name, cls in COMMANDS.items()}

    def run(self, name: str, **params: Any) -> OutputRecord:

        if name not in self.commands:
            raise ConfigError(f"unknown command {name!r}; choose one of {sorted(self.commands)}")
        logger.debug("running %s with %s", name, params)
        return self.commands[name].run(**params)


def cmd_exact(n: int, k_max: Optional[int] = None, config: Optional[CommandConfig] = None, **extra) -> OutputRecord:
    return CommandRunner(config).run("exact", n=n, k_max=k_max, **extra)


def cmd_rho(k_range: str = "2..10", tol: Optional[float] = None, config: Optional[CommandConfig] = None) -> OutputRecord:
    return CommandRunner(config).run("rho", k=k_range, tol=tol)


def cmd_compare(n: int, config: Optional[CommandConfig] = None, **extra) -> OutputRecord:
    return CommandRunner(config).run("compare", n=n, **extra)


def cmd_moments(n_list, terms: Optional[int] = None, config: Optional[CommandConfig] = None, **extra) -> OutputRecord:
    return CommandRunner(config).run("moments", n=list(n_list), terms=terms, **extra)


def cmd_simulate(
    n: int,
    trials: int,
    seed,
    r_max: Optional[int] = None,
    mode: str = "aggregate",
    config: Optional[CommandConfig] = None,
) -> OutputRecord:
    if mode not in ("aggregate", "single"):
        raise ConfigError(f"mode must be 'aggregate' or 'single' (got {mode!r})")
    return CommandRunner(config).run(
        "simulate", n=n, trials=trials, seed=str(seed), r_max=r_max, single=mode == "single"
    )


def cmd_rouche(k, samples: int = 4096, config: Optional[CommandConfig] = None) -> OutputRecord:
    return CommandRunner(config).run("rouche", k=str(k), samples=samples)
