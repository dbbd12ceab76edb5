"""
composition-runs command line.

    composition-runs exact --n 20 --sweep 20:500:20
    composition-runs rho --k 2..10
    composition-runs compare --n 500 --format json
    composition-runs moments --n 64 128 256 1024
    composition-runs moments --curves --from 10 --to 12 --step 0.01
    composition-runs simulate --n 100000 --single --seed 1..4
    composition-runs rouche --k 4 --samples 4096

Data goes to stdout (or --output), logs and errors to stderr.
"""
import argparse
import logging
import sys
from pathlib import Path
from typing import Any, Dict, List, Optional

from composition_runs import TOOL_NAME, __version__
from composition_runs.commands import CommandConfig, CommandRunner, emit, export_local
from composition_runs.commands.output import FORMATS
from composition_runs.config import read_config_file, settings_from_env
from composition_runs.errors import CompositionRunsError

logger = logging.getLogger(__name__)

# subcommand -> parameter names forwarded to the command
PARAMS: Dict[str, List[str]] = {
    "exact": ["n", "k_max", "sweep"],
    "rho": ["k", "tol"],
    "compare": ["n", "k_max"],
    "moments": ["n", "terms", "curves", "lo", "hi", "step"],
    "simulate": ["n", "trials", "seed", "r_max", "single"],
    "rouche": ["k", "samples"],
}

# flags that feed Settings rather than the command
SETTINGS_FLAGS = ("precision", "workers")


def _common_options() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--format", choices=FORMATS, default=None, help="Output format (default csv).")
    common.add_argument("--output", default=None, help="Write the record to this file instead of stdout.")
    common.add_argument("--config", default=None, help="YAML file whose keys mirror the long flag names.")
    common.add_argument("--precision", type=int, default=None, help="Working precision in decimal digits.")
    common.add_argument("-v", "--verbose", action="count", default=0, help="-v for INFO, -vv for DEBUG logs.")
    return common


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog=TOOL_NAME,
        description="Longest runs of equal parts in random integer compositions.",
    )
    parser.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    sub = parser.add_subparsers(dest="command", required=True)
    common = _common_options()

    p_exact = sub.add_parser("exact", parents=[common], help="Exact distribution of L from the series")
    p_exact.add_argument("--n", type=int, default=None)
    p_exact.add_argument("--k-max", type=int, default=None, help="Only emit rows with k <= K_MAX.")
    p_exact.add_argument("--sweep", default=None, help="Sizes 'start:end:step', e.g. 20:500:20.")

    p_rho = sub.add_parser("rho", parents=[common], help="Dominant pole rho_k")
    p_rho.add_argument("--k", default=None, help="A run bound or a range 'lo..hi'.")
    p_rho.add_argument("--tol", type=float, default=None)

    p_compare = sub.add_parser("compare", parents=[common], help="Exact vs asymptotic P_n(L < k)")
    p_compare.add_argument("--n", type=int, default=None)
    p_compare.add_argument("--k-max", type=int, default=None)

    p_moments = sub.add_parser("moments", parents=[common], help="Mean and variance of L")
    p_moments.add_argument("--n", type=int, nargs="+", default=None)
    p_moments.add_argument("--terms", type=int, default=None, help="Fourier terms K.")
    p_moments.add_argument("--curves", "--figure2", dest="curves", action="store_true", default=None, help="Sweep lg x over one period.")
    p_moments.add_argument("--from", dest="lo", type=float, default=None)
    p_moments.add_argument("--to", dest="hi", type=float, default=None)
    p_moments.add_argument("--step", type=float, default=None)

    p_sim = sub.add_parser("simulate", parents=[common], help="Monte Carlo over uniform compositions")
    p_sim.add_argument("--n", type=int, default=None)
    p_sim.add_argument("--trials", type=int, default=None)
    p_sim.add_argument("--seed", default=None, help="A seed or a range 'lo..hi'.")
    p_sim.add_argument("--r-max", type=int, default=None)
    p_sim.add_argument("--single", action="store_true", default=None, help="One (r, L_r) profile per seed.")
    p_sim.add_argument("--workers", type=int, default=None)

    p_rouche = sub.add_parser("rouche", parents=[common], help="Pole isolation witness on |z| = 3/5")
    p_rouche.add_argument("--k", default=None)
    p_rouche.add_argument("--samples", type=int, default=None)

    return parser


def _configure_logging(verbosity: int):
    level = logging.WARNING
    if verbosity == 1:
        level = logging.INFO
    elif verbosity >= 2:
        level = logging.DEBUG
    logging.basicConfig(
        level=level,
        format="%(asctime)s %(levelname)s %(name)s: %(message)s",
        stream=sys.stderr,
        force=True,
    )


def _merge(names: List[str], args: argparse.Namespace, file_values: Dict[str, Any]) -> Dict[str, Any]:
    """Flags win over the config file; anything unset falls to the command defaults."""
    merged = {}
    for name in names:
        value = getattr(args, name, None)
        if value is None:
            value = file_values.get(name)
        if value is not None:
            merged[name] = value
    return merged


def main(argv: Optional[List[str]] = None) -> int:
    args = build_parser().parse_args(argv)
    _configure_logging(args.verbose)

    try:
        file_values = read_config_file(args.config) if args.config else {}
        settings = settings_from_env().updated(file_values).updated(_merge(list(SETTINGS_FLAGS), args, {}))
        params = _merge(PARAMS[args.command], args, file_values)
        fmt = args.format or file_values.get("format") or "csv"

        record = CommandRunner(CommandConfig(settings=settings)).run(args.command, **params)
        if args.output:
            path = Path(args.output)
            export_local(record, fmt, output_dir=str(path.parent), filename=path.name)
        else:
            sys.stdout.write(emit(record, fmt))
    except CompositionRunsError as exc:
        print(f"{TOOL_NAME}: error[{exc.code}]: {exc}", file=sys.stderr)
        return 1
    return 0


if __name__ == "__main__":
    sys.exit(main())
