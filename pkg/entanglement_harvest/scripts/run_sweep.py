"""
Script to run a parameter sweep from flags and an optional config file.
"""
import argparse
import logging
import sys
from dataclasses import dataclass
from typing import Dict, List, Optional, Sequence

from entanglement_harvest.errors import ConfigurationError
from entanglement_harvest.sweeps import SweepSpec, SweepTable, emit, parse_axis, parse_overlay, run_sweep
from entanglement_harvest.sweeps.emit import FORMATS
from entanglement_harvest.utils import configure_logging, load_config, parse_assignment, thread_count

logger = logging.getLogger(__name__)

EXIT_OK = 0
EXIT_FLAGGED = 1
EXIT_CONFIG = 2

# config keys that are options rather than scenario parameters
OPTION_KEYS = ("scenario", "axis", "overlay", "tol", "audit", "format", "out", "mass-planck", "threads")
TRUE_WORDS = ("1", "true", "yes", "on")
FALSE_WORDS = ("0", "false", "no", "off")


@dataclass
class OutputOptions:
    """
    Where and how a finished table is written.

    Attributes:
        fmt (str): csv or json
        out (Optional[str]): Destination path, stdout when None
        mass_planck (Optional[float]): Detector mass for coupling rescaling
        threads (Optional[int]): Row parallelism
    """
    fmt: str = "csv"
    out: Optional[str] = None
    mass_planck: Optional[float] = None
    threads: Optional[int] = None


def add_common_arguments(parser: argparse.ArgumentParser) -> None:
    """Options shared by sweep and preset."""
    parser.add_argument("--tol", type=str, default=None, help="relative tolerance (default 1e-8)")
    parser.add_argument("--audit", action="store_true", default=None,
                        help="also evaluate the momentum-space oracle per row")
    parser.add_argument("--format", choices=FORMATS, default=None, help="output format (default csv)")
    parser.add_argument("--out", default=None, help="output path, '-' for stdout")
    parser.add_argument("--mass-planck", dest="mass_planck", default=None,
                        help="detector mass in Planck units; rescales L and M")
    parser.add_argument("--threads", default=None, help="worker threads (default HARVEST_THREADS)")
    parser.add_argument("-v", "--verbose", action="count", default=0, help="more logging")
    parser.add_argument("-q", "--quiet", action="store_true", help="warnings only")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="harvest sweep", description="Run a negativity sweep.")
    parser.add_argument("--config", default=None, help="key = value configuration file")
    parser.add_argument("--scenario", default=None, help="scenario identifier")
    parser.add_argument("--set", dest="assignments", action="append", default=[], metavar="KEY=VALUE",
                        help="fix a scenario parameter (repeatable)")
    parser.add_argument("--axis", default=None, metavar="NAME:START:STOP:COUNT[:log]")
    parser.add_argument("--overlay", action="append", default=[], metavar="NAME=V1,V2,...")
    add_common_arguments(parser)
    return parser


def as_float(text: str, what: str) -> float:
    try:
        return float(text)
    except ValueError:
        raise ConfigurationError(f"{what} must be a number, got {text!r}") from None


def _int(text: str, what: str) -> int:
    try:
        value = int(text)
    except ValueError:
        raise ConfigurationError(f"{what} must be an integer, got {text!r}") from None
    if value < 1:
        raise ConfigurationError(f"{what} must be positive, got {value}")
    return value


def _flag(text: str, what: str) -> bool:
    word = text.strip().lower()
    if word in TRUE_WORDS:
        return True
    if word in FALSE_WORDS:
        return False
    raise ConfigurationError(f"{what} must be a boolean, got {text!r}")


def _last(entries: Dict[str, List[str]], key: str) -> Optional[str]:
    values = entries.get(key)
    return values[-1] if values else None


def merge_options(args: argparse.Namespace, entries: Dict[str, List[str]]) -> OutputOptions:
    """Output options from flags, falling back to config entries."""
    fmt = args.format or _last(entries, "format") or "csv"
    if fmt not in FORMATS:
        raise ConfigurationError(f"format must be one of {FORMATS}, got {fmt!r}")
    mass = args.mass_planck if args.mass_planck is not None else _last(entries, "mass-planck")
    threads = args.threads if args.threads is not None else _last(entries, "threads")
    return OutputOptions(
        fmt=fmt,
        out=args.out if args.out is not None else _last(entries, "out"),
        mass_planck=None if mass is None else as_float(mass, "mass-planck"),
        threads=None if threads is None else _int(threads, "threads"),
    )


def merge_tolerance(args: argparse.Namespace, entries: Dict[str, List[str]], default: float) -> float:
    text = args.tol if args.tol is not None else _last(entries, "tol")
    return default if text is None else as_float(text, "tol")


def merge_audit(args: argparse.Namespace, entries: Dict[str, List[str]], default: bool) -> bool:
    if args.audit:
        return True
    text = _last(entries, "audit")
    return default if text is None else _flag(text, "audit")


def sweep_from_arguments(args: argparse.Namespace, entries: Dict[str, List[str]]) -> SweepSpec:
    """
    Combine the config file and the flags into a sweep.

    Flags override file values; --set entries merge over file parameters
    key by key.

    Raises:
        ConfigurationError: For malformed values or a missing scenario
    """
    fixed: Dict[str, float] = {}
    for key, values in entries.items():
        if key not in OPTION_KEYS:
            fixed[key] = as_float(values[-1], key)
    for text in args.assignments:
        key, value = parse_assignment(text)
        fixed[key] = as_float(value, key)

    scenario = args.scenario or _last(entries, "scenario")
    if not scenario:
        raise ConfigurationError("a scenario is required (--scenario or scenario = ...)")
    axis_text = args.axis if args.axis is not None else _last(entries, "axis")
    overlay_texts = args.overlay or entries.get("overlay", [])
    axis = parse_axis(axis_text) if axis_text else None
    overlays = [parse_overlay(text) for text in overlay_texts]
    for name in [o.name for o in overlays] + ([axis.name] if axis else []):
        fixed.pop(name, None)

    spec = SweepSpec(
        scenario=scenario,
        fixed=fixed,
        axis=axis,
        overlays=overlays,
        rel_tol=merge_tolerance(args, entries, 1e-8),
        audit=merge_audit(args, entries, False),
    )
    spec.validate()
    return spec


def write_table(table: SweepTable, options: OutputOptions) -> int:
    """
    Emit a table and turn its flagged rows into an exit code.

    Raises:
        OSError: If the destination cannot be written
    """
    emit(table, options.fmt, options.out, options.mass_planck)
    if table.flagged_count:
        logger.warning("%d rows flagged", table.flagged_count)
        return EXIT_FLAGGED
    return EXIT_OK


def verbosity(args: argparse.Namespace) -> int:
    return -1 if args.quiet else args.verbose


def main(argv: Optional[Sequence[str]] = None) -> int:
    """
    Run the sweep command.

    Args:
        argv: Command-line arguments after `sweep`

    Returns:
        int: Exit code (0 success, 1 flagged rows, 2 configuration or I/O error)
    """
    args = build_parser().parse_args(argv)
    configure_logging(verbosity(args))
    try:
        entries = load_config(args.config) if args.config else {}
        spec = sweep_from_arguments(args, entries)
        options = merge_options(args, entries)
        threads = options.threads if options.threads is not None else thread_count()
        table = run_sweep(spec, threads)
        return write_table(table, options)
    except ConfigurationError as exc:
        logger.error("configuration error: %s", exc)
        return EXIT_CONFIG
    except OSError as exc:
        logger.error("cannot write output: %s", exc)
        return EXIT_CONFIG


if __name__ == "__main__":
    sys.exit(main())
