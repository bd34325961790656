"""
Script to run one of the named figure sweeps.
"""
import argparse
import logging
import sys
from dataclasses import replace
from typing import Optional, Sequence

from entanglement_harvest.errors import ConfigurationError
from entanglement_harvest.scripts.run_sweep import (
    EXIT_CONFIG, EXIT_OK, OutputOptions, add_common_arguments, as_float, merge_options, verbosity,
    write_table,
)
from entanglement_harvest.sweeps import PRESETS, get_preset, run_sweep, summarize_table
from entanglement_harvest.utils import configure_logging, thread_count

logger = logging.getLogger(__name__)


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="harvest preset", description="Run a named figure sweep.")
    parser.add_argument("figure", nargs="?", default=None, help="preset identifier")
    parser.add_argument("--list", action="store_true", help="list the presets and exit")
    add_common_arguments(parser)
    return parser


def list_presets() -> str:
    width = max(len(name) for name in PRESETS)
    return "\n".join(f"{name:<{width}}  {preset.description}" for name, preset in PRESETS.items())


def main(argv: Optional[Sequence[str]] = None) -> int:
    """
    Run the preset command.

    Args:
        argv: Command-line arguments after `preset`

    Returns:
        int: Exit code (0 success, 1 flagged rows, 2 configuration or I/O error)
    """
    args = build_parser().parse_args(argv)
    configure_logging(verbosity(args))
    if args.list:
        print(list_presets())
        return EXIT_OK
    try:
        if args.figure is None:
            raise ConfigurationError("a preset identifier is required (see --list)")
        preset = get_preset(args.figure)
        spec = replace(preset.spec, fixed=dict(preset.spec.fixed), overlays=list(preset.spec.overlays))
        if args.tol is not None:
            spec.rel_tol = as_float(args.tol, "tol")
        spec.audit = bool(args.audit)
        spec.validate()
        options: OutputOptions = merge_options(args, {})
        logger.info("preset %s: %s", preset.name, preset.description)
        threads = options.threads if options.threads is not None else thread_count()
        table = run_sweep(spec, threads)
        for overlay, summary in summarize_table(table):
            logger.info("%s %s: harvests=%s threshold=%s peak at %s (%.3e) unique=%s",
                        preset.name, overlay or "-", summary.harvests, summary.threshold,
                        summary.peak_x, summary.peak_y, summary.unique_peak)
        return write_table(table, options)
    except ConfigurationError as exc:
        logger.error("configuration error: %s", exc)
        return EXIT_CONFIG
    except OSError as exc:
        logger.error("cannot write output: %s", exc)
        return EXIT_CONFIG


if __name__ == "__main__":
    sys.exit(main())
