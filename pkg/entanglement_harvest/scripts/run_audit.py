"""
Script to produce the kernel-versus-oracle audit reports.
"""
import argparse
import json
import logging
import math
import sys
from dataclasses import asdict
from typing import Optional, Sequence

from entanglement_harvest.oracle.audit import (
    isotropic_gravity_report, kernel_oracle_report, magnitude_report,
)
from entanglement_harvest.utils import configure_logging

logger = logging.getLogger(__name__)


def _clean(value):
    if isinstance(value, float) and not math.isfinite(value):
        return None
    if isinstance(value, dict):
        return {k: _clean(v) for k, v in value.items()}
    return value


def main(argv: Optional[Sequence[str]] = None) -> int:
    """
    Run the isotropic-gravity, kernel-oracle and magnitude reports.

    The reports go to --out (stdout by default) as one JSON document.

    Returns:
        int: Exit code (0 when the isotropic oracle is stable, 1 otherwise, 2 on I/O errors)
    """
    parser = argparse.ArgumentParser(prog="harvest audit", description="Compare kernels with the oracle.")
    parser.add_argument("--tol", type=float, default=1e-6, help="relative tolerance (default 1e-6)")
    parser.add_argument("--skip-magnitudes", action="store_true", help="omit the peak-negativity scan")
    parser.add_argument("--out", default=None, help="output path, '-' for stdout")
    parser.add_argument("-v", "--verbose", action="count", default=0)
    args = parser.parse_args(argv)
    configure_logging(args.verbose)

    isotropic = isotropic_gravity_report(rel_tol=args.tol)
    report = {
        "isotropic_gravity": dict(_clean(asdict(isotropic)), ratio_L=_clean(isotropic.ratio_L),
                                  ratio_M=_clean(isotropic.ratio_M)),
        "kernel_oracle": [dict(_clean(asdict(row)), ratio_L=_clean(row.ratio_L), ratio_M=_clean(row.ratio_M))
                          for row in kernel_oracle_report(rel_tol=args.tol)],
    }
    if not args.skip_magnitudes:
        report["magnitudes"] = [dict(_clean(asdict(row)), within=row.within)
                                for row in magnitude_report(rel_tol=args.tol)]
    text = json.dumps(report, sort_keys=True, indent=2) + "\n"
    try:
        if args.out is None or args.out == "-":
            sys.stdout.write(text)
        else:
            with open(args.out, "w", encoding="utf-8") as handle:
                handle.write(text)
    except OSError as exc:
        logger.error("cannot write output: %s", exc)
        return 2
    if not isotropic.stable:
        logger.warning("isotropic gravity oracle is not stable under tolerance halving")
        return 1
    return 0


if __name__ == "__main__":
    sys.exit(main())
