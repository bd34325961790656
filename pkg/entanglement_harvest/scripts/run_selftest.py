"""
Script to run the invariant suite.
"""
import argparse
import logging
import sys
from typing import Optional, Sequence

from entanglement_harvest.oracle.invariants import run_checks
from entanglement_harvest.utils import configure_logging

logger = logging.getLogger(__name__)


def main(argv: Optional[Sequence[str]] = None) -> int:
    """
    Run the fast invariant checks, and the oracle checks with --audit.

    Returns:
        int: Exit code (0 when every check passes, 1 otherwise)
    """
    parser = argparse.ArgumentParser(prog="harvest selftest", description="Run the invariant checks.")
    parser.add_argument("--audit", action="store_true", help="include the slow oracle checks")
    parser.add_argument("-v", "--verbose", action="count", default=0)
    args = parser.parse_args(argv)
    configure_logging(args.verbose)

    results = run_checks(audit=args.audit)
    failed = [r.name for r in results if not r.passed]
    if failed:
        logger.error("selftest: %d of %d checks failed: %s", len(failed), len(results), ", ".join(failed))
        return 1
    logger.info("selftest: all %d checks passed", len(results))
    return 0


if __name__ == "__main__":
    sys.exit(main())
