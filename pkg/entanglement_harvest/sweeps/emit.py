"""
CSV and JSON output of sweep tables.

Output depends only on the table, so identical sweeps give identical bytes.
"""
import csv
import io
import json
import logging
import math
import sys
from typing import IO, Optional, Union

from .. import __version__
from ..core.model import coupling_from_mass
from ..errors import DomainError
from ..integration.gauss_kronrod import TAIL_FACTOR
from .runner import SweepTable

logger = logging.getLogger(__name__)

FORMATS = ("csv", "json")


def format_value(value) -> str:
    """CSV cell text; floats use 17 significant digits."""
    if isinstance(value, bool):
        return "1" if value else "0"
    if isinstance(value, float):
        return format(value, ".17g")
    return str(value)


def _json_value(value):
    if isinstance(value, float) and not math.isfinite(value):
        return None
    return value


def scale_table(table: SweepTable, mass_planck: float) -> SweepTable:
    """Table with every row scaled by coupling_from_mass(mass_planck)^2."""
    factor = coupling_from_mass(mass_planck) ** 2
    return SweepTable(table.spec, [row.scaled(factor) for row in table.rows])


def render(table: SweepTable, fmt: str, mass_planck: Optional[float] = None) -> str:
    """
    Render a table as text.

    Args:
        table: Non-empty sweep table
        fmt: csv or json
        mass_planck: Detector mass in Planck units; rescales the rows when given

    Returns:
        str: The complete output

    Raises:
        DomainError: For an empty table or unknown format
    """
    if fmt not in FORMATS:
        raise DomainError(f"format must be one of {FORMATS}, got {fmt!r}")
    if len(table) == 0:
        raise DomainError("cannot emit an empty table")
    coupling = 1.0
    if mass_planck is not None:
        table = scale_table(table, mass_planck)
        coupling = coupling_from_mass(mass_planck) ** 2
    names = table.spec.parameter_names()
    audit = table.spec.audit
    if fmt == "csv":
        buffer = io.StringIO()
        writer = csv.writer(buffer, lineterminator="\n")
        writer.writerow(table.columns)
        for row in table:
            record = row.record(names, audit)
            writer.writerow([format_value(record[c]) for c in table.columns])
        return buffer.getvalue()
    metadata = {
        "spec": table.spec.echo(),
        "version": __version__,
        "rel_tol": table.spec.rel_tol,
        "eps_tail": table.spec.rel_tol * TAIL_FACTOR,
        "coupling_factor": coupling,
        "columns": table.columns,
    }
    rows = [{k: _json_value(v) for k, v in row.record(names, audit).items()} for row in table]
    return json.dumps({"metadata": metadata, "rows": rows}, sort_keys=True, indent=2) + "\n"


def emit(table: SweepTable, fmt: str, destination: Union[str, IO[str], None] = None,
         mass_planck: Optional[float] = None) -> None:
    """
    Write a table to a path or stream.

    Args:
        table: Non-empty sweep table
        fmt: csv or json
        destination: File path, text stream, or None / "-" for stdout
        mass_planck: Optional detector mass in Planck units

    Raises:
        DomainError: For an empty table or unknown format
        OSError: If the destination cannot be written
    """
    text = render(table, fmt, mass_planck)
    if destination is None or destination == "-":
        sys.stdout.write(text)
    elif isinstance(destination, str):
        with open(destination, "w", encoding="utf-8", newline="") as handle:
            handle.write(text)
        logger.info("wrote %d rows to %s", len(table), destination)
    else:
        destination.write(text)
