"""Pinned reference values for the bound tables.

The packaged CSVs hold the published five-decimal values the solvers are
expected to reproduce; they are used only for comparison (golden-file mode
in the CLI and the acceptance suite), never as inputs to any computation.
"""

from __future__ import annotations

import csv
from importlib import resources

__all__ = ["TABLE_IDS", "compare_tolerance", "load_reference", "load_reference_path", "table_grid"]

TABLE_IDS = {
    "vertex-expansion": "vertex_bound_reference.csv",
    "vertex-half": "vertex_bound_half_reference.csv",
    "edge": "edge_bound_reference.csv",
}


def _parse(rows) -> dict[tuple[int, float], float]:
    table: dict[tuple[int, float], float] = {}
    for row in rows:
        table[(int(row["d"]), float(row["u"]))] = float(row["value"])
    if not table:
        raise ValueError("reference table is empty")
    return table


def load_reference(table_id: str) -> dict[tuple[int, float], float]:
    """The packaged reference table as {(d, u): value}."""
    if table_id not in TABLE_IDS:
        raise KeyError(f"unknown table id {table_id!r}; expected one of {sorted(TABLE_IDS)}")
    data = (resources.files(__package__) / "data" / TABLE_IDS[table_id]).read_text()
    return _parse(csv.DictReader(data.splitlines()))


def load_reference_path(path: str) -> dict[tuple[int, float], float]:
    """A reference table from an external CSV with columns d, u, value."""
    with open(path, newline="") as fh:
        return _parse(csv.DictReader(fh))


def table_grid(table: dict[tuple[int, float], float]) -> tuple[list[int], list[float]]:
    """Sorted d and u axes present in a reference table."""
    ds = sorted({d for d, _ in table})
    us = sorted({u for _, u in table})
    return ds, us


def compare_tolerance(reference: float) -> float:
    """Allowed deviation from a printed table cell: 1e-4 * max(1, |value|),
    absorbing both the five-decimal rounding and solver differences."""
    return 1e-4 * max(1.0, abs(reference))
