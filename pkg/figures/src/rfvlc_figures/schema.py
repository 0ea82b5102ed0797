"""CSV contract shared with the simulator's export format.

The renderer consumes only exported files; this module is the single
place that knows their column layout. Rows come back as plain dicts with
numeric fields already converted.
"""

from __future__ import annotations

import csv
import re
from typing import Optional

REQUIRED_COLUMNS = (
    "axis_name",
    "axis_value",
    "mean_capacity_rf_bps",
    "mean_capacity_vlc_bps",
    "mean_capacity_hybrid_bps",
    "vlc_usage_ratio",
    "num_drops",
    "seed",
)

_FLOAT_COLUMNS = (
    "axis_value",
    "mean_capacity_rf_bps",
    "mean_capacity_vlc_bps",
    "mean_capacity_hybrid_bps",
    "vlc_usage_ratio",
)

_INT_COLUMNS = ("num_drops", "seed")

_DP_STEM_RE = re.compile(r"_dp([0-9]+(?:\.[0-9]+)?)$")
_POLICY_STEM_RE = re.compile(r"capacity_comparison_([a-z]+)_dp")


class SchemaError(ValueError):
    """An input CSV does not satisfy the export contract."""


def load_rows(path: str) -> list[dict]:
    """Read one exported CSV, validating columns and types.

    Raises SchemaError naming the first missing column, and refuses files
    with a header but no data rows.
    """
    with open(path, "r", encoding="utf-8", newline="") as fh:
        reader = csv.DictReader(fh)
        header = reader.fieldnames or ()
        for column in REQUIRED_COLUMNS:
            if column not in header:
                raise SchemaError(f"{path}: missing column {column!r}")
        rows = []
        for raw in reader:

            def convert(column: str, cast):
                value = raw[column]
                try:
                    return cast(value)
                except (TypeError, ValueError) as exc:
                    raise SchemaError(
                        f"{path}: row {reader.line_num}: column {column!r} "
                        f"has non-numeric value {value!r}"
                    ) from exc

            row = {"axis_name": raw["axis_name"]}
            for column in _FLOAT_COLUMNS:
                row[column] = convert(column, float)
            for column in _INT_COLUMNS:
                row[column] = convert(column, int)
            rows.append(row)
    if not rows:
        raise SchemaError(f"{path}: no data rows")
    return rows


def stem_of(path: str) -> str:
    name = path.replace("\\", "/").rsplit("/", 1)[-1]
    return name.rsplit(".", 1)[0]


def dp_from_stem(stem: str) -> Optional[float]:
    """Inter-pair distance encoded in a file stem, if present."""
    match = _DP_STEM_RE.search(stem)
    return float(match.group(1)) if match else None


def policy_from_stem(stem: str) -> Optional[str]:
    match = _POLICY_STEM_RE.search(stem)
    return match.group(1) if match else None
