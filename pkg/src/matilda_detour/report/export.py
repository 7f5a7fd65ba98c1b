"""CSV export of strategy comparisons."""

import csv
import io
from dataclasses import asdict
from pathlib import Path
from typing import Any, Dict, Iterable, List, Sequence, Union

from ..core.exceptions import IoError
from ..engine import ComparisonTable
from ..internal.utils import get_logger

logger = get_logger(__name__)

COMPARE_COLUMNS = ("strategy", "seed_id", "rng_seed", "nods_count", "mutation_valid_pct", "wall_s")
SWEEP_COLUMNS = ("epsilon", "delta_t", "unique_nods_count")
CURVE_COLUMNS = ("strategy", "rng_seed", "iteration", "cumulative_nods")
SUMMARY_COLUMNS = (
    "strategy",
    "epsilon",
    "delta_t",
    "runs",
    "mean_nods",
    "mean_unique_nods",
    "mean_mutation_valid_pct",
    "p_value",
)


def _cell(value: Any) -> Any:
    if isinstance(value, float):
        return f"{value:.6g}"
    if value is None:
        return ""
    return value


def csv_text(rows: Iterable[Dict[str, Any]], columns: Sequence[str]) -> str:
    buffer = io.StringIO()
    writer = csv.DictWriter(buffer, fieldnames=list(columns), extrasaction="ignore", lineterminator="\n")
    writer.writeheader()
    for row in rows:
        writer.writerow({k: _cell(row.get(k)) for k in columns})
    return buffer.getvalue()


def compare_csv(table: ComparisonTable, with_sweep: bool = False) -> str:
    """One row per campaign; ``with_sweep`` appends the epsilon/delta_t/unique columns."""
    columns: List[str] = list(COMPARE_COLUMNS)
    if with_sweep:
        columns.extend(SWEEP_COLUMNS)
    return csv_text((asdict(r) for r in table.rows), columns)


def curves_csv(table: ComparisonTable, with_sweep: bool = False) -> str:
    """Cumulative #NoDS per iteration for every campaign."""
    columns: List[str] = list(CURVE_COLUMNS)
    if with_sweep:
        columns[1:1] = ["epsilon", "delta_t"]
    return csv_text((asdict(c) for c in table.curves), columns)


def summary_csv(table: ComparisonTable) -> str:
    return csv_text((asdict(s) for s in table.summaries), SUMMARY_COLUMNS)


def write_csv(path: Union[str, Path], text: str) -> Path:
    """
    Write CSV text to ``path``.

    Raises:
        IoError: If the file cannot be written.
    """
    target = Path(path)
    try:
        target.parent.mkdir(parents=True, exist_ok=True)
        target.write_text(text, encoding="utf-8", newline="")
    except OSError as e:
        raise IoError(str(target), e.strerror or str(e)) from e
    logger.debug(f"Wrote {target}")
    return target


__all__ = [
    "COMPARE_COLUMNS",
    "CURVE_COLUMNS",
    "SUMMARY_COLUMNS",
    "compare_csv",
    "csv_text",
    "curves_csv",
    "summary_csv",
    "write_csv",
]
