"""File helpers for matrices, maps and reports."""

from __future__ import annotations

import json
import logging
from pathlib import Path
from typing import Any

from symquot.config import ensure_output_dir, get_settings
from symquot.errors import ParseError
from symquot.lattice.matrix import IntMatrix

logger = logging.getLogger(__name__)


def read_json(path: str | Path) -> Any:
    """Load a JSON document, turning syntax errors into :class:`ParseError`."""
    path = Path(path)
    try:
        with path.open(encoding="utf-8") as fh:
            return json.load(fh)
    except FileNotFoundError as exc:
        raise ParseError(f"No such file: {path}") from exc
    except json.JSONDecodeError as exc:
        raise ParseError(f"{path}: invalid JSON ({exc.msg} at line {exc.lineno})") from exc


def bundled_matrices() -> dict[str, list[list[int]]]:
    return read_json(Path(get_settings().data_dir) / "matrices.json")


def load_matrix(source: str | Path) -> IntMatrix:
    """Read a matrix file, or a bundled matrix when ``source`` names one.

    The file holds an array of arrays of integers or decimal-integer strings.
    """
    bundled = bundled_matrices()
    if isinstance(source, str) and source in bundled:
        return IntMatrix.from_rows(bundled[source])
    data = read_json(source)
    if not isinstance(data, list) or not all(isinstance(row, list) for row in data):
        raise ParseError(f"{source}: a matrix must be a JSON array of arrays")
    return IntMatrix.from_rows(data)


def dumps(data: Any) -> str:
    """Canonical JSON text: sorted keys, two-space indent, trailing newline."""
    return json.dumps(data, indent=2, sort_keys=True, ensure_ascii=False) + "\n"


def write_report(data: Any, out: str | Path | None = None) -> Path:
    """Write ``data`` as canonical JSON to ``out`` (default: the report directory)."""
    if out is None:
        out = ensure_output_dir() / "report.json"
    path = Path(out)
    path.parent.mkdir(parents=True, exist_ok=True)
    path.write_text(dumps(data), encoding="utf-8")
    logger.info("Report written to %s (%d bytes)", path, path.stat().st_size)
    return path
