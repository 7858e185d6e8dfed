"""Arguments and output shared by every subcommand."""

from __future__ import annotations

import argparse
import logging
from typing import Any, Optional, Sequence

from pydantic import BaseModel
from tabulate import tabulate

from symquot.lattice.matrix import IntMatrix
from symquot.models import OutputFormat
from symquot.utils.file_utils import dumps, load_matrix, write_report

logger = logging.getLogger(__name__)


def add_matrix_argument(parser: argparse.ArgumentParser, name: str = "matrix", help_text: str | None = None) -> None:
    parser.add_argument(
        name,
        help=help_text or "JSON file holding an array of integer rows, or the name of a bundled matrix",
    )


def add_force_argument(parser: argparse.ArgumentParser) -> None:
    parser.add_argument("--force", action="store_true", help="Lift the enumeration guards on alpha and column count")


def add_degree_bound_argument(parser: argparse.ArgumentParser) -> None:
    parser.add_argument("--degree-bound", type=int, default=None, help="Series truncation order (default from settings)")


def add_onshell_argument(parser: argparse.ArgumentParser) -> None:
    parser.add_argument("--onshell", action="store_true", help="Work modulo the moment-map components")


def matrix_from(source: str) -> IntMatrix:
    A = load_matrix(source)
    logger.debug("Loaded matrix %s from %s", A, source)
    return A


def _cell(value: Any) -> str:
    if isinstance(value, (list, tuple)):
        return ", ".join(_cell(v) for v in value)
    if isinstance(value, dict):
        return "; ".join(f"{k}={_cell(v)}" for k, v in value.items())
    return str(value)


def render(data: dict[str, Any], fmt: OutputFormat, rows: Optional[Sequence[dict[str, Any]]] = None) -> str:
    """JSON text, or a table of ``rows`` (falling back to one row per top-level field)."""
    if fmt is OutputFormat.JSON:
        return dumps(data)
    if rows:
        headers = list(rows[0].keys())
        body = [[_cell(row.get(h)) for h in headers] for row in rows]
        return tabulate(body, headers=headers, tablefmt="github") + "\n"
    body = [[key, _cell(value)] for key, value in data.items()]
    return tabulate(body, headers=["field", "value"], tablefmt="github") + "\n"


def emit(result: BaseModel, args: argparse.Namespace, rows: Optional[Sequence[dict[str, Any]]] = None) -> None:
    """Print ``result`` in the requested format and write it to ``--out`` when given."""
    data = result.model_dump(mode="json")
    fmt = OutputFormat(args.format)
    print(render(data, fmt, rows), end="")
    if args.out:
        write_report(data, args.out)
