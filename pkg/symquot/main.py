"""symquot – command-line entry point.

Builds the argument parser from the command modules, sets up logging and
maps library errors to exit codes (2 precondition, 3 parse, 4 internal
consistency) with a JSON error body on stderr.
"""

from __future__ import annotations

import argparse
import json
import logging
import sys
from typing import Optional, Sequence

from symquot.commands import COMMANDS
from symquot.config import get_settings
from symquot.errors import SymquotError
from symquot.models import ErrorResponse, OutputFormat
from symquot.utils.tracing import setup_logging

logger = logging.getLogger(__name__)


# ---------------------------------------------------------------------------
# Parser
# ---------------------------------------------------------------------------


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="symquot",
        description="Invariants, relations, Hilbert series and graded maps of linear symplectic torus quotients.",
    )
    parser.add_argument(
        "--format",
        choices=[f.value for f in OutputFormat],
        default=OutputFormat.JSON.value,
        help="Output as canonical JSON or as a table",
    )
    parser.add_argument("--out", default=None, help="Also write the JSON report to this file")
    parser.add_argument("--log-level", default=None, help="Logging level (default from settings)")
    subparsers = parser.add_subparsers(dest="command", required=True)
    for command in COMMANDS:
        command.register(subparsers)
    return parser


# ---------------------------------------------------------------------------
# Entry point
# ---------------------------------------------------------------------------


def _fail(code: str, detail: str, exit_code: int) -> int:
    print(json.dumps(ErrorResponse(error=code, detail=detail).model_dump()), file=sys.stderr)
    return exit_code


def main(argv: Optional[Sequence[str]] = None) -> int:
    args = build_parser().parse_args(argv)
    setup_logging(args.log_level or get_settings().log_level)
    logger.debug("Running %s", args.command)
    try:
        status = args.handler(args)
    except SymquotError as exc:
        logger.error("%s failed: %s", args.command, exc)
        return _fail(exc.code, str(exc), exc.exit_code)
    except Exception as exc:
        logger.exception("Unhandled exception in %s", args.command)
        return _fail("internal", str(exc), 4)
    return status or 0


if __name__ == "__main__":
    sys.exit(main())
