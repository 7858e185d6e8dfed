"""``reproduce``: run the worked-example checks by item name."""

from __future__ import annotations

import argparse
import logging

from symquot.commands.common import emit
from symquot.reproduce.registry import list_items, run_items

logger = logging.getLogger(__name__)


def register(subparsers: argparse._SubParsersAction) -> None:
    parser = subparsers.add_parser("reproduce", help="Re-derive a worked example and compare against expected values")
    parser.add_argument("item", nargs="?", default="all", help="Item name or 'all'")
    parser.add_argument("--list", action="store_true", help="List the available items")
    parser.set_defaults(handler=run)


def run(args: argparse.Namespace) -> int:
    if args.list:
        for item in list_items():
            print(f"{item['name']:<20} {item['description']}")
        return 0
    summary = run_items(args.item)
    rows = [
        {"item": item.item, "check": check.name, "expected": check.expected, "actual": check.actual, "passed": check.passed}
        for item in summary.items
        for check in item.checks
    ]
    emit(summary, args, rows)
    if summary.failed:
        logger.warning("%d of %d items failed", summary.failed, len(summary.items))
        return 4
    return 0
