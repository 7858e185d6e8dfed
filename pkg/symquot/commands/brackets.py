"""``brackets``: the Poisson bracket table in generator coordinates."""

from __future__ import annotations

import argparse
import logging

from symquot.commands.common import add_force_argument, add_matrix_argument, add_onshell_argument, emit, matrix_from
from symquot.invariants.generators import type1_generators
from symquot.invariants.poisson import bracket_table, type1_bracket
from symquot.invariants.relations import Shell
from symquot.models import BracketRow, BracketsReport
from symquot.pipeline.analysis import matrix_rows
from symquot.utils.cache import get_generators, get_presentation
from symquot.weights.types import detect_type

logger = logging.getLogger(__name__)


def register(subparsers: argparse._SubParsersAction) -> None:
    parser = subparsers.add_parser("brackets", help="Poisson brackets of all generator pairs")
    add_matrix_argument(parser)
    add_onshell_argument(parser)
    add_force_argument(parser)
    parser.add_argument(
        "--method",
        choices=("greedy", "elimination", "closed-form"),
        default="greedy",
        help="Rewrite ambient brackets greedily, by elimination, or use the Type I_k table",
    )
    parser.set_defaults(handler=run)


def run(args: argparse.Namespace) -> None:
    A = matrix_from(args.matrix)
    if args.method == "closed-form":
        info = detect_type(A)
        gens = type1_generators(info, args.force)
        names = gens.names
        table = {(a, b): type1_bracket(info, gens, a, b) for i, a in enumerate(names) for b in names[i + 1:]}
    else:
        gens = get_generators(A, "p", args.force)
        presentation = get_presentation(A, "p", Shell.ON, args.force) if args.onshell else None
        table = bracket_table(gens, args.method, presentation)
    rows = [BracketRow(left=a, right=b, bracket=str(value)) for (a, b), value in table.items()]
    logger.info("Bracket table of %s: %d pairs", A, len(rows))
    emit(BracketsReport(matrix=matrix_rows(A), method=args.method, brackets=rows), args, [r.model_dump() for r in rows])
