"""``invariants``: the monomial generators of the invariant ring."""

from __future__ import annotations

import argparse
import logging

from symquot.commands.common import add_force_argument, add_matrix_argument, emit, matrix_from
from symquot.invariants.generators import type1_generators
from symquot.models import GeneratorsReport
from symquot.pipeline.analysis import generator_rows, matrix_rows
from symquot.utils.cache import get_generators
from symquot.weights.types import detect_type

logger = logging.getLogger(__name__)


def register(subparsers: argparse._SubParsersAction) -> None:
    parser = subparsers.add_parser("invariants", help="Hilbert basis of the invariant monoid as named generators")
    add_matrix_argument(parser)
    add_force_argument(parser)
    parser.add_argument("--prefix", default="p", help="Generator name prefix")
    parser.add_argument("--closed-form", action="store_true", help="Use the Type I_k closed-form generator list")
    parser.set_defaults(handler=run)


def run(args: argparse.Namespace) -> None:
    A = matrix_from(args.matrix)
    if args.closed_form:
        gens = type1_generators(detect_type(A), args.force)
    else:
        gens = get_generators(A, args.prefix, args.force)
    rows = generator_rows(gens)
    emit(GeneratorsReport(matrix=matrix_rows(A), generators=rows), args, [r.model_dump() for r in rows])
