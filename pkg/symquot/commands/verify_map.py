"""``verify-map``: check a candidate graded map between two quotients."""

from __future__ import annotations

import argparse
import logging
from pathlib import Path

from symquot.commands.common import add_matrix_argument, emit, matrix_from
from symquot.errors import ArgumentError
from symquot.invariants.relations import toric_relations
from symquot.models import VerificationReport
from symquot.morphisms.maps import BUILTIN_NAMES, GradedMonomialMap, builtin_maps, inverse, map_from_json
from symquot.morphisms.verify import verify_graded, verify_inequalities, verify_poisson, verify_relations
from symquot.pipeline.analysis import counters, matrix_rows
from symquot.utils.file_utils import read_json
from symquot.utils.stats import reset_stats
from symquot.weights.types import detect_type

logger = logging.getLogger(__name__)


def register(subparsers: argparse._SubParsersAction) -> None:
    parser = subparsers.add_parser("verify-map", help="Grading, relation, bracket and inequality checks for a map")
    parser.add_argument("map", help=f"JSON map file or a built-in map: {', '.join(BUILTIN_NAMES)}")
    parser.add_argument("--source", default=None, help="Source matrix (overrides the map file)")
    parser.add_argument("--target", default=None, help="Target matrix (overrides the map file)")
    add_matrix_argument(parser, "--matrix", "Weight matrix for the thm45 and lemma32 built-in maps")
    parser.add_argument("--both-directions", action="store_true", help="Also check the inverse map")
    parser.add_argument("--no-poisson", action="store_true", help="Skip the bracket check")
    parser.add_argument("--samples", type=int, default=None, help="Shell points for the inequality search")
    parser.set_defaults(handler=run)


def load_map(args: argparse.Namespace) -> GradedMonomialMap:
    if args.map in BUILTIN_NAMES:
        info = detect_type(matrix_from(args.matrix)) if args.matrix else None
        return builtin_maps(args.map, info)
    if not Path(args.map).exists():
        raise ArgumentError(f"{args.map!r} is neither a map file nor one of {', '.join(BUILTIN_NAMES)}")
    data = read_json(args.map)
    if args.source:
        data["source"] = [list(r) for r in matrix_from(args.source).entries]
    if args.target:
        data["target"] = [list(r) for r in matrix_from(args.target).entries]
    return map_from_json(data, Path(args.map).stem)


def run(args: argparse.Namespace) -> None:
    reset_stats()
    mapping = load_map(args)
    src = toric_relations(mapping.source).on_shell()
    dst = toric_relations(mapping.target).on_shell()
    report = VerificationReport(
        map=mapping.name,
        source=matrix_rows(mapping.source.matrix),
        target=matrix_rows(mapping.target.matrix),
        images=mapping.to_json(),
        graded=verify_graded(mapping),
    )
    report.relations = verify_relations(mapping, src, dst).to_json()
    if args.both_directions:
        report.inverse_relations = verify_relations(inverse(mapping), dst, src).to_json()
    if not args.no_poisson:
        report.poisson = verify_poisson(mapping, src, dst).to_json()
    if src.gens.nonneg:
        report.inequalities = verify_inequalities(mapping, src, dst, args.samples).to_json()
    report.metadata = {"stats": counters()}
    rows = [
        {"check": name, "holds": value["holds"] if isinstance(value, dict) and "holds" in value else value}
        for name, value in (
            ("graded", report.graded),
            ("relations", report.relations),
            ("inverse_relations", report.inverse_relations),
            ("poisson", report.poisson),
        )
        if value is not None
    ]
    if report.inequalities is not None:
        rows.append({"check": "inequalities", "holds": report.inequalities["status"]})
    emit(report, args, rows)
