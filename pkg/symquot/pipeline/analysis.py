"""The ``analyze`` pipeline.

Runs the steps in order (type detection, faithfulness, circle reduction,
generators, relations, optional brackets, series) and collects each result
into one :class:`AnalysisReport`.
"""

from __future__ import annotations

import logging
from typing import Optional

from symquot.config import get_settings
from symquot.errors import RegularSequenceError
from symquot.invariants.generators import GeneratorSet
from symquot.invariants.poisson import bracket_table
from symquot.invariants.relations import PresentationIdeal, Shell
from symquot.lattice.matrix import IntMatrix
from symquot.models import AnalysisReport, BracketRow, GeneratorRow, RelationsReport, SeriesReport, TypeReport
from symquot.series.counting import offshell_dims, onshell_dims
from symquot.utils.cache import get_generators, get_presentation
from symquot.utils.stats import get_stats, reset_stats
from symquot.weights.reduction import reduce_to_circle
from symquot.weights.types import TypeInfo, detect_type, is_faithful, is_faithful_type2

logger = logging.getLogger(__name__)


# ---------------------------------------------------------------------------
# Report builders
# ---------------------------------------------------------------------------


def matrix_rows(A: IntMatrix) -> list[list[int]]:
    return [list(row) for row in A.entries]


def type_report(info: TypeInfo) -> TypeReport:
    return TypeReport(
        kind=info.kind.value,
        rows=info.rows,
        cols=info.cols,
        a=list(info.a),
        n=list(info.n),
        c=list(info.c),
        alpha=info.alpha,
        m=list(info.m),
        beta=info.beta,
        eta=info.eta,
        column_order=list(info.column_order),
    )


def generator_rows(gens: GeneratorSet) -> list[GeneratorRow]:
    return [GeneratorRow(**row) for row in gens.to_json()]


def relations_report(presentation: PresentationIdeal) -> RelationsReport:
    return RelationsReport(**presentation.to_json())


def reduced_matrix(info: TypeInfo) -> Optional[IntMatrix]:
    """The circle matrix of a faithful block matrix in literal column order, else ``None``."""
    if not info.is_block or not is_faithful_type2(info):
        return None
    return reduce_to_circle(info)


def counters() -> dict[str, int]:
    """Run counters without wall times, so reports stay identical across runs."""
    return {k: v for k, v in get_stats().items() if not k.endswith("_seconds")}


# ---------------------------------------------------------------------------
# Pipeline
# ---------------------------------------------------------------------------


def run_analysis(
    A: IntMatrix,
    degree_bound: Optional[int] = None,
    onshell: bool = True,
    brackets: bool = False,
    force: bool = False,
) -> AnalysisReport:
    """Execute every analysis step for ``A`` and return the report."""
    reset_stats()
    N = degree_bound if degree_bound is not None else get_settings().degree_bound
    steps: list[str] = []

    info = detect_type(A)
    steps.append(f"detect_type: {info.kind.value}")
    faithful = is_faithful(A)
    steps.append(f"is_faithful: {faithful}")

    reduced = reduced_matrix(info)
    if reduced is not None:
        steps.append(f"reduce_to_circle: {reduced}")
    else:
        steps.append("reduce_to_circle: not applicable")

    gens = get_generators(A, "p", force)
    steps.append(f"invariant_generators: {len(gens)}")
    presentation = get_presentation(A, "p", Shell.ON if onshell else Shell.OFF, force)
    steps.append(f"toric_relations: {len(presentation.ideal.generators)} generators ({presentation.shell.value}-shell)")

    rows: list[BracketRow] = []
    if brackets:
        table = bracket_table(gens, presentation=presentation)
        rows = [BracketRow(left=a, right=b, bracket=str(v)) for (a, b), v in table.items()]
        steps.append(f"bracket_table: {len(rows)} pairs")

    shell = Shell.ON if onshell else Shell.OFF
    try:
        series = onshell_dims(A, N) if onshell else offshell_dims(A, N)
    except RegularSequenceError:
        logger.warning("On-shell series of %s is not available; reporting the off-shell series", A)
        series, shell = offshell_dims(A, N), Shell.OFF
    steps.append(f"{shell.value}shell_dims: order {N}")

    logger.info("Analysis of %s finished in %d steps", A, len(steps))
    return AnalysisReport(
        matrix=matrix_rows(A),
        type=type_report(info),
        faithful=faithful,
        reduced=matrix_rows(reduced) if reduced is not None else None,
        generators=generator_rows(gens),
        relations=relations_report(presentation),
        brackets=rows,
        series=SeriesReport(matrix=matrix_rows(A), order=N, shell=shell.value, coefficients=list(series.coefficients)),
        steps=steps,
        metadata={"stats": counters()},
    )
