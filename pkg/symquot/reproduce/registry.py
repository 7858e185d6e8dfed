"""Reproduction items for the worked examples.

Each item is registered with a name and a description and dispatched
through one handler table. A handler returns its checks; an item passes
when every check does.
"""

from __future__ import annotations

import logging
from typing import Any, Callable

import numpy as np

from symquot.config import get_settings
from symquot.errors import ArgumentError
from symquot.invariants.generators import ambient_polynomial, hilbert_map, type1_generators
from symquot.invariants.moment import shell_forms, shell_identity
from symquot.invariants.poisson import bracket_in_generators, type1_bracket
from symquot.invariants.relations import PresentationIdeal, Shell, toric_relations, type1_relations
from symquot.invariants.semialgebraic import reconstruct_point, shell_sample
from symquot.lattice.matrix import IntMatrix
from symquot.models import CheckResult, ItemResult, ItemStatus, ReproduceSummary
from symquot.morphisms.ansatz import ansatz_nogo, ansatz_system, branch_implies
from symquot.morphisms.maps import builtin_maps, inverse
from symquot.morphisms.verify import verify_graded, verify_inequalities, verify_poisson, verify_relations
from symquot.poly.groebner import IdealBasis, ideal_equal
from symquot.poly.polynomial import Polynomial
from symquot.series.counting import SeriesTruncation, expand_rational, offshell_dims, onshell_dims
from symquot.utils.cache import bundled_matrix, get_generators, get_presentation
from symquot.utils.file_utils import read_json
from symquot.weights.classify import Verdict, classify, expected_grading_invariants, grading_invariants, same_class
from symquot.weights.lift import cotangent_lift_equivalent
from symquot.weights.reduction import orbit_map_identity, reduce_to_circle
from symquot.weights.types import TypeKind, detect_type

logger = logging.getLogger(__name__)

# The printed rational form for the first pair has the off-shell pole order;
# on shell one factor (1 - t^2) cancels.
SERIES_I_OFFSHELL = ((1, 0, 0, 1, 2, 1, 0, 0, 1), (5, 3, 2, 2, 2))
SERIES_I = ((1, 0, 0, 1, 2, 1, 0, 0, 1), (5, 3, 2, 2))
SERIES_II = ((1, 0, 2, 4, 2, 0, 1), (3, 3, 2, 2))
SERIES_III = ((1, 0, 2, 2, 2, 0, 1), (3, 3, 2, 2))
LIFT_TRANSPOSITIONS = ((1, 4), (3, 7), (5, 8))


class Checks:
    """Collects expected-vs-actual comparisons for one item."""

    def __init__(self) -> None:
        self.results: list[CheckResult] = []

    def equal(self, name: str, expected: Any, actual: Any) -> None:
        passed = expected == actual
        self.results.append(CheckResult(name=name, expected=str(expected), actual=str(actual), passed=passed))
        if not passed:
            logger.warning("Check %s failed: expected %s, got %s", name, expected, actual)

    def true(self, name: str, actual: Any) -> None:
        self.equal(name, True, bool(actual))


def _series_check(
    checks: Checks,
    label: str,
    A: IntMatrix,
    rational: tuple,
    N: int,
    dims: Callable[[IntMatrix, int], SeriesTruncation] = onshell_dims,
) -> None:
    expected = expand_rational(rational[0], rational[1], N)
    checks.equal(f"{label} series of {A}", expected.coefficients, dims(A, N).coefficients)


def _relation_list(key: str, A: IntMatrix) -> PresentationIdeal:
    data = read_json(f"{get_settings().data_dir}/relation_lists.json")[key]
    gens = get_generators(A, data["prefix"])
    ideal = IdealBasis.of([gens.parse(text) for text in data["relations"]], gens.names, gens.degrees)
    return PresentationIdeal(gens, ideal, Shell.ON)


# ---------------------------------------------------------------------------
# Item handlers
# ---------------------------------------------------------------------------


def _ex36(checks: Checks) -> None:
    A = bundled_matrix("ex3.6")
    info = detect_type(A)
    checks.equal("kind", TypeKind.TYPE_II.value, info.kind.value)
    checks.equal("k", 4, info.k)
    checks.equal("alpha", 60, info.alpha)
    checks.equal("m", (20, 45, 24), info.m)
    checks.equal("beta", 89, info.beta)
    checks.equal("reduced matrix", ((-60, 89, 178, 267, 267),), reduce_to_circle(info).entries)
    checks.true("moment map pulls back along the embedding", shell_identity(info))
    checks.true("orbit map intertwines the actions", orbit_map_identity(info))


def _prop4(checks: Checks) -> None:
    A = bundled_matrix("sec6.aprime")
    info = detect_type(A)
    closed = type1_generators(info)
    generic = get_generators(A, "p")
    checks.equal("closed-form generators", generic.exponent_pairs(), closed.exponent_pairs())
    formula = type1_relations(info, closed)
    toric = toric_relations(closed)
    checks.true("closed-form relations generate the toric ideal", ideal_equal(formula.ideal, toric.ideal))

    B = bundled_matrix("bracket.typeI2")
    bracket_info = detect_type(B)
    gens = type1_generators(bracket_info)
    mismatched = []
    for i, a in enumerate(gens.names):
        for b in gens.names[i + 1:]:
            direct = ambient_polynomial(gens, bracket_in_generators(gens, a, b))
            closed_form = ambient_polynomial(gens, type1_bracket(bracket_info, gens, a, b))
            if direct != closed_form:
                mismatched.append(f"{{{a}, {b}}}")
    checks.equal("bracket table matches first principles", [], mismatched)

    rng = np.random.default_rng(get_settings().random_seed)
    worst = 0.0
    for _ in range(20):
        point = shell_sample(B, rng)
        values = hilbert_map(gens, point)
        again = hilbert_map(gens, reconstruct_point(gens, bracket_info, values))
        worst = max(worst, max(abs(again[n] - values[n]) / max(1.0, abs(values[n])) for n in gens.names))
    checks.true("reconstructed points reproduce the invariants", worst <= get_settings().float_tolerance)


def _thm45(checks: Checks) -> None:
    for key in ("sec6.aprime", "bracket.typeI2"):
        info = detect_type(bundled_matrix(key))
        mapping = builtin_maps("thm45", info)
        target = toric_relations(mapping.target)
        source = type1_relations(info, mapping.source)
        checks.true(f"{key}: graded", verify_graded(mapping))
        checks.true(f"{key}: relations map into the circle relations", verify_relations(mapping, source, target))
        checks.true(
            f"{key}: shell relations map into the circle shell relation",
            verify_relations(mapping, source.on_shell(), target.on_shell()),
        )


def _cor52(checks: Checks) -> None:
    circle = [IntMatrix.row_vector(r) for r in ((-1, 2), (-2, 1), (-1, 3))]
    checks.equal("k = 1 key", ("eta", 3), classify(circle[0]).key)
    checks.equal("equal eta", Verdict.SAME, same_class(circle[0], circle[1]).verdict)
    checks.equal("different eta", Verdict.DIFFERENT, same_class(circle[0], circle[2]).verdict)
    A = bundled_matrix("sec6.aprime")
    checks.equal("Type I key", ("typeI", 2, 2, 1), classify(A).key)
    checks.equal(
        "different (k, alpha, beta)",
        Verdict.DIFFERENT,
        same_class(A, IntMatrix.row_vector((-1, 1, 1))).verdict,
    )
    expected = expected_grading_invariants(detect_type(A))
    checks.equal("grading invariants", expected, grading_invariants(get_generators(A, "p")))


def _sec6_ab(checks: Checks) -> None:
    A, B = bundled_matrix("sec6.a"), bundled_matrix("sec6.b")
    N = get_settings().degree_bound
    for M in (A, B):
        _series_check(checks, "I", M, SERIES_I, N)
        _series_check(checks, "I off-shell", M, SERIES_I_OFFSHELL, N, offshell_dims)
    src, dst = get_presentation(A, "p"), get_presentation(B, "q")
    checks.true("printed p-relations generate the on-shell ideal", ideal_equal(_relation_list("sec6.a", A).ideal, src.ideal))
    checks.true("printed q-relations generate the on-shell ideal", ideal_equal(_relation_list("sec6.b", B).ideal, dst.ideal))

    psi = builtin_maps("psi")
    checks.true("psi graded", verify_graded(psi))
    checks.true("psi maps relations into relations", verify_relations(psi, src, dst))
    checks.true("psi inverse maps relations into relations", verify_relations(inverse(psi), dst, src))
    verdict = verify_inequalities(psi, src, dst)
    checks.equal("psi violates an inequality at", "p2", verdict.witness.generator if verdict.witness else None)

    phi = builtin_maps("phi_star")
    checks.true("phi* graded", verify_graded(phi))
    checks.true("phi* maps relations into relations", verify_relations(phi, dst, src))
    checks.true("phi* inverse maps relations into relations", verify_relations(inverse(phi), src, dst))
    checks.true("phi* is Poisson", verify_poisson(phi, dst, src))
    checks.equal("phi* J_B = J_A", shell_forms(src.gens)[0], phi.apply(shell_forms(dst.gens)[0]))


def _sec6_abprime(checks: Checks) -> None:
    A, B = bundled_matrix("sec6.aprime"), bundled_matrix("sec6.bprime")
    N = get_settings().degree_bound
    _series_check(checks, "II", A, SERIES_II, N)
    _series_check(checks, "II", B, SERIES_II, N)
    checks.equal("types", ("TypeI", "TypeII"), (detect_type(A).kind.value, detect_type(B).kind.value))
    checks.equal("not identified by invariants", Verdict.UNDETERMINED, same_class(A, B).verdict)


def _sec6_abdoubleprime(checks: Checks) -> None:
    A, B = bundled_matrix("sec6.adoubleprime"), bundled_matrix("sec6.bdoubleprime")
    N = get_settings().degree_bound
    _series_check(checks, "III", A, SERIES_III, N)
    _series_check(checks, "III", B, SERIES_III, N)
    checks.true("cotangent lifts agree", cotangent_lift_equivalent(A, B, LIFT_TRANSPOSITIONS))


def _ansatz(checks: Checks) -> None:
    system = ansatz_system()
    checks.equal("listed equations", 8, len(system.equations))
    solution = ansatz_nogo()
    checks.true("a family without killed generators exists", solution.nondegenerate)
    checks.true("every such family is forced", solution.forced_everywhere)
    unknowns = system.unknowns

    c11 = Polynomial.variable(unknowns, "c11")
    k1 = Polynomial.variable(unknowns, "k1")
    checks.true("c11 = 0 forces k1 = 0", branch_implies([c11], k1))


# ---------------------------------------------------------------------------
# Registry
# ---------------------------------------------------------------------------

ITEM_DEFINITIONS: list[dict[str, str]] = [
    {"name": "ex3.6", "description": "Type II_4 example reduces to (-60, 89, 178, 267, 267)"},
    {"name": "prop4.x", "description": "Type I_k generators, relations, brackets and point reconstruction"},
    {"name": "thm4.5", "description": "The explicit map to the circle quotient is graded and preserves relations"},
    {"name": "cor5.2", "description": "Classification keys for k = 1 and Type I_k"},
    {"name": "sec6.ab", "description": "(-2,3,6) vs (-3,2,6): series, printed relations, psi and phi*"},
    {"name": "sec6.abprime", "description": "(-2,1,1) vs (-1,2,1): equal series"},
    {"name": "sec6.abdoubleprime", "description": "2x4 pair: equal series and equivalent cotangent lifts"},
    {"name": "ansatz", "description": "Coefficient ansatz forces a sign-violating solution"},
]

_ITEM_HANDLERS: dict[str, Callable[[Checks], None]] = {
    "ex3.6": _ex36,
    "prop4.x": _prop4,
    "thm4.5": _thm45,
    "cor5.2": _cor52,
    "sec6.ab": _sec6_ab,
    "sec6.abprime": _sec6_abprime,
    "sec6.abdoubleprime": _sec6_abdoubleprime,
    "ansatz": _ansatz,
}


def list_items() -> list[dict[str, str]]:
    return ITEM_DEFINITIONS


def run_item(name: str) -> ItemResult:
    handler = _ITEM_HANDLERS.get(name)
    if handler is None:
        raise ArgumentError(f"Unknown reproduction item {name!r}; choose from {sorted(_ITEM_HANDLERS)} or 'all'")
    checks = Checks()
    handler(checks)
    description = next(d["description"] for d in ITEM_DEFINITIONS if d["name"] == name)
    status = ItemStatus.PASS if all(c.passed for c in checks.results) else ItemStatus.FAIL
    logger.info("Item %s: %s (%d checks)", name, status.value, len(checks.results))
    return ItemResult(item=name, description=description, status=status, checks=checks.results)


def run_items(name: str) -> ReproduceSummary:
    names = [d["name"] for d in ITEM_DEFINITIONS] if name == "all" else [name]
    results = [run_item(n) for n in names]
    passed = sum(1 for r in results if r.status is ItemStatus.PASS)
    return ReproduceSummary(items=results, passed=passed, failed=len(results) - passed)
