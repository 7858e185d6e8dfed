"""Invariant generators, presentations, brackets, moment forms and the semialgebraic description."""

from __future__ import annotations

from fractions import Fraction
from itertools import combinations

import numpy as np
import pytest

from symquot.config import get_settings
from symquot.errors import (
    GuardError,
    InternalConsistencyError,
    PreconditionError,
    ReconstructionError,
    SamplerError,
)
from symquot.invariants.generators import (
    ambient_polynomial,
    compositions,
    hilbert_map,
    invariant_generators,
    type1_generators,
)
from symquot.invariants.moment import moment_forms, shell_forms
from symquot.invariants.poisson import (
    BRACKET_CONSTANT,
    bracket_in_generators,
    bracket_table,
    poisson_bracket,
    rewrite_in_generators,
    type1_bracket,
)
from symquot.invariants.relations import PresentationIdeal, Shell, certify_toric, toric_relations, type1_relations
from symquot.invariants.semialgebraic import (
    in_semialgebraic_set,
    reconstruct_point,
    semialgebraic_description,
    shell_sample,
)
from symquot.poly.coefficient import Coefficient
from symquot.poly.groebner import IdealBasis, ideal_equal
from symquot.poly.polynomial import Polynomial
from symquot.weights.types import assemble, detect_type, make_type_info

from tests.conftest import row, type1_params


@pytest.fixture(scope="module")
def hyperbolic():
    """``z1 w1, z2 w2, z1 z2, w1 w2`` for the weights ``(-1, 1)``."""
    return invariant_generators(row(-1, 1))


@pytest.fixture(scope="module")
def cubic():
    return invariant_generators(row(-1, 2))


@pytest.fixture(scope="module")
def type1_small(matrices):
    info = detect_type(matrices["sec6.aprime"])
    return info, type1_generators(info)


# ---------------------------------------------------------------------------
# Generators
# ---------------------------------------------------------------------------


def test_generic_naming_and_order(hyperbolic):
    assert hyperbolic.names == ("p0", "p1", "p2", "p3")
    assert [(g.u, g.v) for g in hyperbolic.generators] == [
        ((1, 0), (1, 0)),
        ((0, 1), (0, 1)),
        ((1, 1), (0, 0)),
        ((0, 0), (1, 1)),
    ]
    assert hyperbolic.nonneg == {"p0", "p1"}
    assert hyperbolic.conjugate("p2") == "p3"
    assert hyperbolic.diagonal(1) == "p1"


def test_degrees_and_prefix(cubic):
    assert cubic.degrees == (2, 2, 3, 3)
    assert invariant_generators(row(-1, 2), prefix="q").names == ("q0", "q1", "q2", "q3")


def test_worked_pair_generator_counts(gens_a, gens_b):
    assert len(gens_a) == len(gens_b) == 9
    assert gens_a.degrees[:3] == (2, 2, 2)


def test_column_guard():
    with pytest.raises(GuardError):
        invariant_generators(row(-1, 1, 1, 1, 1, 1, 1, 1, 1))


def test_compositions():
    assert compositions(2, 2) == [(2, 0), (1, 1), (0, 2)]
    assert len(compositions(6, 2)) == 7


def test_closed_form_generators_match_hilbert_basis(type1_small, matrices):
    _, closed = type1_small
    assert len(closed) == 11
    assert closed.exponent_pairs() == invariant_generators(matrices["sec6.aprime"]).exponent_pairs()
    assert closed.nonneg == {"r1", "p1_1", "p2_2"}
    assert closed.conjugate("q2_0") == "qbar2_0"


def test_closed_forms_need_type1():
    with pytest.raises(PreconditionError):
        type1_generators(detect_type(row(1, 2, 3)))


@pytest.mark.parametrize("a,n,c", type1_params())
def test_closed_form_generators_across_family(a, n, c):
    info = make_type_info(a, n, c)
    closed = type1_generators(info)
    assert closed.exponent_pairs() == invariant_generators(assemble(info)).exponent_pairs()
    assert len(closed) == info.ell + info.k**2 + 2 * len(compositions(info.alpha, info.k))


@pytest.mark.parametrize(
    "a,n,c",
    [
        ((1, 1), (1, 1), (1, 2)),  # Type II
        ((2,), (2,), (1,)),  # not faithful
        ((2, 4), (1, 1), (1,)),  # not faithful
    ],
)
def test_closed_forms_reject_family_outsiders(a, n, c):
    with pytest.raises(PreconditionError):
        type1_generators(make_type_info(a, n, c))


def test_hilbert_map_values(hyperbolic):
    values = hilbert_map(hyperbolic, [1, 2j])
    assert values["p0"] == pytest.approx(1)
    assert values["p1"] == pytest.approx(4)
    assert values["p2"] == pytest.approx(2j)
    assert values["p3"] == pytest.approx(-2j)


# ---------------------------------------------------------------------------
# Relations
# ---------------------------------------------------------------------------


def test_single_toric_relation(hyperbolic):
    presentation = toric_relations(hyperbolic)
    p0, p1, p2, p3 = (hyperbolic.variable(n) for n in hyperbolic.names)
    assert ideal_equal(presentation.ideal, IdealBasis.of([p0 * p1 - p2 * p3]))
    assert certify_toric(presentation, 6)


def test_certificate_detects_missing_relations(hyperbolic):
    empty = PresentationIdeal(hyperbolic, IdealBasis.of([], hyperbolic.names, hyperbolic.degrees))
    assert not certify_toric(empty, 4)


def test_relations_vanish_on_invariants(gens_a):
    presentation = toric_relations(gens_a)
    assert presentation.ideal.generators
    for g in presentation.ideal.generators:
        assert ambient_polynomial(gens_a, g).is_zero()


def test_on_shell_adds_moment_form(hyperbolic):
    presentation = toric_relations(hyperbolic)
    shell = presentation.on_shell()
    form = hyperbolic.variable("p1") - hyperbolic.variable("p0")
    assert shell.shell is Shell.ON
    assert shell.contains(form)
    assert not presentation.contains(form)
    assert shell.on_shell() is shell


def test_closed_form_relations_vanish(matrices):
    info = detect_type(matrices["bracket.typeI2"])
    presentation = type1_relations(info)
    for g in presentation.ideal.generators:
        assert g.is_binomial()
        assert ambient_polynomial(presentation.gens, g).is_zero()


def test_closed_form_relations_are_complete_in_low_degree(type1_small):
    info, gens = type1_small
    assert certify_toric(type1_relations(info, gens), 5)


@pytest.mark.slow
def test_closed_form_relations_generate_toric_ideal(type1_small):
    info, gens = type1_small
    assert ideal_equal(type1_relations(info, gens).ideal, toric_relations(gens).ideal)


@pytest.mark.parametrize("a,n,c", type1_params(slow_above=15))
def test_closed_form_relations_across_family(a, n, c):
    info = make_type_info(a, n, c)
    gens = type1_generators(info)
    closed = type1_relations(info, gens)
    assert ideal_equal(closed.ideal, toric_relations(gens).ideal)


# ---------------------------------------------------------------------------
# Poisson brackets
# ---------------------------------------------------------------------------


def test_ambient_bracket_constant():
    names = ("z1", "w1")
    z = Polynomial.variable(names, "z1")
    w = Polynomial.variable(names, "w1")
    assert poisson_bracket(z, w) == Polynomial.constant(names, BRACKET_CONSTANT)
    assert poisson_bracket(w, z) == Polynomial.constant(names, -BRACKET_CONSTANT)
    assert poisson_bracket(z, z).is_zero()


def test_bracket_of_diagonal_with_holomorphic(hyperbolic):
    result = bracket_in_generators(hyperbolic, "p0", "p2")
    assert result == hyperbolic.variable("p2").scale(Coefficient.complex(0, 2))


def test_quadratic_bracket(cubic):
    p0, p1 = cubic.variable("p0"), cubic.variable("p1")
    expected = (p0 * p1).scale(4) + p0 ** 2
    assert bracket_in_generators(cubic, "p2", "p3") == expected.scale(BRACKET_CONSTANT)


def test_bracket_is_antisymmetric(cubic):
    for a in cubic.names:
        for b in cubic.names:
            assert bracket_in_generators(cubic, a, b) == -bracket_in_generators(cubic, b, a)


def test_jacobi_identity(cubic):
    f, g, h = (cubic.monomial(n) for n in ("p0", "p2", "p3"))
    total = (
        poisson_bracket(f, poisson_bracket(g, h))
        + poisson_bracket(g, poisson_bracket(h, f))
        + poisson_bracket(h, poisson_bracket(f, g))
    )
    assert total.is_zero()


def test_rewriting_methods_agree(cubic):
    greedy = bracket_table(cubic, "greedy")
    elimination = bracket_table(cubic, "elimination")
    assert greedy.keys() == elimination.keys()
    for pair, value in greedy.items():
        assert ambient_polynomial(cubic, value) == ambient_polynomial(cubic, elimination[pair]), pair


def test_non_invariant_is_not_rewritten(cubic):
    z1 = Polynomial.variable(cubic.ambient, "z1")
    with pytest.raises(InternalConsistencyError):
        rewrite_in_generators(cubic, z1, "greedy")
    with pytest.raises(InternalConsistencyError):
        rewrite_in_generators(cubic, z1, "elimination")


def test_closed_form_brackets(type1_small):
    info, gens = type1_small
    for i, a in enumerate(gens.names):
        for b in gens.names[i:]:
            direct = ambient_polynomial(gens, bracket_in_generators(gens, a, b))
            closed = ambient_polynomial(gens, type1_bracket(info, gens, a, b))
            assert direct == closed, (a, b)


@pytest.fixture(scope="module")
def type1_two_by_two():
    info = make_type_info((2, 3), (1, 1), (1, 1))
    return info, type1_generators(info)


def test_closed_form_bracket_table_two_by_two(type1_two_by_two):
    info, gens = type1_two_by_two
    assert len(gens) == 20
    for i, a in enumerate(gens.names):
        for b in gens.names[i:]:
            direct = ambient_polynomial(gens, bracket_in_generators(gens, a, b))
            closed = ambient_polynomial(gens, type1_bracket(info, gens, a, b))
            assert direct == closed, (a, b)


def test_antisymmetry_over_all_pairs(type1_two_by_two):
    info, gens = type1_two_by_two
    for a, b in combinations(gens.names, 2):
        assert type1_bracket(info, gens, a, b) == -type1_bracket(info, gens, b, a), (a, b)
        assert bracket_in_generators(gens, a, b) == -bracket_in_generators(gens, b, a), (a, b)
    for a in gens.names:
        assert type1_bracket(info, gens, a, a).is_zero()


def test_jacobi_over_all_triples(type1_two_by_two):
    _, gens = type1_two_by_two
    for names in combinations(gens.names, 3):
        f, g, h = (gens.monomial(n) for n in names)
        total = (
            poisson_bracket(f, poisson_bracket(g, h))
            + poisson_bracket(g, poisson_bracket(h, f))
            + poisson_bracket(h, poisson_bracket(f, g))
        )
        assert total.is_zero(), names


def test_bracket_reduced_modulo_relations(hyperbolic):
    presentation = toric_relations(hyperbolic)
    reduced = bracket_in_generators(hyperbolic, "p2", "p3", presentation=presentation)
    assert ambient_polynomial(hyperbolic, reduced) == ambient_polynomial(
        hyperbolic, bracket_in_generators(hyperbolic, "p2", "p3")
    )


# ---------------------------------------------------------------------------
# Moment map
# ---------------------------------------------------------------------------


def test_moment_form_coefficients():
    (form,) = moment_forms(row(-1, 2))
    assert form.coefficients == (Fraction(-1, 2), Fraction(1))


def test_shell_forms_are_twice_the_moment_map(cubic):
    (form,) = shell_forms(cubic)
    assert form == cubic.variable("p1").scale(2) - cubic.variable("p0")


def test_moment_forms_vanish_on_shell_samples(matrices, rng):
    A = matrices["bracket.typeI2"]
    for _ in range(10):
        z = shell_sample(A, rng)
        squares = np.abs(z) ** 2
        for i in range(A.rows):
            assert abs(np.dot(A.row(i), squares)) < 1e-9


# ---------------------------------------------------------------------------
# Semialgebraic description
# ---------------------------------------------------------------------------


def test_membership(hyperbolic):
    presentation = toric_relations(hyperbolic)
    assert in_semialgebraic_set(presentation, hilbert_map(hyperbolic, [1, 2j]))
    assert in_semialgebraic_set(presentation, {"p0": 1, "p1": 1, "p2": 1j, "p3": -1j})

    negative = in_semialgebraic_set(presentation, {"p0": -1, "p1": -1, "p2": 1, "p3": 1})
    assert not negative
    assert negative.violated == "p0 >= 0"

    broken = in_semialgebraic_set(presentation, {"p0": 1, "p1": 1, "p2": 2, "p3": 2})
    assert broken.violated.startswith("relation")

    asymmetric = in_semialgebraic_set(presentation, {"p0": 1, "p1": 1, "p2": 2, "p3": 0.5})
    assert asymmetric.violated.startswith("conjugation")


def test_type1_inequalities(type1_small):
    info, gens = type1_small
    assert [str(i) for i in semialgebraic_description(gens, info)] == ["r1 >= 0", "p1_1 >= 0", "p2_2 >= 0"]


def test_reconstruction_round_trip(matrices):
    tol = get_settings().float_tolerance
    A = matrices["bracket.typeI2"]
    info = detect_type(A)
    gens = type1_generators(info)
    rng = np.random.default_rng(3)
    for _ in range(100):
        values = hilbert_map(gens, shell_sample(A, rng))
        again = hilbert_map(gens, reconstruct_point(gens, info, values))
        for name in gens.names:
            assert again[name] == pytest.approx(values[name], rel=tol, abs=tol)


def test_reconstruction_off_shell(type1_small, rng):
    tol = get_settings().float_tolerance
    info, gens = type1_small
    for _ in range(20):
        z = rng.normal(size=3) + 1j * rng.normal(size=3)
        values = hilbert_map(gens, z)
        again = hilbert_map(gens, reconstruct_point(gens, info, values))
        for name in gens.names:
            assert again[name] == pytest.approx(values[name], rel=tol, abs=tol)


def test_reconstruction_rejects_negative_diagonal(type1_small):
    info, gens = type1_small
    values = hilbert_map(gens, [1.0, 0.5, 2.0])
    values["p1_1"] = -1.0
    with pytest.raises(ReconstructionError):
        reconstruct_point(gens, info, values)


def test_reconstruction_rejects_inconsistent_off_diagonal(type1_small):
    info, gens = type1_small
    values = hilbert_map(gens, [1.0, 0.5, 2.0])
    # p1_1·p2_2 = |p1_2|² no longer holds
    values["p1_2"] *= 2
    values["p2_1"] *= 2
    with pytest.raises(ReconstructionError):
        reconstruct_point(gens, info, values)


def test_sampler_needs_a_nontrivial_zero_level(rng):
    with pytest.raises(SamplerError):
        shell_sample(row(1, 2), rng)
