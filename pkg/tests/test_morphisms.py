"""Graded maps: algebra of maps, relation and bracket checks, inequality sampling."""

from __future__ import annotations

from fractions import Fraction

import numpy as np
import pytest

from symquot.errors import ArgumentError, UnsupportedCoefficientError, UnsupportedCombinationError
from symquot.invariants.generators import invariant_generators, type1_generators
from symquot.invariants.moment import shell_forms
from symquot.invariants.relations import PresentationIdeal, toric_relations, type1_relations
from symquot.morphisms.maps import (
    GradedMonomialMap,
    builtin_maps,
    compose,
    identity_map,
    inverse,
    map_from_json,
    restrict,
    scaling_map,
)
from symquot.morphisms.verify import (
    InequalityStatus,
    verify_graded,
    verify_inequalities,
    verify_poisson,
    verify_relations,
)
from symquot.poly.coefficient import Coefficient
from symquot.poly.groebner import IdealBasis
from symquot.weights.types import detect_type, make_type_info

from tests.conftest import row, type1_params


@pytest.fixture(scope="module")
def hyperbolic():
    return invariant_generators(row(-1, 1))


@pytest.fixture(scope="module")
def hyperbolic_presentation(hyperbolic):
    return toric_relations(hyperbolic).on_shell()


# ---------------------------------------------------------------------------
# Building maps
# ---------------------------------------------------------------------------


def test_identity_map_verifies(hyperbolic, hyperbolic_presentation):
    mapping = identity_map(hyperbolic)
    assert mapping.is_monomial
    assert verify_graded(mapping)
    assert verify_relations(mapping, hyperbolic_presentation, hyperbolic_presentation)
    assert verify_poisson(mapping, hyperbolic_presentation, hyperbolic_presentation)


def test_missing_image_rejected(hyperbolic):
    with pytest.raises(ArgumentError):
        GradedMonomialMap("partial", hyperbolic, hyperbolic, {"p0": hyperbolic.variable("p0")})


def test_unknown_generator_in_strings(hyperbolic):
    images = {n: n for n in hyperbolic.names} | {"p9": "p0"}
    with pytest.raises(ArgumentError):
        GradedMonomialMap.from_strings("bad", hyperbolic, hyperbolic, images)


def test_map_from_json():
    data = {
        "name": "swap",
        "source": [[-1, 1]],
        "target": [[1, -1]],
        "source_prefix": "p",
        "target_prefix": "q",
        "images": {"p0": "q1", "p1": "q0", "p2": "q2", "p3": "q3"},
    }
    mapping = map_from_json(data)
    assert mapping.name == "swap"
    assert verify_graded(mapping)
    src = toric_relations(mapping.source).on_shell()
    dst = toric_relations(mapping.target).on_shell()
    assert verify_relations(mapping, src, dst)


def test_degree_changing_map_is_not_graded():
    cubic = invariant_generators(row(-1, 2))
    images = {n: cubic.variable(n) for n in cubic.names}
    images["p0"] = cubic.variable("p2")
    assert not verify_graded(GradedMonomialMap("bad", cubic, cubic, images))


def test_inverse_and_compose(hyperbolic):
    mapping = scaling_map(hyperbolic, {"p2": 2, "p3": Fraction(1, 2)})
    back = inverse(mapping)
    assert back.images["p2"] == hyperbolic.variable("p2").scale(Fraction(1, 2))
    round_trip = compose(mapping, back)
    assert round_trip.images == identity_map(hyperbolic).images


def test_inverse_needs_linear_invertible_images(hyperbolic):
    singular = scaling_map(hyperbolic, {"p0": 0})
    with pytest.raises(ArgumentError):
        inverse(singular)
    radical = scaling_map(hyperbolic, {"p0": Coefficient.sqrt(2)})
    with pytest.raises(UnsupportedCoefficientError):
        inverse(radical)


def test_compose_needs_matching_generators(hyperbolic):
    cubic = invariant_generators(row(-1, 2), prefix="q")
    with pytest.raises(ArgumentError):
        compose(identity_map(hyperbolic), identity_map(cubic))


def test_restrict_to_low_degrees():
    cubic = invariant_generators(row(-1, 2))
    small = restrict(identity_map(cubic), 2)
    assert small.source.names == ("p0", "p1")
    assert small.target.names == ("p0", "p1")


def test_unknown_builtin():
    with pytest.raises(ArgumentError):
        builtin_maps("nope")
    with pytest.raises(ArgumentError):
        builtin_maps("thm45")


# ---------------------------------------------------------------------------
# Relations and brackets
# ---------------------------------------------------------------------------


def test_scaling_with_unit_product_is_poisson(hyperbolic, hyperbolic_presentation):
    mapping = scaling_map(hyperbolic, {"p2": 2, "p3": Fraction(1, 2)})
    assert verify_relations(mapping, hyperbolic_presentation, hyperbolic_presentation)
    assert verify_poisson(mapping, hyperbolic_presentation, hyperbolic_presentation)


def test_unbalanced_scaling_fails(hyperbolic, hyperbolic_presentation):
    mapping = scaling_map(hyperbolic, {"p2": 2})
    result = verify_relations(mapping, hyperbolic_presentation, hyperbolic_presentation)
    assert not result
    assert result.failures
    assert not verify_poisson(mapping, hyperbolic_presentation, hyperbolic_presentation)


def test_radical_images_are_split_by_radicand(hyperbolic, hyperbolic_presentation):
    root = Coefficient.sqrt(2)
    uniform = scaling_map(hyperbolic, {n: root for n in hyperbolic.names})
    assert verify_relations(uniform, hyperbolic_presentation, hyperbolic_presentation)
    lopsided = scaling_map(hyperbolic, {"p0": root})
    assert not verify_relations(lopsided, hyperbolic_presentation, hyperbolic_presentation)


def test_radical_images_need_binomials(hyperbolic):
    p0, p1, p2, p3 = (hyperbolic.variable(n) for n in hyperbolic.names)
    src = PresentationIdeal(hyperbolic, IdealBasis.of([p0 * p1 - p2 * p3 + p0 * p0]))
    mapping = scaling_map(hyperbolic, {"p0": Coefficient.sqrt(3)})
    with pytest.raises(UnsupportedCombinationError):
        verify_relations(mapping, src, src)


# ---------------------------------------------------------------------------
# Inequalities
# ---------------------------------------------------------------------------


def test_sign_flip_violates_inequality(hyperbolic, hyperbolic_presentation):
    mapping = scaling_map(hyperbolic, {"p0": -1})
    verdict = verify_inequalities(mapping, hyperbolic_presentation, hyperbolic_presentation, samples=5)
    assert verdict.violated
    assert verdict.witness.generator == "p0"
    assert verdict.witness.value < 0


def test_identity_finds_no_violation(hyperbolic, hyperbolic_presentation):
    verdict = verify_inequalities(
        identity_map(hyperbolic),
        hyperbolic_presentation,
        hyperbolic_presentation,
        samples=5,
        rng=np.random.default_rng(1),
    )
    assert verdict.status is InequalityStatus.NO_VIOLATION_FOUND
    assert verdict.witness is None


# ---------------------------------------------------------------------------
# Built-in maps
# ---------------------------------------------------------------------------


def test_psi_on_the_moment_form():
    psi = builtin_maps("psi")
    J_A = shell_forms(psi.source)[0]
    assert psi.apply(J_A) == shell_forms(psi.target)[0].scale(Fraction(3, 2))


def test_psi_inverse_round_trip():
    psi = builtin_maps("psi")
    back = builtin_maps("psi_inverse")
    assert compose(psi, back).images == identity_map(psi.source).images


def test_phi_star_pulls_back_the_moment_form(gens_a, gens_b):
    phi = builtin_maps("phi_star")
    assert phi.apply(shell_forms(gens_b)[0]) == shell_forms(gens_a)[0]


@pytest.mark.slow
def test_psi_is_an_algebra_isomorphism_but_not_semialgebraic(onshell_a, onshell_b):
    psi = builtin_maps("psi")
    assert verify_graded(psi)
    assert verify_relations(psi, onshell_a, onshell_b)
    assert verify_relations(inverse(psi), onshell_b, onshell_a)
    verdict = verify_inequalities(psi, onshell_a, onshell_b)
    assert verdict.violated
    assert verdict.witness.generator == "p2"


@pytest.mark.slow
def test_phi_star_is_poisson(onshell_a, onshell_b):
    phi = builtin_maps("phi_star")
    assert verify_relations(phi, onshell_b, onshell_a)
    assert verify_poisson(phi, onshell_b, onshell_a)


def test_theorem_map_images(matrices):
    info = detect_type(matrices["sec6.adoubleprime"])
    mapping = builtin_maps("thm45", info)
    target = mapping.target
    assert mapping.source.names == type1_generators(info).names
    assert mapping.images["r1"] == target.variable(target.diagonal(0)).scale(Fraction(1, 2))
    assert verify_graded(mapping)


@pytest.mark.parametrize("name", ["sec6.adoubleprime", "sec6.aprime"])
def test_theorem_map_preserves_relations(matrices, name):
    info = detect_type(matrices[name])
    mapping = builtin_maps("thm45", info)
    source = type1_relations(info, mapping.source)
    target = toric_relations(mapping.target)
    assert verify_relations(mapping, source, target)
    assert verify_relations(mapping, source.on_shell(), target.on_shell())


@pytest.mark.parametrize("a,n,c", type1_params(slow_above=15))
def test_theorem_map_across_family(a, n, c):
    info = make_type_info(a, n, c)
    mapping = builtin_maps("thm45", info)
    assert verify_graded(mapping)
    source = type1_relations(info, mapping.source)
    target = toric_relations(mapping.target)
    assert verify_relations(mapping, source, target)
    assert verify_relations(mapping, source.on_shell(), target.on_shell())


def test_pullback_is_graded(matrices):
    info = detect_type(matrices["sec6.adoubleprime"])
    mapping = builtin_maps("lemma32", info)
    assert mapping.name == "pullback"
    assert verify_graded(mapping)
    assert len(mapping.source) == 10
