"""Coefficient ansatz for graded isomorphisms between the (−2, 3, 6) and (−3, 2, 6) quotients."""

from __future__ import annotations

import pytest

from symquot.morphisms.ansatz import (
    ansatz_nogo,
    ansatz_system,
    branch_implies,
    coefficient_names,
    forced_relations,
    unknowns,
)
from symquot.poly.coefficient import Coefficient
from symquot.poly.polynomial import Polynomial
from symquot.poly.textual import parse_polynomial

# the eight coefficient equations as usually written, left side minus right side
PUBLISHED = (
    "c11^2*c21",
    "c33*c43",
    "c11*(2*c12*c21 + c11*c22) - 4*k1",
    "81*c21*c22*(3*c12*c21 + 3*c11*c22 + 4*c21*c22) - k2*(6*k3 + k4)",
    "9*c22^2*(9*c12*c21 + 3*c11*c22 + 8*c21*c22) - k2*(9 + 3*k3 + 2*k4)",
    "3*c22^3*(3*c12 + 2*c22) - k2*(6 + k4)",
    "3*(c11 + 6*c21)*(c34*c43 + c33*c44) - k2*(1 - k3)",
    "3*(c12 + 6*c22)*(c34*c43 + c33*c44) + k2*(6 + k4)",
)

SOLUTION = {
    "c11": -2,
    "c12": -6,
    "c21": 0,
    "c22": 3,
    "c33": 27,
    "c34": 0,
    "c43": 0,
    "c44": 1,
    "k1": 3,
    "k2": 1,
    "k3": 163,
    "k4": -978,
}


def _proportional(ours: Polynomial, theirs: Polynomial) -> bool:
    exp, coeff = theirs.items()[0]
    ratio = ours.coefficient(exp) / coeff
    return not ratio.is_zero() and ours == theirs.scale(ratio)


def _at_solution(f: Polynomial) -> Coefficient:
    values = {name: Coefficient.of(SOLUTION.get(name, 0)) for name in f.names}
    return f.evaluate_exact(values)


def test_unknowns():
    assert len(coefficient_names()) == 16
    assert coefficient_names()[:4] == ("c11", "c12", "c21", "c22")
    assert unknowns()[-4:] == ("k1", "k2", "k3", "k4")


def test_listed_equations_match_published_system():
    system = ansatz_system()
    assert len(system.equations) == 8
    assert system.labels[0] == "R1:q1^3"
    for ours, text in zip(system.equations, PUBLISHED):
        theirs = parse_polynomial(text, unknowns())
        assert _proportional(ours, theirs), text


def test_sample_solution_satisfies_listed_equations():
    for equation in ansatz_system().equations:
        assert _at_solution(equation).is_zero()


def test_full_system_contains_listed_equations():
    full = ansatz_system(full=True)
    assert len(full.equations) > 8
    assert set(ansatz_system().labels) <= set(full.labels)


def test_vanishing_c11_kills_k1():
    c11 = Polynomial.variable(unknowns(), "c11")
    k1 = Polynomial.variable(unknowns(), "k1")
    assert branch_implies([c11], k1)


def test_forced_relations_are_linear():
    assert set(forced_relations()) == {"c21 = 0", "c11 = -2*c22/3", "c12 = -2*c22"}
    for relation in forced_relations().values():
        assert relation.degrees() == {1}


def test_sample_solution_meets_forced_relations():
    for text, relation in forced_relations().items():
        assert _at_solution(relation).is_zero(), text


@pytest.mark.slow
def test_full_system_families_are_forced():
    solution = ansatz_nogo(full=True)
    assert solution.forced_everywhere
    for family in solution.nondegenerate:
        assert family.forced


@pytest.mark.slow
def test_every_nondegenerate_family_is_forced():
    solution = ansatz_nogo()
    assert solution.nondegenerate
    assert solution.forced_everywhere
    for family in solution.nondegenerate:
        assert family.forced
        assert not family.killed
