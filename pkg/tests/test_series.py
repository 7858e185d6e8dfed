"""Lattice-point series, rational expansions and standard-monomial counts."""

from __future__ import annotations

import pytest

from symquot.errors import ArgumentError, RegularSequenceError
from symquot.invariants.generators import invariant_generators
from symquot.invariants.relations import toric_relations
from symquot.lattice.matrix import IntMatrix
from symquot.series.counting import (
    SeriesTruncation,
    circle_series_parity,
    expand_rational,
    format_rational,
    offshell_dims,
    onshell_dims,
    quotient_dims,
    series_equal,
    supported_on_monoid,
)

from tests.conftest import row

NUMERATOR_I = (1, 0, 0, 1, 2, 1, 0, 0, 1)
NUMERATOR_II = (1, 0, 2, 4, 2, 0, 1)
NUMERATOR_III = (1, 0, 2, 2, 2, 0, 1)


def test_offshell_small_cases():
    assert offshell_dims(row(-1, 1), 2).coefficients == (1, 0, 4)
    assert offshell_dims(row(-2, 3, 6), 6).coefficients == (1, 0, 3, 2, 8, 8, 18)


def test_onshell_divides_by_moment_components():
    assert onshell_dims(row(-2, 3, 6), 6).coefficients == (1, 0, 2, 2, 5, 6, 10)


def test_negative_order_rejected():
    with pytest.raises(ArgumentError):
        offshell_dims(row(-1, 1), -1)


def test_irregular_moment_map_detected():
    # two components on a single coordinate
    with pytest.raises(RegularSequenceError):
        onshell_dims(IntMatrix.from_rows([[1], [1]]), 4)


def test_expand_rational():
    assert expand_rational([1], [1], 3).coefficients == (1, 1, 1, 1)
    left = expand_rational([1, 2, 1], [2], 10)
    right = expand_rational([1, 1], [1], 10)
    assert series_equal(left, right)
    assert expand_rational(NUMERATOR_II, (3, 3, 2, 2), 4).coefficients == (1, 0, 4, 6, 9)


def test_expand_rational_needs_positive_exponents():
    with pytest.raises(ArgumentError):
        expand_rational([1], [0], 3)


@pytest.mark.parametrize("name", ["sec6.a", "sec6.b"])
def test_first_pair_series(matrices, name):
    A = matrices[name]
    assert onshell_dims(A, 12) == expand_rational(NUMERATOR_I, (5, 3, 2, 2), 12)
    assert offshell_dims(A, 12) == expand_rational(NUMERATOR_I, (5, 3, 2, 2, 2), 12)


@pytest.mark.parametrize("name", ["sec6.aprime", "sec6.bprime"])
def test_second_pair_series(matrices, name):
    assert onshell_dims(matrices[name], 12) == expand_rational(NUMERATOR_II, (3, 3, 2, 2), 12)


@pytest.mark.parametrize("name", ["sec6.adoubleprime", "sec6.bdoubleprime"])
def test_third_pair_series(matrices, name):
    assert onshell_dims(matrices[name], 12) == expand_rational(NUMERATOR_III, (3, 3, 2, 2), 12)


def test_series_equal_needs_matching_orders():
    with pytest.raises(ArgumentError):
        series_equal(SeriesTruncation((1, 0)), SeriesTruncation((1, 0, 1)))


def test_multiply_polynomial_truncates():
    series = SeriesTruncation((1, 1, 1, 1))
    assert series.multiply_polynomial([1, -1]).coefficients == (1, 0, 0, 0)
    assert series[2] == 1
    assert series.order == 3


@pytest.mark.parametrize("a,b", [(1, 1), (1, 2), (2, 3), (3, 5), (1, 4)])
def test_circle_series_lives_on_monoid(a, b):
    assert circle_series_parity(a, b, 14)


def test_supported_on_monoid():
    assert supported_on_monoid(SeriesTruncation((1, 0, 1, 0, 1)), (2,))
    assert not supported_on_monoid(SeriesTruncation((1, 1)), (2, 3))


def test_circle_series_parity_needs_positive_weights():
    with pytest.raises(ArgumentError):
        circle_series_parity(0, 2, 4)


@pytest.mark.parametrize("rows", [[[-1, 1]], [[-1, 2]], [[-2, 3, 6]], [[-1, 0, 1, 1], [0, -1, 1, 1]]])
def test_standard_monomials_match_lattice_count(rows):
    A = IntMatrix.from_rows(rows)
    presentation = toric_relations(invariant_generators(A))
    assert quotient_dims(presentation.ideal, 8) == offshell_dims(A, 8)
    assert quotient_dims(presentation.on_shell().ideal, 8) == onshell_dims(A, 8)


def test_format_rational():
    assert format_rational(NUMERATOR_I, (5, 3, 2, 2, 2)) == "(1 + t^3 + 2t^4 + t^5 + t^8)/((1 - t^5)(1 - t^3)(1 - t^2)^3)"
    assert format_rational((1, -2), (1,)) == "(1 - 2t)/((1 - t^1))"
