"""Exact coefficients, polynomials, the text format and Gröbner routines."""

from __future__ import annotations

from fractions import Fraction

import pytest

from symquot.errors import ArgumentError, ParseError, UnsupportedCoefficientError
from symquot.poly.coefficient import IMAG, Coefficient
from symquot.poly.groebner import (
    IdealBasis,
    groebner_basis,
    ideal_equal,
    ideal_member,
    is_unit_ideal,
    normal_form,
    radical_member,
    saturate,
)
from symquot.poly.polynomial import Polynomial, variables
from symquot.poly.textual import parse_polynomial

NAMES = ("x", "y", "z")


@pytest.fixture
def xyz():
    return variables(NAMES)


# ---------------------------------------------------------------------------
# Coefficients
# ---------------------------------------------------------------------------


def test_sqrt_extracts_square_factors():
    root = Coefficient.sqrt(8)
    assert root.radicand == 2
    assert root.re == 2


def test_sqrt_of_fraction_squares_back():
    root = Coefficient.sqrt(Fraction(20, 89))
    assert root.radicand == 445
    assert root.square() == Coefficient.of(Fraction(20, 89))


def test_gaussian_division():
    assert Coefficient.complex(1, 1) / Coefficient.complex(1, -1) == IMAG


def test_mixed_radicands_do_not_add():
    with pytest.raises(UnsupportedCoefficientError):
        Coefficient.sqrt(2) + Coefficient.sqrt(3)


def test_negative_sqrt_rejected():
    with pytest.raises(ArgumentError):
        Coefficient.sqrt(-1)


# ---------------------------------------------------------------------------
# Polynomials
# ---------------------------------------------------------------------------


def test_arithmetic_and_degrees(xyz):
    x, y, z = xyz
    f = (x + y) ** 2 - x * x
    assert f == y * y + (x * y).scale(2)
    assert f.degrees() == {2}
    assert f.is_binomial()
    assert not (x + y + z).is_binomial()


def test_weighted_degrees():
    x, y = variables(("x", "y"), (2, 3))
    f = x ** 3 - y ** 2
    assert f.degrees() == {6}
    assert f.is_homogeneous()


def test_diff_and_substitute(xyz):
    x, y, z = xyz
    f = x ** 3 * y
    assert f.diff("x") == (x ** 2 * y).scale(3)
    assert f.diff("z").is_zero()
    image = f.substitute({"x": y + z, "y": z}, NAMES)
    assert image == (y + z) ** 3 * z


def test_substitute_needs_every_image(xyz):
    x, y, _ = xyz
    with pytest.raises(ArgumentError):
        (x * y).substitute({"x": y}, NAMES)


def test_split_radicands(xyz):
    x, y, _ = xyz
    f = x.scale(Coefficient.sqrt(2)) + y.scale(3)
    parts = f.split_radicands()
    assert parts == {1: y.scale(3), 2: x}


def test_evaluate_exact_and_numeric(xyz):
    x, y, _ = xyz
    f = x * y.scale(IMAG) + 1
    assert f.evaluate_exact({"x": Coefficient.of(2), "y": Coefficient.of(3)}) == Coefficient.complex(1, 6)
    assert f.evaluate({"x": 2, "y": 3}) == pytest.approx(1 + 6j)


def test_embed_into_larger_context(xyz):
    x, *_ = xyz
    small = Polynomial.variable(("x",), "x")
    assert small.embed(NAMES) == x
    with pytest.raises(ArgumentError):
        Polynomial.variable(("t",), "t").embed(NAMES)


# ---------------------------------------------------------------------------
# Text format
# ---------------------------------------------------------------------------


@pytest.mark.parametrize(
    "text",
    ["(-3/2)*y + x^2", "(0-1i)*x*z - (2+1/3i)*y", "sqrt(20/89)*x + y^3", "27*x^2*y - 1"],
)
def test_printed_text_parses_back(text):
    f = parse_polynomial(text, NAMES)
    assert parse_polynomial(str(f), NAMES) == f


def test_parser_arithmetic():
    f = parse_polynomial("-(x + y)^2 + 2*x*y", NAMES)
    assert f == parse_polynomial("-x^2 - y^2", NAMES)


@pytest.mark.parametrize("text", ["", "x +", "x ^ -1", "w + 1", "x $ y"])
def test_parser_errors(text):
    with pytest.raises(ParseError):
        parse_polynomial(text, NAMES)


# ---------------------------------------------------------------------------
# Gröbner routines
# ---------------------------------------------------------------------------


def test_twisted_cubic_membership(xyz):
    x, y, z = xyz
    I = IdealBasis.of([x ** 2 - y, x ** 3 - z], NAMES)
    assert ideal_member(x * y - z, I)
    assert ideal_member(y ** 3 - z ** 2, I)
    assert not ideal_member(x, I)
    assert ideal_equal(I, IdealBasis.of([x ** 2 - y, x * y - z], NAMES))


def test_groebner_basis_is_reduced_and_cached(xyz):
    x, y, z = xyz
    G = groebner_basis(IdealBasis.of([x ** 2 - y, x ** 3 - z], NAMES))
    assert G.groebner == G.generators
    assert all(normal_form(g, G).is_zero() for g in G.generators)


def test_gaussian_ideal(xyz):
    x, y, _ = xyz
    I = IdealBasis.of([x - y.scale(IMAG)], NAMES)
    assert ideal_member(x ** 2 + y ** 2, I)
    assert not ideal_member(x ** 2 - y ** 2, I)


def test_radical_coefficients_rejected(xyz):
    x, *_ = xyz
    I = IdealBasis.of([x], NAMES)
    with pytest.raises(UnsupportedCoefficientError):
        normal_form(x.scale(Coefficient.sqrt(2)), I)


def test_saturation(xyz):
    x, y, _ = xyz
    I = IdealBasis.of([x * y, x ** 2 * (y - 1)], NAMES)
    assert is_unit_ideal(saturate(I, x))
    assert ideal_equal(saturate(IdealBasis.of([x * y], NAMES), x), IdealBasis.of([y], NAMES))


def test_radical_membership(xyz):
    x, y, _ = xyz
    I = IdealBasis.of([x ** 3, y ** 2 - x], NAMES)
    assert radical_member(x, I)
    assert radical_member(y, I)
    assert not radical_member(x - 1, IdealBasis.of([x ** 2], NAMES))


def test_unit_ideal(xyz):
    x, *_ = xyz
    assert is_unit_ideal(IdealBasis.of([x, x - 1], NAMES))
    assert not is_unit_ideal(IdealBasis.of([x], NAMES))


def test_mixed_contexts_rejected(xyz):
    x, *_ = xyz
    other = Polynomial.variable(("x", "y"), "x")
    with pytest.raises(ArgumentError):
        IdealBasis.of([x, other])
