"""Exact polynomials, the textual format and Gröbner-basis predicates."""

from symquot.poly.coefficient import IMAG, ONE, ZERO, Coefficient, gaussian, rational
from symquot.poly.groebner import (
    EliminationOrder,
    IdealBasis,
    Membership,
    WeightedGrevlex,
    ensure_groebner,
    groebner_basis,
    ideal_equal,
    ideal_member,
    is_unit_ideal,
    normal_form,
    radical_member,
    saturate,
)
from symquot.poly.polynomial import Polynomial, poly_arith, product, variables
from symquot.poly.textual import format_coefficient, format_polynomial, parse_polynomial

__all__ = [
    "IMAG",
    "ONE",
    "ZERO",
    "Coefficient",
    "EliminationOrder",
    "IdealBasis",
    "Membership",
    "Polynomial",
    "WeightedGrevlex",
    "ensure_groebner",
    "format_coefficient",
    "format_polynomial",
    "gaussian",
    "groebner_basis",
    "ideal_equal",
    "ideal_member",
    "is_unit_ideal",
    "normal_form",
    "parse_polynomial",
    "poly_arith",
    "product",
    "radical_member",
    "rational",
    "saturate",
    "variables",
]
