"""Coefficients ``(a + b·i)·√r`` with ``a, b`` rational and ``r`` squarefree."""

from __future__ import annotations

import cmath
import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Union

from sympy import I, Rational, factorint, sqrt
from sympy.polys.domains import QQ, QQ_I

from symquot.errors import ArgumentError, UnsupportedCoefficientError

Scalar = Union[int, Fraction, "Coefficient"]


def rational(value: int | Fraction | str) -> object:
    """Return a ``QQ`` element from an int, Fraction or ``"p/q"`` string."""
    frac = Fraction(value)
    return QQ(frac.numerator, frac.denominator)


def gaussian(re: int | Fraction = 0, im: int | Fraction = 0) -> object:
    return QQ_I(rational(re), rational(im))


def to_fraction(q: object) -> Fraction:
    return Fraction(int(q.numerator), int(q.denominator))


def _squarefree_split(n: int) -> tuple[int, int]:
    """Write ``n = s²·t`` with ``t`` squarefree; return ``(s, t)``."""
    s, t = 1, 1
    for prime, exp in factorint(n).items():
        s *= prime ** (exp // 2)
        if exp % 2:
            t *= prime
    return s, t


@dataclass(frozen=True)
class Coefficient:
    """Exact coefficient ``gaussian·√radicand``; zero is stored with radicand 1."""

    gaussian: object
    radicand: int = 1

    def __post_init__(self) -> None:
        g = self.gaussian
        if not isinstance(g, type(QQ_I.one)):
            g = QQ_I.convert(g)
        r = self.radicand
        if not isinstance(r, int) or r < 0:
            raise ArgumentError(f"Radicand must be a nonnegative integer, got {r!r}")
        if r == 0 or not g:
            g, r = QQ_I.zero, 1
        elif r != 1:
            s, r = _squarefree_split(r)
            g = g * s
        object.__setattr__(self, "gaussian", g)
        object.__setattr__(self, "radicand", r)

    # -- construction ------------------------------------------------------

    @classmethod
    def of(cls, value: Scalar) -> "Coefficient":
        if isinstance(value, Coefficient):
            return value
        if isinstance(value, (int, Fraction)):
            return cls(gaussian(value))
        return cls(QQ_I.convert(value))

    @classmethod
    def complex(cls, re: int | Fraction, im: int | Fraction) -> "Coefficient":
        return cls(gaussian(re, im))

    @classmethod
    def sqrt(cls, value: int | Fraction) -> "Coefficient":
        """The positive square root of a nonnegative rational."""
        frac = Fraction(value)
        if frac < 0:
            raise ArgumentError("sqrt needs a nonnegative rational")
        num, den = frac.numerator, frac.denominator
        return cls(gaussian(Fraction(1, den)), num * den)

    # -- predicates --------------------------------------------------------

    @property
    def re(self) -> Fraction:
        return to_fraction(self.gaussian.x)

    @property
    def im(self) -> Fraction:
        return to_fraction(self.gaussian.y)

    def is_zero(self) -> bool:
        return not self.gaussian

    def is_one(self) -> bool:
        return self.radicand == 1 and self.gaussian == QQ_I.one

    def is_rational(self) -> bool:
        return self.radicand == 1 and not self.gaussian.y

    def is_real(self) -> bool:
        return not self.gaussian.y

    def __bool__(self) -> bool:
        return not self.is_zero()

    # -- arithmetic --------------------------------------------------------

    def __neg__(self) -> "Coefficient":
        return Coefficient(-self.gaussian, self.radicand)

    def __add__(self, other: Scalar) -> "Coefficient":
        other = Coefficient.of(other)
        if other.is_zero():
            return self
        if self.is_zero():
            return other
        if self.radicand != other.radicand:
            raise UnsupportedCoefficientError(
                f"Cannot add sqrt({self.radicand}) and sqrt({other.radicand}) terms"
            )
        return Coefficient(self.gaussian + other.gaussian, self.radicand)

    __radd__ = __add__

    def __sub__(self, other: Scalar) -> "Coefficient":
        return self + (-Coefficient.of(other))

    def __rsub__(self, other: Scalar) -> "Coefficient":
        return Coefficient.of(other) - self

    def __mul__(self, other: Scalar) -> "Coefficient":
        other = Coefficient.of(other)
        return Coefficient(self.gaussian * other.gaussian, self.radicand * other.radicand)

    __rmul__ = __mul__

    def __truediv__(self, other: Scalar) -> "Coefficient":
        other = Coefficient.of(other)
        if other.is_zero():
            raise ZeroDivisionError("division by a zero coefficient")
        # 1/(g·√r) = (1/(g·r))·√r
        inverse = Coefficient(QQ_I.one / (other.gaussian * other.radicand), other.radicand)
        return self * inverse

    def __pow__(self, exponent: int) -> "Coefficient":
        if exponent < 0:
            return Coefficient.of(1) / (self ** -exponent)
        result = Coefficient.of(1)
        for _ in range(exponent):
            result = result * self
        return result

    def conjugate(self) -> "Coefficient":
        return Coefficient(QQ_I(self.gaussian.x, -self.gaussian.y), self.radicand)

    def square(self) -> "Coefficient":
        return self * self

    # -- conversion --------------------------------------------------------

    def __complex__(self) -> complex:
        root = math.sqrt(self.radicand)
        return complex(float(self.re) * root, float(self.im) * root)

    def to_sympy(self):
        value = Rational(self.re.numerator, self.re.denominator) + I * Rational(self.im.numerator, self.im.denominator)
        return value * sqrt(self.radicand)

    def phase(self) -> float:
        return cmath.phase(complex(self))

    def __str__(self) -> str:
        from symquot.poly.textual import format_coefficient

        return format_coefficient(self)


ZERO = Coefficient.of(0)
ONE = Coefficient.of(1)
IMAG = Coefficient.complex(0, 1)
