"""Sparse multivariate polynomials over named, weighted variables."""

from __future__ import annotations

import logging
from collections import defaultdict
from fractions import Fraction
from typing import Iterable, Mapping, Sequence

from symquot.errors import ArgumentError
from symquot.lattice.matrix import ExponentVector
from symquot.poly.coefficient import ONE, Coefficient, Scalar

logger = logging.getLogger(__name__)


class Polynomial:
    """Immutable polynomial: exponent vector ↦ nonzero :class:`Coefficient`.

    ``names`` fixes the variable order and ``weights`` the grading. Two
    polynomials can only be combined when both agree.
    """

    __slots__ = ("names", "weights", "_terms", "_hash")

    def __init__(
        self,
        names: Sequence[str],
        terms: Mapping[ExponentVector, Scalar] | None = None,
        weights: Sequence[int] | None = None,
    ) -> None:
        self.names = tuple(names)
        if len(set(self.names)) != len(self.names):
            raise ArgumentError(f"Duplicate variable names in {self.names}")
        self.weights = tuple(weights) if weights is not None else (1,) * len(self.names)
        if len(self.weights) != len(self.names) or any(w <= 0 for w in self.weights):
            raise ArgumentError("Weights must be positive, one per variable")
        clean: dict[ExponentVector, Coefficient] = {}
        for exp, coeff in (terms or {}).items():
            exp = tuple(int(e) for e in exp)
            if len(exp) != len(self.names) or any(e < 0 for e in exp):
                raise ArgumentError(f"Exponent {exp} does not fit variables {self.names}")
            coeff = Coefficient.of(coeff)
            if coeff:
                clean[exp] = coeff
        self._terms = clean
        self._hash: int | None = None

    # -- construction ------------------------------------------------------

    @classmethod
    def zero(cls, names: Sequence[str], weights: Sequence[int] | None = None) -> "Polynomial":
        return cls(names, {}, weights)

    @classmethod
    def constant(cls, names: Sequence[str], value: Scalar, weights: Sequence[int] | None = None) -> "Polynomial":
        return cls(names, {(0,) * len(names): value}, weights)

    @classmethod
    def variable(cls, names: Sequence[str], name: str, weights: Sequence[int] | None = None) -> "Polynomial":
        if name not in names:
            raise ArgumentError(f"Unknown variable {name!r}")
        exp = tuple(int(n == name) for n in names)
        return cls(names, {exp: 1}, weights)

    @classmethod
    def monomial(
        cls,
        names: Sequence[str],
        exponent: ExponentVector,
        coeff: Scalar = 1,
        weights: Sequence[int] | None = None,
    ) -> "Polynomial":
        return cls(names, {tuple(exponent): coeff}, weights)

    def _like(self, terms: Mapping[ExponentVector, Scalar]) -> "Polynomial":
        return Polynomial(self.names, terms, self.weights)

    # -- access ------------------------------------------------------------

    @property
    def terms(self) -> dict[ExponentVector, Coefficient]:
        return dict(self._terms)

    def items(self) -> list[tuple[ExponentVector, Coefficient]]:
        """Terms in canonical order: weighted degree descending, then reverse lex."""
        return sorted(self._terms.items(), key=lambda t: self._order_key(t[0]), reverse=True)

    def _order_key(self, exp: ExponentVector) -> tuple:
        return (self.weighted_degree(exp), tuple(reversed([-e for e in exp])))

    def weighted_degree(self, exp: ExponentVector) -> int:
        return sum(w * e for w, e in zip(self.weights, exp))

    def degrees(self) -> set[int]:
        return {self.weighted_degree(e) for e in self._terms}

    def degree(self) -> int:
        """Largest weighted degree; ``-1`` for the zero polynomial."""
        return max(self.degrees(), default=-1)

    def is_zero(self) -> bool:
        return not self._terms

    def is_homogeneous(self) -> bool:
        return len(self.degrees()) <= 1

    def is_binomial(self) -> bool:
        return len(self._terms) <= 2

    def is_monomial(self) -> bool:
        return len(self._terms) == 1

    def coefficient(self, exp: ExponentVector) -> Coefficient:
        return self._terms.get(tuple(exp), Coefficient.of(0))

    def radicands(self) -> set[int]:
        return {c.radicand for c in self._terms.values()}

    def has_radicals(self) -> bool:
        return any(r != 1 for r in self.radicands())

    def is_rational(self) -> bool:
        return all(c.is_rational() for c in self._terms.values())

    def support(self) -> set[str]:
        return {self.names[i] for exp in self._terms for i, e in enumerate(exp) if e}

    def homogeneous_part(self, degree: int) -> "Polynomial":
        return self._like({e: c for e, c in self._terms.items() if self.weighted_degree(e) == degree})

    def __len__(self) -> int:
        return len(self._terms)

    # -- arithmetic --------------------------------------------------------

    def _check(self, other: "Polynomial") -> None:
        if self.names != other.names or self.weights != other.weights:
            raise ArgumentError(
                f"Mismatched variable contexts {self.names} and {other.names}"
            )

    def _coerce(self, other: "Polynomial | Scalar") -> "Polynomial":
        if isinstance(other, Polynomial):
            self._check(other)
            return other
        return Polynomial.constant(self.names, other, self.weights)

    def __add__(self, other: "Polynomial | Scalar") -> "Polynomial":
        other = self._coerce(other)
        out = dict(self._terms)
        for exp, coeff in other._terms.items():
            out[exp] = out[exp] + coeff if exp in out else coeff
        return self._like(out)

    __radd__ = __add__

    def __neg__(self) -> "Polynomial":
        return self._like({e: -c for e, c in self._terms.items()})

    def __sub__(self, other: "Polynomial | Scalar") -> "Polynomial":
        return self + (-self._coerce(other))

    def __rsub__(self, other: "Polynomial | Scalar") -> "Polynomial":
        return self._coerce(other) - self

    def __mul__(self, other: "Polynomial | Scalar") -> "Polynomial":
        other = self._coerce(other)
        out: dict[ExponentVector, Coefficient] = {}
        for e1, c1 in self._terms.items():
            for e2, c2 in other._terms.items():
                exp = tuple(a + b for a, b in zip(e1, e2))
                prod = c1 * c2
                out[exp] = out[exp] + prod if exp in out else prod
        return self._like(out)

    __rmul__ = __mul__

    def __pow__(self, exponent: int) -> "Polynomial":
        if exponent < 0:
            raise ArgumentError("Negative powers of polynomials are not supported")
        result = Polynomial.constant(self.names, 1, self.weights)
        base = self
        while exponent:
            if exponent & 1:
                result = result * base
            base = base * base
            exponent >>= 1
        return result

    def scale(self, factor: Scalar) -> "Polynomial":
        factor = Coefficient.of(factor)
        return self._like({e: c * factor for e, c in self._terms.items()})

    def diff(self, name: str) -> "Polynomial":
        idx = self.names.index(name)
        out: dict[ExponentVector, Coefficient] = {}
        for exp, coeff in self._terms.items():
            if exp[idx]:
                new = exp[:idx] + (exp[idx] - 1,) + exp[idx + 1:]
                out[new] = coeff * exp[idx]
        return self._like(out)

    def conjugate_coefficients(self) -> "Polynomial":
        return self._like({e: c.conjugate() for e, c in self._terms.items()})

    def monic(self) -> "Polynomial":
        if self.is_zero():
            return self
        lead = self.items()[0][1]
        return self.scale(Coefficient.of(1) / lead)

    # -- change of variables -----------------------------------------------

    def substitute(
        self,
        images: Mapping[str, "Polynomial"],
        names: Sequence[str],
        weights: Sequence[int] | None = None,
    ) -> "Polynomial":
        """Replace every variable by its image in the context ``names``."""
        target_one = Polynomial.constant(names, 1, weights)
        powers: dict[tuple[str, int], Polynomial] = {}
        result = Polynomial.zero(names, weights)
        for exp, coeff in self._terms.items():
            term = target_one.scale(coeff)
            for name, e in zip(self.names, exp):
                if not e:
                    continue
                if name not in images:
                    raise ArgumentError(f"No image given for variable {name!r}")
                key = (name, e)
                if key not in powers:
                    powers[key] = images[name] ** e
                term = term * powers[key]
            result = result + term
        return result

    def embed(self, names: Sequence[str], weights: Sequence[int] | None = None) -> "Polynomial":
        """Re-express in a context containing all variables of ``self``."""
        index = {n: i for i, n in enumerate(names)}
        missing = [n for n in self.support() if n not in index]
        if missing:
            raise ArgumentError(f"Variables {missing} are not in the target context")
        out: dict[ExponentVector, Coefficient] = {}
        for exp, coeff in self._terms.items():
            new = [0] * len(names)
            for name, e in zip(self.names, exp):
                if e:
                    new[index[name]] = e
            out[tuple(new)] = coeff
        return Polynomial(names, out, weights)

    # -- decompositions ----------------------------------------------------

    def split_radicands(self) -> dict[int, "Polynomial"]:
        """``{r: f_r}`` with ``self = Σ √r·f_r`` and every ``f_r`` radical-free."""
        parts: dict[int, dict[ExponentVector, Coefficient]] = defaultdict(dict)
        for exp, coeff in self._terms.items():
            parts[coeff.radicand][exp] = Coefficient(coeff.gaussian)
        return {r: self._like(t) for r, t in sorted(parts.items())}

    def real_imag_parts(self) -> tuple["Polynomial", "Polynomial"]:
        """Split a radical-free polynomial into rational real and imaginary parts."""
        re: dict[ExponentVector, Scalar] = {}
        im: dict[ExponentVector, Scalar] = {}
        for exp, coeff in self._terms.items():
            if coeff.radicand != 1:
                raise ArgumentError("real_imag_parts needs radical-free coefficients")
            re[exp] = coeff.re
            im[exp] = coeff.im
        return self._like(re), self._like(im)

    # -- evaluation --------------------------------------------------------

    def evaluate(self, values: Mapping[str, complex]) -> complex:
        total = 0j
        for exp, coeff in self._terms.items():
            term = complex(coeff)
            for name, e in zip(self.names, exp):
                if e:
                    term *= complex(values[name]) ** e
            total += term
        return total

    def evaluate_exact(self, values: Mapping[str, Coefficient]) -> Coefficient:
        total = Coefficient.of(0)
        for exp, coeff in self._terms.items():
            term = coeff
            for name, e in zip(self.names, exp):
                if e:
                    term = term * (Coefficient.of(values[name]) ** e)
            total = total + term
        return total

    # -- protocol ----------------------------------------------------------

    def __eq__(self, other: object) -> bool:
        if isinstance(other, Polynomial):
            return self.names == other.names and self.weights == other.weights and self._terms == other._terms
        if isinstance(other, (int, Fraction)):
            return self == Polynomial.constant(self.names, other, self.weights)
        return NotImplemented

    def __hash__(self) -> int:
        if self._hash is None:
            self._hash = hash((self.names, self.weights, frozenset(self._terms.items())))
        return self._hash

    def __str__(self) -> str:
        from symquot.poly.textual import format_polynomial

        return format_polynomial(self)

    def __repr__(self) -> str:
        return f"Polynomial({str(self)!r})"


def variables(names: Sequence[str], weights: Sequence[int] | None = None) -> list[Polynomial]:
    """One polynomial per variable of the context, in order."""
    return [Polynomial.variable(names, n, weights) for n in names]


def poly_arith(a: Polynomial, b: Polynomial, kind: str) -> Polynomial:
    """Add or multiply two polynomials of the same context."""
    if kind == "add":
        return a + b
    if kind == "mul":
        return a * b
    raise ArgumentError(f"Unknown arithmetic kind {kind!r}")


def product(polys: Iterable[Polynomial], names: Sequence[str], weights: Sequence[int] | None = None) -> Polynomial:
    result = Polynomial.constant(names, ONE, weights)
    for p in polys:
        result = result * p
    return result
