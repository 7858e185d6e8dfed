"""Gröbner bases and ideal predicates over the Gaussian rationals.

The heavy lifting is sympy's improved Buchberger (Gebauer–Möller
criteria, reduced monic output) on ``PolyRing`` elements. This module
converts to and from :class:`Polynomial`, supplies weighted and
elimination term orders, and certifies results by membership.
"""

from __future__ import annotations

import logging
from dataclasses import dataclass, field
from functools import lru_cache
from typing import Sequence

from sympy.polys.domains import QQ, QQ_I
from sympy.polys.groebnertools import groebner as _sympy_groebner
from sympy.polys.groebnertools import is_groebner
from sympy.polys.orderings import MonomialOrder
from sympy.polys.rings import PolyRing

from symquot.config import get_settings
from symquot.errors import ArgumentError, InternalConsistencyError, UnsupportedCoefficientError
from symquot.poly.coefficient import Coefficient
from symquot.poly.polynomial import Polynomial
from symquot.utils.stats import add_stat, timed

logger = logging.getLogger(__name__)


# ---------------------------------------------------------------------------
# Term orders
# ---------------------------------------------------------------------------


class WeightedGrevlex(MonomialOrder):
    """Graded reverse lexicographic order for the weighted degree."""

    alias = "wgrevlex"
    is_global = True

    def __init__(self, weights: Sequence[int]) -> None:
        self.weights = tuple(weights)

    def __call__(self, monomial):
        return (
            sum(w * e for w, e in zip(self.weights, monomial)),
            tuple(reversed([-e for e in monomial])),
        )

    def __eq__(self, other):
        return isinstance(other, WeightedGrevlex) and self.weights == other.weights

    def __hash__(self):
        return hash((self.__class__, self.weights))

    def __repr__(self):
        return f"WeightedGrevlex({self.weights})"


class EliminationOrder(MonomialOrder):
    """Block order: any monomial in the first ``count`` variables beats the rest.

    Each block is compared by weighted grevlex, so a Gröbner basis for this
    order restricted to polynomials free of the first block is a basis of
    the elimination ideal.
    """

    alias = "elim"
    is_global = True

    def __init__(self, count: int, weights: Sequence[int]) -> None:
        self.count = count
        self.weights = tuple(weights)

    def __call__(self, monomial):
        head, tail = monomial[: self.count], monomial[self.count:]
        wh, wt = self.weights[: self.count], self.weights[self.count:]
        return (
            sum(w * e for w, e in zip(wh, head)),
            tuple(reversed([-e for e in head])),
            sum(w * e for w, e in zip(wt, tail)),
            tuple(reversed([-e for e in tail])),
        )

    def __eq__(self, other):
        return isinstance(other, EliminationOrder) and (self.count, self.weights) == (other.count, other.weights)

    def __hash__(self):
        return hash((self.__class__, self.count, self.weights))

    def __repr__(self):
        return f"EliminationOrder({self.count}, {self.weights})"


def resolve_order(order: MonomialOrder | str | None, weights: Sequence[int]) -> MonomialOrder | str:
    if order is None or order == "wgrevlex":
        return WeightedGrevlex(weights)
    return order


# ---------------------------------------------------------------------------
# Conversion
# ---------------------------------------------------------------------------


def _needs_gaussian(polys: Sequence[Polynomial]) -> bool:
    return any(not c.is_real() for p in polys for c in p.terms.values())


def _check_radical_free(polys: Sequence[Polynomial]) -> None:
    for p in polys:
        if p.has_radicals():
            raise UnsupportedCoefficientError(
                f"Gröbner routines need radicand-1 coefficients; got {p}"
            )


@lru_cache(maxsize=128)
def _ring(names: tuple[str, ...], gaussian: bool, order: MonomialOrder | str) -> PolyRing:
    domain = QQ_I if gaussian else QQ
    return PolyRing(names, domain, order)


def to_ring(poly: Polynomial, ring: PolyRing):
    conv = (lambda c: c.gaussian) if ring.domain == QQ_I else (lambda c: c.gaussian.x)
    return ring.from_dict({exp: conv(c) for exp, c in poly.terms.items()})


def from_ring(element, names: Sequence[str], weights: Sequence[int]) -> Polynomial:
    domain = element.ring.domain
    return Polynomial(names, {exp: Coefficient(QQ_I.convert_from(c, domain)) for exp, c in element.items()}, weights)


# ---------------------------------------------------------------------------
# Ideals
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class IdealBasis:
    """Generators of an ideal, optionally with a cached reduced Gröbner basis."""

    names: tuple[str, ...]
    weights: tuple[int, ...]
    generators: tuple[Polynomial, ...]
    groebner: tuple[Polynomial, ...] | None = field(default=None, compare=False)
    order: MonomialOrder | str | None = field(default=None, compare=False)

    @classmethod
    def of(cls, generators: Sequence[Polynomial], names: Sequence[str] | None = None, weights: Sequence[int] | None = None) -> "IdealBasis":
        gens = tuple(g for g in generators if not g.is_zero())
        if names is None:
            if not generators:
                raise ArgumentError("An empty ideal needs an explicit variable context")
            names, weights = generators[0].names, generators[0].weights
        weights = tuple(weights) if weights is not None else (1,) * len(names)
        for g in gens:
            if g.names != tuple(names) or g.weights != weights:
                raise ArgumentError("Ideal generators must share one variable context")
        return cls(tuple(names), weights, gens)

    def with_generators(self, extra: Sequence[Polynomial]) -> "IdealBasis":
        return IdealBasis.of(list(self.generators) + list(extra), self.names, self.weights)

    def is_zero(self) -> bool:
        return not self.generators

    def __str__(self) -> str:
        return "<" + ", ".join(str(g) for g in self.generators) + ">"


def _canonical(polys: Sequence[Polynomial]) -> tuple[Polynomial, ...]:
    return tuple(sorted(polys, key=lambda p: [p._order_key(e) for e, _ in p.items()]))


def groebner_basis(I: IdealBasis, order: MonomialOrder | str | None = None) -> IdealBasis:
    """Reduced monic Gröbner basis of ``I``; certified by membership of every input generator."""
    _check_radical_free(I.generators)
    order = resolve_order(order, I.weights)
    if I.is_zero():
        return IdealBasis(I.names, I.weights, (), (), order)
    gaussian = _needs_gaussian(I.generators)
    ring = _ring(I.names, gaussian, order)
    elements = [to_ring(g, ring) for g in I.generators]
    with timed("groebner"):
        G = _sympy_groebner(elements, ring, method=get_settings().groebner_method)
    add_stat("groebner_elements", len(G))
    if not is_groebner(G, ring) or any(f.rem(G) for f in elements):
        raise InternalConsistencyError("Gröbner basis failed its membership certificate")
    basis = _canonical([from_ring(g, I.names, I.weights) for g in G])
    logger.info("Gröbner basis in %d variables (%r): %d -> %d elements", len(I.names), order, len(I.generators), len(basis))
    return IdealBasis(I.names, I.weights, basis, basis, order)


def ensure_groebner(I: IdealBasis, order: MonomialOrder | str | None = None) -> IdealBasis:
    wanted = resolve_order(order, I.weights)
    if I.groebner is not None and I.order == wanted:
        return I
    return _cached_groebner(I, wanted)


@lru_cache(maxsize=64)
def _cached_groebner(I: IdealBasis, order: MonomialOrder | str) -> IdealBasis:
    return groebner_basis(I, order)


def normal_form(f: Polynomial, I: IdealBasis, order: MonomialOrder | str | None = None) -> Polynomial:
    """Remainder of ``f`` modulo a Gröbner basis of ``I``.

    Gaussian ``f`` against a rational ideal is reduced part by part, which
    is exact because the basis is rational.
    """
    _check_radical_free([f])
    if f.names != I.names or f.weights != I.weights:
        raise ArgumentError("Polynomial and ideal live in different variable contexts")
    G = ensure_groebner(I, order)
    if G.is_zero():
        return f
    gaussian = _needs_gaussian(G.groebner)
    ring = _ring(G.names, gaussian, G.order)
    basis = [to_ring(g, ring) for g in G.groebner]
    if gaussian or f.is_rational():
        return from_ring(to_ring(f, ring).rem(basis), f.names, f.weights)
    re, im = f.real_imag_parts()
    nf_re = from_ring(to_ring(re, ring).rem(basis), f.names, f.weights)
    nf_im = from_ring(to_ring(im, ring).rem(basis), f.names, f.weights)
    return nf_re + nf_im.scale(Coefficient.complex(0, 1))


@dataclass(frozen=True)
class Membership:
    """Result of a membership test with its normal-form certificate."""

    member: bool
    normal_form: Polynomial

    def __bool__(self) -> bool:
        return self.member


def ideal_member(f: Polynomial, I: IdealBasis, order: MonomialOrder | str | None = None) -> Membership:
    nf = normal_form(f, I, order)
    return Membership(nf.is_zero(), nf)


def ideal_equal(I: IdealBasis, J: IdealBasis) -> bool:
    if I.names != J.names:
        raise ArgumentError("Ideals live in different variable contexts")
    return all(ideal_member(f, J) for f in I.generators) and all(ideal_member(g, I) for g in J.generators)


# ---------------------------------------------------------------------------
# Saturation and radical membership
# ---------------------------------------------------------------------------

_TAG = "_t"


def _tagged(I: IdealBasis) -> tuple[tuple[str, ...], tuple[int, ...]]:
    if _TAG in I.names:
        raise ArgumentError(f"Variable name {_TAG!r} is reserved")
    return (_TAG,) + I.names, (1,) + I.weights


def saturate(I: IdealBasis, f: Polynomial) -> IdealBasis:
    """``I : f^∞`` by eliminating ``t`` from ``I + ⟨1 − t·f⟩``."""
    names, weights = _tagged(I)
    lifted = [g.embed(names, weights) for g in I.generators]
    t = Polynomial.variable(names, _TAG, weights)
    lifted.append(1 - t * f.embed(names, weights))
    G = groebner_basis(IdealBasis.of(lifted, names, weights), EliminationOrder(1, weights))
    kept = [g for g in G.generators if _TAG not in g.support()]
    return IdealBasis.of([Polynomial(I.names, {e[1:]: c for e, c in g.terms.items()}, I.weights) for g in kept], I.names, I.weights)


def radical_member(f: Polynomial, I: IdealBasis) -> bool:
    """``f ∈ √I`` via ``1 ∈ I + ⟨1 − t·f⟩``."""
    names, weights = _tagged(I)
    lifted = [g.embed(names, weights) for g in I.generators]
    t = Polynomial.variable(names, _TAG, weights)
    lifted.append(1 - t * f.embed(names, weights))
    G = groebner_basis(IdealBasis.of(lifted, names, weights), "grevlex")
    return any(g.degree() == 0 for g in G.generators)


def is_unit_ideal(I: IdealBasis) -> bool:
    return any(g.degree() == 0 for g in ensure_groebner(I).generators)
