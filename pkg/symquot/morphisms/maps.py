"""Graded maps between invariant presentations.

A map sends each source generator to a polynomial in the target
generators. Coefficients may carry one square root per term; such maps are
applied through :class:`RadicalSum`, which keeps the parts with different
radicands apart.
"""

from __future__ import annotations

import logging
from dataclasses import dataclass, field
from fractions import Fraction
from pathlib import Path
from typing import Mapping, Optional

from sympy import Matrix, im, re

from symquot.config import get_settings
from symquot.errors import ArgumentError, UnsupportedCoefficientError
from symquot.invariants.generators import GeneratorSet, invariant_generators, require_type1, type1_generators
from symquot.invariants.poisson import rewrite_in_generators
from symquot.lattice.matrix import IntMatrix
from symquot.poly.coefficient import Coefficient, Scalar
from symquot.poly.polynomial import Polynomial
from symquot.utils.file_utils import read_json
from symquot.weights.reduction import embedding_map, reduce_to_circle
from symquot.weights.types import TypeInfo, assemble

logger = logging.getLogger(__name__)


# ---------------------------------------------------------------------------
# Sums over distinct radicands
# ---------------------------------------------------------------------------


class RadicalSum:
    """``Σ_r √r · f_r`` with every ``f_r`` radical-free, over one variable context."""

    def __init__(self, names, weights, parts: Optional[dict[int, Polynomial]] = None) -> None:
        self.names = tuple(names)
        self.weights = tuple(weights)
        self.parts: dict[int, Polynomial] = {r: p for r, p in (parts or {}).items() if not p.is_zero()}

    @classmethod
    def of(cls, poly: Polynomial) -> "RadicalSum":
        return cls(poly.names, poly.weights, poly.split_radicands())

    @classmethod
    def constant(cls, names, weights, value: Scalar = 1) -> "RadicalSum":
        return cls.of(Polynomial.constant(names, value, weights))

    def _add_part(self, parts: dict[int, Polynomial], coeff: Coefficient, poly: Polynomial) -> None:
        scaled = poly.scale(Coefficient(coeff.gaussian))
        r = coeff.radicand
        parts[r] = parts[r] + scaled if r in parts else scaled

    def __add__(self, other: "RadicalSum") -> "RadicalSum":
        parts = dict(self.parts)
        for r, p in other.parts.items():
            parts[r] = parts[r] + p if r in parts else p
        return RadicalSum(self.names, self.weights, parts)

    def __neg__(self) -> "RadicalSum":
        return RadicalSum(self.names, self.weights, {r: -p for r, p in self.parts.items()})

    def __sub__(self, other: "RadicalSum") -> "RadicalSum":
        return self + (-other)

    def __mul__(self, other: "RadicalSum") -> "RadicalSum":
        parts: dict[int, Polynomial] = {}
        for r1, f1 in self.parts.items():
            for r2, f2 in other.parts.items():
                root = Coefficient.sqrt(r1) * Coefficient.sqrt(r2)
                self._add_part(parts, root, f1 * f2)
        return RadicalSum(self.names, self.weights, parts)

    def __pow__(self, exponent: int) -> "RadicalSum":
        result = RadicalSum.constant(self.names, self.weights)
        for _ in range(exponent):
            result = result * self
        return result

    def scale(self, coeff: Scalar) -> "RadicalSum":
        coeff = Coefficient.of(coeff)
        parts: dict[int, Polynomial] = {}
        for r, f in self.parts.items():
            self._add_part(parts, Coefficient.sqrt(r) * coeff, f)
        return RadicalSum(self.names, self.weights, parts)

    def is_zero(self) -> bool:
        return not self.parts

    def to_polynomial(self) -> Polynomial:
        """Collapse to one polynomial; fails when two radicands share a monomial."""
        result = Polynomial.zero(self.names, self.weights)
        for r, f in sorted(self.parts.items()):
            result = result + f.scale(Coefficient.sqrt(r))
        return result

    def __str__(self) -> str:
        if not self.parts:
            return "0"
        return " + ".join(f"sqrt({r})*({f})" if r != 1 else f"({f})" for r, f in sorted(self.parts.items()))


# ---------------------------------------------------------------------------
# Maps
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class GradedMonomialMap:
    """Assignment ``source generator ↦ polynomial in the target generators``."""

    name: str
    source: GeneratorSet
    target: GeneratorSet
    images: Mapping[str, Polynomial] = field(hash=False)

    def __post_init__(self) -> None:
        missing = [n for n in self.source.names if n not in self.images]
        if missing:
            raise ArgumentError(f"Map {self.name} has no image for {missing}")
        for n, img in self.images.items():
            if img.names != self.target.names:
                raise ArgumentError(f"Image of {n} is not written in the target generators")

    @property
    def is_monomial(self) -> bool:
        return all(len(img) <= 1 for img in self.images.values())

    @property
    def has_radicals(self) -> bool:
        return any(img.has_radicals() for img in self.images.values())

    def radical_generators(self) -> set[str]:
        return {n for n, img in self.images.items() if img.has_radicals()}

    def apply_radical(self, f: Polynomial) -> RadicalSum:
        """Image of a polynomial in the source generators."""
        if f.names != self.source.names:
            raise ArgumentError("Polynomial is not written in the source generators")
        names, weights = self.target.names, self.target.degrees
        images = {n: RadicalSum.of(img) for n, img in self.images.items()}
        total = RadicalSum(names, weights)
        for exp, coeff in f.items():
            term = RadicalSum.constant(names, weights)
            for n, e in zip(f.names, exp):
                if e:
                    term = term * images[n] ** e
            total = total + term.scale(coeff)
        return total

    def apply(self, f: Polynomial) -> Polynomial:
        return self.apply_radical(f).to_polynomial()

    def to_json(self) -> dict[str, str]:
        return {n: str(self.images[n]) for n in self.source.names}

    @classmethod
    def from_strings(cls, name: str, source: GeneratorSet, target: GeneratorSet, images: Mapping[str, str]) -> "GradedMonomialMap":
        unknown = sorted(set(images) - set(source.names))
        if unknown:
            raise ArgumentError(f"Map {name} assigns images to unknown generators {unknown}")
        return cls(name, source, target, {n: target.parse(text) for n, text in images.items()})


def identity_map(gens: GeneratorSet) -> GradedMonomialMap:
    return GradedMonomialMap("identity", gens, gens, {n: gens.variable(n) for n in gens.names})


def scaling_map(gens: GeneratorSet, factors: Mapping[str, Scalar]) -> GradedMonomialMap:
    """``g ↦ factors[g]·g``; unnamed generators are fixed."""
    images = {n: gens.variable(n).scale(factors.get(n, 1)) for n in gens.names}
    return GradedMonomialMap("scaling", gens, gens, images)


def compose(first: GradedMonomialMap, second: GradedMonomialMap) -> GradedMonomialMap:
    """``second ∘ first``."""
    if first.target.names != second.source.names:
        raise ArgumentError(f"Cannot compose {first.name} into {second.name}: generator sets differ")
    images = {n: second.apply(img) for n, img in first.images.items()}
    return GradedMonomialMap(f"{second.name}∘{first.name}", first.source, second.target, images)


def restrict(mapping: GradedMonomialMap, max_degree: int) -> GradedMonomialMap:
    """The map on the subalgebra generated in degrees ``≤ max_degree``."""
    source = mapping.source.restrict(max_degree)
    target = mapping.target.restrict(max_degree)
    images = {n: mapping.images[n].embed(target.names, target.degrees) for n in source.names}
    return GradedMonomialMap(f"{mapping.name}|≤{max_degree}", source, target, images)


def _linear_row(img: Polynomial, columns: list[str]) -> list:
    row = [0] * len(columns)
    for exp, coeff in img.items():
        if sum(exp) != 1:
            raise ArgumentError(f"Image {img} is not linear in the target generators")
        if coeff.radicand != 1:
            raise UnsupportedCoefficientError("Inverting maps with radical coefficients is not supported")
        name = img.names[exp.index(1)]
        row[columns.index(name)] = coeff.to_sympy()
    return row


def _from_sympy(value) -> Coefficient:
    real, imag = Fraction(str(re(value))), Fraction(str(im(value)))
    return Coefficient.complex(real, imag)


def inverse(mapping: GradedMonomialMap) -> GradedMonomialMap:
    """Inverse of a map that is linear and invertible in every degree."""
    src, dst = mapping.source, mapping.target
    images: dict[str, Polynomial] = {}
    for degree in sorted(set(src.degrees)):
        rows_names = [g.name for g in src.generators if g.degree == degree]
        cols_names = [g.name for g in dst.generators if g.degree == degree]
        if len(rows_names) != len(cols_names):
            raise ArgumentError(f"Degree {degree} has {len(rows_names)} source and {len(cols_names)} target generators")
        M = Matrix([_linear_row(mapping.images[n], cols_names) for n in rows_names])
        if M.det() == 0:
            raise ArgumentError(f"{mapping.name} is not invertible in degree {degree}")
        inv = M.inv()
        for j, t in enumerate(cols_names):
            image = src.zero()
            for i, s in enumerate(rows_names):
                if inv[j, i] != 0:
                    image = image + src.variable(s).scale(_from_sympy(inv[j, i]))
            images[t] = image
    return GradedMonomialMap(f"{mapping.name}^-1", dst, src, images)


# ---------------------------------------------------------------------------
# Built-in maps
# ---------------------------------------------------------------------------


def pullback_map(info: TypeInfo, source: Optional[GeneratorSet] = None, target_prefix: str = "u") -> GradedMonomialMap:
    """Pullback along the embedding ``φ: V_B → V_A`` of a faithful Type II_k matrix."""
    phi = embedding_map(info)
    B = reduce_to_circle(info)
    if source is None:
        source = invariant_generators(assemble(info), "p")
    target = invariant_generators(B, target_prefix)
    images = {}
    for g in source.generators:
        coeff, du, dv = phi.pullback_monomial(g.u, g.v)
        ambient = Polynomial.monomial(target.ambient, du + dv, coeff)
        images[g.name] = rewrite_in_generators(target, ambient)
    return GradedMonomialMap("pullback", source, target, images)


def theorem_map(info: TypeInfo) -> GradedMonomialMap:
    """``r_i ↦ (m_i/β) u w``, ``p_{i,j} ↦ u_{i+1} w_{j+1}``, ``q_s ↦ κ u_1^β Π u_{j+1}^{s_j}``."""
    require_type1(info)
    mapping = pullback_map(info, type1_generators(info))
    return GradedMonomialMap("thm45", mapping.source, mapping.target, mapping.images)


def _load_bundled(filename: str) -> dict:
    return read_json(Path(get_settings().data_dir) / filename)


def map_from_json(data: dict, name: str = "map") -> GradedMonomialMap:
    """Build a map from ``{"source": matrix, "target": matrix, "source_prefix", "target_prefix", "images"}``."""
    source = invariant_generators(IntMatrix.from_rows(data["source"]), data.get("source_prefix", "p"))
    target = invariant_generators(IntMatrix.from_rows(data["target"]), data.get("target_prefix", "q"))
    return GradedMonomialMap.from_strings(data.get("name", name), source, target, data["images"])


BUILTIN_NAMES = ("psi", "psi_inverse", "phi_star", "thm45", "lemma32")


def builtin_maps(which: str, info: Optional[TypeInfo] = None) -> GradedMonomialMap:
    """``psi``, ``psi_inverse``, ``phi_star``, ``thm45`` (Type I info) or ``lemma32`` (Type II info)."""
    if which == "psi":
        return map_from_json(_load_bundled("psi.json"), "psi")
    if which == "psi_inverse":
        return inverse(builtin_maps("psi"))
    if which == "phi_star":
        return map_from_json(_load_bundled("phi_star.json"), "phi_star")
    if which in ("thm45", "lemma32"):
        if info is None:
            raise ArgumentError(f"Built-in map {which!r} needs weight-matrix data")
        return theorem_map(info) if which == "thm45" else pullback_map(info)
    raise ArgumentError(f"Unknown built-in map {which!r}; choose from {', '.join(BUILTIN_NAMES)}")
