"""Monomial generators of the off-shell invariant ring.

Invariants live in complexified coordinates ``z_1 … z_n, w_1 … w_n`` with
``w_i`` standing for the conjugate of ``z_i``. A monomial ``z^u w^v`` is
torus invariant exactly when ``A u = A v``.
"""

from __future__ import annotations

import logging
from dataclasses import dataclass
from itertools import product as cartesian
from typing import Mapping, Optional, Sequence

import numpy as np

from symquot.config import get_settings
from symquot.errors import ArgumentError, GuardError, InternalConsistencyError, PreconditionError
from symquot.lattice.hilbert import monoid_hilbert_basis
from symquot.lattice.matrix import ExponentVector, IntMatrix
from symquot.poly.polynomial import Polynomial
from symquot.utils.stats import add_stat
from symquot.weights.types import TypeInfo, TypeKind, assemble, is_faithful_type2

logger = logging.getLogger(__name__)


def ambient_names(n: int) -> tuple[str, ...]:
    return tuple(f"z{i}" for i in range(1, n + 1)) + tuple(f"w{i}" for i in range(1, n + 1))


@dataclass(frozen=True)
class Generator:
    name: str
    u: ExponentVector
    v: ExponentVector

    @property
    def degree(self) -> int:
        return sum(self.u) + sum(self.v)

    @property
    def is_diagonal(self) -> bool:
        return self.u == self.v

    @property
    def exponent(self) -> ExponentVector:
        return self.u + self.v


@dataclass(frozen=True)
class GeneratorSet:
    """Named invariant monomials together with the matrix they belong to."""

    matrix: IntMatrix
    generators: tuple[Generator, ...]
    nonneg: frozenset[str]

    def __post_init__(self) -> None:
        names = [g.name for g in self.generators]
        if len(set(names)) != len(names):
            raise ArgumentError(f"Generator names are not unique: {names}")
        for g in self.generators:
            if self.matrix.apply(g.u) != self.matrix.apply(g.v):
                raise InternalConsistencyError(f"Generator {g.name} is not torus invariant")
        if not self.nonneg <= {g.name for g in self.generators if g.is_diagonal}:
            raise ArgumentError("Only diagonal generators can be flagged nonnegative")

    # -- lookup ------------------------------------------------------------

    @property
    def n(self) -> int:
        return self.matrix.cols

    @property
    def names(self) -> tuple[str, ...]:
        return tuple(g.name for g in self.generators)

    @property
    def degrees(self) -> tuple[int, ...]:
        return tuple(g.degree for g in self.generators)

    @property
    def ambient(self) -> tuple[str, ...]:
        return ambient_names(self.n)

    def __len__(self) -> int:
        return len(self.generators)

    def __getitem__(self, name: str) -> Generator:
        for g in self.generators:
            if g.name == name:
                return g
        raise ArgumentError(f"Unknown generator {name!r}")

    def find(self, u: Sequence[int], v: Sequence[int]) -> Optional[str]:
        key = (tuple(u), tuple(v))
        for g in self.generators:
            if (g.u, g.v) == key:
                return g.name
        return None

    def conjugate(self, name: str) -> str:
        g = self[name]
        other = self.find(g.v, g.u)
        if other is None:
            raise InternalConsistencyError(f"Generator set is not closed under conjugation at {name}")
        return other

    def diagonal(self, j: int) -> str:
        """Name of ``z_j w_j`` (0-based ``j``)."""
        unit = tuple(int(i == j) for i in range(self.n))
        name = self.find(unit, unit)
        if name is None:
            raise InternalConsistencyError(f"z{j + 1}w{j + 1} is missing from the generators")
        return name

    def exponent_pairs(self) -> set[tuple[ExponentVector, ExponentVector]]:
        return {(g.u, g.v) for g in self.generators}

    # -- polynomials -------------------------------------------------------

    def variable(self, name: str) -> Polynomial:
        return Polynomial.variable(self.names, name, self.degrees)

    def zero(self) -> Polynomial:
        return Polynomial.zero(self.names, self.degrees)

    def monomial(self, name: str) -> Polynomial:
        """The generator as a polynomial in the ambient coordinates."""
        return Polynomial.monomial(self.ambient, self[name].exponent)

    def parse(self, text: str) -> Polynomial:
        from symquot.poly.textual import parse_polynomial

        return parse_polynomial(text, self.names, self.degrees)

    def restrict(self, max_degree: int) -> "GeneratorSet":
        kept = tuple(g for g in self.generators if g.degree <= max_degree)
        return GeneratorSet(self.matrix, kept, frozenset(n for n in self.nonneg if any(g.name == n for g in kept)))

    def to_json(self) -> list[dict]:
        return [
            {
                "name": g.name,
                "u": list(g.u),
                "v": list(g.v),
                "degree": g.degree,
                "monomial": str(self.monomial(g.name)),
                "nonneg": g.name in self.nonneg,
            }
            for g in self.generators
        ]


# ---------------------------------------------------------------------------
# Generic construction
# ---------------------------------------------------------------------------


def _check_guards(A: IntMatrix, force: bool) -> None:
    limit = get_settings().max_columns
    if A.cols > limit and not force:
        raise GuardError(f"Invariant enumeration is limited to {limit} columns; pass force=True to override")


def _generic_order(vectors: Sequence[ExponentVector], n: int) -> list[tuple[ExponentVector, ExponentVector]]:
    """Degree, then diagonal ``z_i w_i`` by ``i``, then conjugate pairs by ``u`` descending."""
    pairs = [(x[:n], x[n:]) for x in vectors]
    by_degree: dict[int, list] = {}
    for u, v in pairs:
        by_degree.setdefault(sum(u) + sum(v), []).append((u, v))
    ordered: list[tuple[ExponentVector, ExponentVector]] = []
    for degree in sorted(by_degree):
        group = by_degree[degree]
        diagonal = sorted((p for p in group if p[0] == p[1]), key=lambda p: [-x for x in p[0]])
        heads = sorted((p for p in group if p[0] > p[1]), key=lambda p: p[0], reverse=True)
        ordered.extend(diagonal)
        for u, v in heads:
            ordered.extend([(u, v), (v, u)])
    return ordered


def invariant_generators(A: IntMatrix, prefix: str = "p", force: bool = False) -> GeneratorSet:
    """Hilbert basis of ``{(u, v) : A u = A v}`` as named monomials ``prefix0, prefix1, …``."""
    _check_guards(A, force)
    lifted = A.cotangent_lift()
    basis = monoid_hilbert_basis(lifted)
    ordered = _generic_order(basis, A.cols)
    if len(ordered) != len(basis):
        raise InternalConsistencyError("Invariant basis is not closed under conjugation")
    gens = tuple(Generator(f"{prefix}{idx}", u, v) for idx, (u, v) in enumerate(ordered))
    nonneg = frozenset(g.name for g in gens if g.is_diagonal)
    add_stat("generators", len(gens))
    logger.info("Invariant generators of %s: %d monomials, degrees %s", A, len(gens), sorted({g.degree for g in gens}))
    return GeneratorSet(A, gens, nonneg)


# ---------------------------------------------------------------------------
# Type I_k closed form
# ---------------------------------------------------------------------------


def compositions(total: int, parts: int) -> list[tuple[int, ...]]:
    """Nonnegative ``parts``-tuples summing to ``total``, lexicographically descending."""
    if parts == 1:
        return [(total,)]
    out = []
    for first in range(total, -1, -1):
        out.extend((first,) + rest for rest in compositions(total - first, parts - 1))
    return out


def s_label(s: Sequence[int]) -> str:
    return "_".join(str(x) for x in s)


def require_type1(info: TypeInfo) -> None:
    if info.kind is not TypeKind.TYPE_I:
        raise PreconditionError(f"Closed forms need a Type I weight matrix, got {info.kind.value}")
    if not is_faithful_type2(info):
        raise PreconditionError("Closed forms need a faithful weight matrix")
    if tuple(info.column_order) != tuple(range(info.cols)):
        raise PreconditionError("Closed forms need the literal block column order")


def type1_generators(info: TypeInfo, force: bool = False) -> GeneratorSet:
    """``r_i``, ``p_{i,j}``, ``q_s`` and ``qbar_s`` of a faithful Type I_k matrix."""
    require_type1(info)
    if info.alpha > get_settings().max_alpha and not force:
        raise GuardError(f"α = {info.alpha} exceeds the enumeration guard")
    A = assemble(info)
    ell, k, n = info.ell, info.k, info.cols
    zero = (0,) * n

    def unit(i: int) -> tuple[int, ...]:
        return tuple(int(x == i) for x in range(n))

    gens: list[Generator] = [Generator(f"r{i + 1}", unit(i), unit(i)) for i in range(ell)]
    for i in range(k):
        for j in range(k):
            gens.append(Generator(f"p{i + 1}_{j + 1}", unit(ell + i), unit(ell + j)))
    holomorphic = []
    for s in compositions(info.alpha, k):
        holomorphic.append((s, tuple(info.m) + tuple(s)))
    for s, u in holomorphic:
        gens.append(Generator(f"q{s_label(s)}", u, zero))
    for s, u in holomorphic:
        gens.append(Generator(f"qbar{s_label(s)}", zero, u))
    nonneg = frozenset([f"r{i + 1}" for i in range(ell)] + [f"p{j + 1}_{j + 1}" for j in range(k)])
    return GeneratorSet(A, tuple(gens), nonneg)


# ---------------------------------------------------------------------------
# Evaluation
# ---------------------------------------------------------------------------


def ambient_polynomial(gens: GeneratorSet, f: Polynomial) -> Polynomial:
    """Substitute every generator by its monomial in ``z, w``."""
    images = {name: gens.monomial(name) for name in gens.names}
    return f.substitute(images, gens.ambient)


def hilbert_map(
    gens: GeneratorSet,
    z: Sequence[complex],
    w: Optional[Sequence[complex]] = None,
) -> dict[str, complex]:
    """Generator values at ``z`` (with ``w = conj z`` unless given)."""
    z = np.asarray(z, dtype=complex)
    w = np.conj(z) if w is None else np.asarray(w, dtype=complex)
    values = {}
    for g in gens.generators:
        values[g.name] = complex(np.prod(z ** np.array(g.u)) * np.prod(w ** np.array(g.v)))
    return values


def point_values(gens: GeneratorSet, values: Mapping[str, complex]) -> dict[str, complex]:
    missing = [n for n in gens.names if n not in values]
    if missing:
        raise ArgumentError(f"Missing generator values for {missing}")
    return {n: complex(values[n]) for n in gens.names}


def monomials_of_degree(gens: GeneratorSet, degree: int) -> list[ExponentVector]:
    """Exponent vectors over the generators of weighted degree ``degree``."""
    weights = gens.degrees
    ranges = [range(degree // w + 1) for w in weights]
    return [e for e in cartesian(*ranges) if sum(a * b for a, b in zip(e, weights)) == degree]
