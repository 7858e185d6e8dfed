"""Inequalities of the quotient, membership of value assignments and point reconstruction.

Everything here works in double precision with the relative tolerance from
the settings.
"""

from __future__ import annotations

import logging
import math
from dataclasses import dataclass
from typing import Mapping, Optional, Sequence

import numpy as np

from symquot.config import get_settings
from symquot.errors import ReconstructionError, SamplerError
from symquot.invariants.generators import GeneratorSet, hilbert_map, point_values, require_type1
from symquot.invariants.relations import PresentationIdeal
from symquot.lattice.hilbert import monoid_hilbert_basis
from symquot.lattice.matrix import IntMatrix
from symquot.poly.polynomial import Polynomial
from symquot.weights.types import TypeInfo

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class Inequality:
    """``generator ≥ 0``."""

    generator: str

    def __str__(self) -> str:
        return f"{self.generator} >= 0"


@dataclass(frozen=True)
class SetMembership:
    inside: bool
    violated: Optional[str] = None

    def __bool__(self) -> bool:
        return self.inside


def semialgebraic_description(gens: GeneratorSet, info: TypeInfo) -> list[Inequality]:
    """``r_i ≥ 0`` for every row and ``p_{j,j} ≥ 0`` for every column block."""
    require_type1(info)
    names = [f"r{i + 1}" for i in range(info.ell)] + [f"p{j + 1}_{j + 1}" for j in range(info.k)]
    return [Inequality(n) for n in names]


def relative_residual(f: Polynomial, values: Mapping[str, complex]) -> float:
    """``|f(values)|`` relative to the sum of the term magnitudes."""
    total = f.evaluate(values)
    scale = 0.0
    for exp, coeff in f.items():
        term = abs(complex(coeff))
        for name, e in zip(f.names, exp):
            if e:
                term *= abs(values[name]) ** e
        scale += term
    return abs(total) / max(scale, 1.0)


def in_semialgebraic_set(
    presentation: PresentationIdeal,
    values: Mapping[str, complex],
    inequalities: Optional[Sequence[Inequality]] = None,
) -> SetMembership:
    """Check relations, conjugation symmetry and the inequalities at ``values``."""
    tol = get_settings().float_tolerance
    gens = presentation.gens
    values = point_values(gens, values)
    for g in presentation.ideal.generators:
        if relative_residual(g, values) > tol:
            return SetMembership(False, f"relation {g}")
    for name in gens.names:
        other = gens.conjugate(name)
        if abs(values[other] - values[name].conjugate()) > tol * max(1.0, abs(values[name])):
            return SetMembership(False, f"conjugation {name} ~ {other}")
    checks = inequalities if inequalities is not None else [Inequality(n) for n in sorted(gens.nonneg)]
    for ineq in checks:
        value = values[ineq.generator]
        if value.real < -tol * max(1.0, abs(value)):
            return SetMembership(False, str(ineq))
    return SetMembership(True)


def _check_relations(presentation: PresentationIdeal, values: Mapping[str, complex]) -> None:
    tol = get_settings().float_tolerance
    for g in presentation.ideal.generators:
        if relative_residual(g, values) > tol:
            raise ReconstructionError(f"Values violate the relation {g}")


def reconstruct_point(
    gens: GeneratorSet,
    info: TypeInfo,
    values: Mapping[str, complex],
    presentation: Optional[PresentationIdeal] = None,
) -> np.ndarray:
    """A point ``z ∈ C^n`` whose generator values are ``values``.

    Moduli come from the diagonal generators, the arguments of the block
    coordinates from one ``q`` with a single nonzero index and the
    off-diagonal ``p``.
    """
    require_type1(info)
    tol = get_settings().float_tolerance
    values = point_values(gens, values)
    if presentation is not None:
        _check_relations(presentation, values)
    ell, k, alpha = info.ell, info.k, info.alpha
    diag = np.array([values[f"p{j + 1}_{j + 1}"].real for j in range(k)])
    rows = np.array([values[f"r{i + 1}"].real for i in range(ell)])
    if (diag < -tol).any() or (rows < -tol).any():
        raise ReconstructionError("Values violate r_i >= 0 or p_jj >= 0")
    diag = np.clip(diag, 0.0, None)
    rows = np.clip(rows, 0.0, None)
    z = np.zeros(ell + k, dtype=complex)
    z[:ell] = np.sqrt(rows)
    if diag.any():
        j0 = int(np.argmax(diag))
        s = [0] * k
        s[j0] = alpha
        q = values["q" + "_".join(str(x) for x in s)]
        theta0 = np.angle(q) / alpha
        for j in range(k):
            if j == j0:
                theta = theta0
            else:
                theta = theta0 - np.angle(values[f"p{j0 + 1}_{j + 1}"])
            z[ell + j] = math.sqrt(diag[j]) * np.exp(1j * theta)
    image = hilbert_map(gens, z)
    for name in gens.names:
        expected, got = values[name], image[name]
        if not np.isclose(got, expected, rtol=tol, atol=tol * max(1.0, float(np.max(np.abs(list(values.values())))))):
            raise ReconstructionError(f"Reconstructed point misses generator {name}: {got} != {expected}")
    logger.debug("Reconstructed point %s", z)
    return z


def shell_sample(A: IntMatrix, rng: np.random.Generator) -> np.ndarray:
    """Random point of the zero level set ``J(z) = 0``.

    ``|z_j|²`` is a random positive combination of the extreme solutions of
    ``A x = 0, x ≥ 0``; the phases are uniform.
    """
    rays = monoid_hilbert_basis(A)
    if not rays:
        raise SamplerError(f"The zero level of {A} is the origin only")
    weights = rng.uniform(0.5, 2.0, size=len(rays))
    squares = sum(w * np.array(r, dtype=float) for w, r in zip(weights, rays))
    squares = squares / max(float(np.max(squares)), 1.0)
    phases = rng.uniform(0.0, 2 * math.pi, size=A.cols)
    return np.sqrt(squares) * np.exp(1j * phases)
