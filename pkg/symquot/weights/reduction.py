"""The circle reduction A → B and the embedding φ: V_B → V_A."""

from __future__ import annotations

import logging
import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence

import numpy as np

from symquot.errors import InternalConsistencyError
from symquot.lattice.matrix import IntMatrix
from symquot.poly.coefficient import Coefficient
from symquot.weights.types import TypeInfo, assemble_blocks, require_faithful_type2

logger = logging.getLogger(__name__)


def reduce_to_circle(info: TypeInfo) -> IntMatrix:
    """``B = (−α, c_1 β, …, c_k β)`` for a faithful Type II_k matrix."""
    require_faithful_type2(info)
    row = (-info.alpha,) + tuple(c_r * info.beta for c_r in info.c)
    if math.gcd(*row) != 1:
        raise InternalConsistencyError(f"Reduced weights {row} are not coprime")
    logger.info("Reduced %dx%d Type %s matrix to %s", info.rows, info.cols, info.kind.value, row)
    return IntMatrix.row_vector(row)


@dataclass(frozen=True)
class EmbeddingMap:
    """Linear map ``V_B → V_A``; target coordinate ``i`` is ``coefficients[i]·z_{sources[i]}``.

    Indices are 0-based. The coefficients are real, so ``w_i`` maps with the
    same coefficient onto ``w_{sources[i]}``.
    """

    source_dim: int
    target_dim: int
    sources: tuple[int, ...]
    coefficients: tuple[Coefficient, ...]

    def pullback_monomial(self, u: Sequence[int], v: Sequence[int]) -> tuple[Coefficient, tuple[int, ...], tuple[int, ...]]:
        """Image of ``z^u w^v`` (target coordinates) as ``coeff·z^u' w^v'`` on the source."""
        coeff = Coefficient.of(1)
        du = [0] * self.source_dim
        dv = [0] * self.source_dim
        for i, (ui, vi) in enumerate(zip(u, v)):
            if ui or vi:
                coeff = coeff * self.coefficients[i] ** (ui + vi)
                du[self.sources[i]] += ui
                dv[self.sources[i]] += vi
        return coeff, tuple(du), tuple(dv)

    def apply(self, point: Sequence[complex]) -> np.ndarray:
        source = np.asarray(point, dtype=complex)
        scale = np.array([complex(c).real for c in self.coefficients])
        return scale * source[list(self.sources)]

    def squared_sum(self) -> Fraction:
        """Σ of squared coefficients on the first source coordinate."""
        total = Coefficient.of(0)
        for src, coeff in zip(self.sources, self.coefficients):
            if src == 0:
                total = total + coeff.square()
        return total.re


def embedding_map(info: TypeInfo) -> EmbeddingMap:
    """φ(z_1, …, z_{k+1}) = (√(m_1/β) z_1, …, √(m_ℓ/β) z_1, z_2, …, z_{k+1})."""
    require_faithful_type2(info)
    sources = (0,) * info.ell + tuple(range(1, info.k + 1))
    coefficients = tuple(Coefficient.sqrt(Fraction(m_i, info.beta)) for m_i in info.m) + (Coefficient.of(1),) * info.k
    return EmbeddingMap(info.k + 1, info.ell + info.k, sources, coefficients)


def inverse_embedding(info: TypeInfo, point: Sequence[complex]) -> np.ndarray:
    """Orbit-level inverse ``u ↦ (√(β/m_1) u_1, u_{ℓ+1}, …, u_{ℓ+k})``."""
    u = np.asarray(point, dtype=complex)
    head = math.sqrt(info.beta / info.m[0]) * u[0]
    return np.concatenate(([head], u[info.ell:]))


def orbit_map_identity(info: TypeInfo) -> bool:
    """Check that ``t ↦ (t^{α/a_1}, …, t^{α/a_ℓ})`` carries the A-weights onto the B-weights."""
    require_faithful_type2(info)
    lam = [info.alpha // a_i for a_i in info.a]
    A = assemble_blocks(info.a, info.n, info.c)
    B = reduce_to_circle(info)
    target = [B.entries[0][0]] * info.ell + list(B.entries[0][1:])
    pulled = [sum(l * x for l, x in zip(lam, col)) for col in A.columns()]
    return pulled == target
