"""Moment map components ``J_i = ½ Σ_j a_ij z_j w_j``."""

from __future__ import annotations

import logging
from dataclasses import dataclass
from fractions import Fraction

from symquot.invariants.generators import GeneratorSet, ambient_names
from symquot.lattice.matrix import IntMatrix
from symquot.poly.polynomial import Polynomial
from symquot.weights.reduction import embedding_map, reduce_to_circle
from symquot.weights.types import TypeInfo, assemble_blocks

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class MomentForm:
    """Row ``index`` of the moment map; ``coefficients[j]`` multiplies ``z_j w_j``."""

    index: int
    coefficients: tuple[Fraction, ...]

    def ambient(self) -> Polynomial:
        n = len(self.coefficients)
        names = ambient_names(n)
        terms = {}
        for j, c in enumerate(self.coefficients):
            exp = [0] * (2 * n)
            exp[j] = exp[n + j] = 1
            terms[tuple(exp)] = c
        return Polynomial(names, terms)

    def in_generators(self, gens: GeneratorSet) -> Polynomial:
        """``2 J_i`` written in the diagonal generators, integer coefficients."""
        result = gens.zero()
        for j, c in enumerate(self.coefficients):
            if c:
                result = result + gens.variable(gens.diagonal(j)).scale(2 * c)
        return result


def moment_forms(A: IntMatrix) -> list[MomentForm]:
    return [
        MomentForm(i, tuple(Fraction(a, 2) for a in A.row(i)))
        for i in range(A.rows)
    ]


def shell_forms(gens: GeneratorSet) -> list[Polynomial]:
    """On-shell linear forms ``Σ_j a_ij · (z_j w_j)`` in generator coordinates."""
    return [form.in_generators(gens) for form in moment_forms(gens.matrix)]


def shell_identity(info: TypeInfo) -> bool:
    """Exact check that ``(J_A)_i ∘ φ = (n_i / β) · J_B`` for every row ``i``."""
    phi = embedding_map(info)
    B = reduce_to_circle(info)
    J_B = moment_forms(B)[0].ambient()
    source = ambient_names(phi.source_dim)
    for form in moment_forms(assemble_blocks(info.a, info.n, info.c)):
        pulled = Polynomial.zero(source)
        n = phi.target_dim
        for j, c in enumerate(form.coefficients):
            if not c:
                continue
            u = [0] * n
            v = [0] * n
            u[j] = v[j] = 1
            coeff, du, dv = phi.pullback_monomial(u, v)
            pulled = pulled + Polynomial.monomial(source, du + dv, coeff * c)
        expected = J_B.scale(Fraction(info.n[form.index], info.beta))
        if pulled != expected:
            logger.warning("Shell identity fails on row %d: %s != %s", form.index, pulled, expected)
            return False
    return True
