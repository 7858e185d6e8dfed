"""Graded dimensions of invariant rings by lattice-point counting."""

from __future__ import annotations

import logging
from collections import Counter
from dataclasses import dataclass
from itertools import product
from typing import Sequence

from symquot.errors import ArgumentError, RegularSequenceError
from symquot.lattice.matrix import IntMatrix
from symquot.poly.groebner import IdealBasis, ensure_groebner

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class SeriesTruncation:
    """Coefficients ``c_0 … c_N`` of a Hilbert series."""

    coefficients: tuple[int, ...]

    @property
    def order(self) -> int:
        return len(self.coefficients) - 1

    def __getitem__(self, degree: int) -> int:
        return self.coefficients[degree]

    def multiply_polynomial(self, poly: Sequence[int]) -> "SeriesTruncation":
        out = [0] * len(self.coefficients)
        for i, c in enumerate(self.coefficients):
            if not c:
                continue
            for j, p in enumerate(poly):
                if i + j < len(out):
                    out[i + j] += c * p
        return SeriesTruncation(tuple(out))

    def __str__(self) -> str:
        return "[" + ", ".join(str(c) for c in self.coefficients) + "]"


def _weight_counts(A: IntMatrix, N: int) -> list[Counter]:
    """``counts[d][A u]`` = number of ``u ∈ N^n`` with ``|u| = d``."""
    zero = (0,) * A.rows
    table: list[Counter] = [Counter() for _ in range(N + 1)]
    table[0][zero] = 1
    for col in A.columns():
        for d in range(1, N + 1):
            for key, count in list(table[d - 1].items()):
                table[d][tuple(k + c for k, c in zip(key, col))] += count
    return table


def offshell_dims(A: IntMatrix, N: int) -> SeriesTruncation:
    """``c_d = #{(u, v) : A u = A v, |u| + |v| = d}`` for ``d ≤ N``."""
    if N < 0:
        raise ArgumentError("Truncation order must be nonnegative")
    table = _weight_counts(A, N)
    coefficients = []
    for d in range(N + 1):
        total = 0
        for a in range(d + 1):
            left, right = table[a], table[d - a]
            if len(left) > len(right):
                left, right = right, left
            total += sum(count * right.get(key, 0) for key, count in left.items())
        coefficients.append(total)
    logger.debug("Off-shell dimensions of %s to order %d: %s", A, N, coefficients)
    return SeriesTruncation(tuple(coefficients))


def onshell_dims(A: IntMatrix, N: int) -> SeriesTruncation:
    """Off-shell series times ``(1 − t²)^ℓ``, truncated at ``N``."""
    factor = [1]
    for _ in range(A.rows):
        factor = [x - (factor[i - 2] if i >= 2 else 0) for i, x in enumerate(factor + [0, 0])]
    result = offshell_dims(A, N).multiply_polynomial(factor)
    negative = [d for d, c in enumerate(result.coefficients) if c < 0]
    if negative:
        raise RegularSequenceError(
            f"Moment components of {A} do not behave as a regular sequence: negative coefficient in degree {negative[0]}"
        )
    return result


def expand_rational(numerator: Sequence[int], denominator: Sequence[int], N: int) -> SeriesTruncation:
    """Expand ``numerator(t) / Π (1 − t^{d_i})`` to order ``N``."""
    if any(d <= 0 for d in denominator):
        raise ArgumentError("Denominator factors need positive exponents")
    series = [0] * (N + 1)
    for i, c in enumerate(numerator[: N + 1]):
        series[i] = c
    for d in denominator:
        for i in range(d, N + 1):
            series[i] += series[i - d]
    return SeriesTruncation(tuple(series))


def series_equal(a: SeriesTruncation, b: SeriesTruncation) -> bool:
    if a.order != b.order:
        raise ArgumentError(f"Series truncated at different orders {a.order} and {b.order}")
    return a.coefficients == b.coefficients


def supported_on_monoid(series: SeriesTruncation, generators: Sequence[int]) -> bool:
    """True when every nonzero coefficient sits in a degree of the monoid ``⟨generators⟩``."""
    reachable = [False] * (series.order + 1)
    reachable[0] = True
    for d in range(1, series.order + 1):
        reachable[d] = any(d >= g and reachable[d - g] for g in generators)
    return all(reachable[d] for d, c in enumerate(series.coefficients) if c)


def circle_series_parity(a: int, b: int, N: int) -> bool:
    """On-shell series of the circle weights ``(−a, b)`` lives in degrees ``⟨2, a + b⟩``."""
    if a <= 0 or b <= 0:
        raise ArgumentError("circle_series_parity needs positive a and b")
    return supported_on_monoid(onshell_dims(IntMatrix.row_vector((-a, b)), N), (2, a + b))


def quotient_dims(ideal: IdealBasis, N: int) -> SeriesTruncation:
    """Graded dimensions of ``K[gens]/I`` from standard monomials of a Gröbner basis."""
    G = ensure_groebner(ideal)
    leads = [p.items()[0][0] for p in G.generators]
    weights = ideal.weights
    counts = [0] * (N + 1)
    bounds = [N // w for w in weights]
    for exp in product(*(range(b + 1) for b in bounds)):
        degree = sum(w * e for w, e in zip(weights, exp))
        if degree > N:
            continue
        if any(all(e >= l for e, l in zip(exp, lead)) for lead in leads):
            continue
        counts[degree] += 1
    return SeriesTruncation(tuple(counts))


def format_rational(numerator: Sequence[int], denominator: Sequence[int]) -> str:
    """Display ``num/den`` as ``(1 + t^3 + …)/((1 - t^5)(1 - t^2)^3)``."""
    terms = []
    for i, c in enumerate(numerator):
        if not c:
            continue
        mono = "" if i == 0 else ("t" if i == 1 else f"t^{i}")
        if not mono:
            text = str(abs(c))
        else:
            text = mono if abs(c) == 1 else f"{abs(c)}{mono}"
        if terms:
            terms.append(("- " if c < 0 else "+ ") + text)
        else:
            terms.append(("-" if c < 0 else "") + text)
    factors = Counter(denominator)
    den = "".join(
        f"(1 - t^{d})" + (f"^{mult}" if mult > 1 else "")
        for d, mult in sorted(factors.items(), key=lambda kv: -kv[0])
    )
    return f"({' '.join(terms)})/({den})"
