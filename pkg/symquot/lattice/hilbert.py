"""Hilbert bases of the monoid ``{x ∈ N^m : M x = 0}``.

The completion follows Contejean and Devie: starting from the unit
vectors, a candidate ``p`` is extended by ``e_j`` only when the column
``M e_j`` points back towards the origin from the defect ``M p``, and a
candidate is discarded as soon as it dominates a basis element already
found. Candidates are processed degree by degree, so every solution met
before it is pruned is minimal.
"""

from __future__ import annotations

import logging
from itertools import product

from symquot.lattice.matrix import ExponentVector, IntMatrix
from symquot.utils.stats import add_stat

logger = logging.getLogger(__name__)


def graded_lex_key(vector: ExponentVector) -> tuple:
    """Ascending total degree, then lexicographically larger vectors first."""
    return (sum(vector), tuple(-x for x in vector))


def dominates(x: ExponentVector, y: ExponentVector) -> bool:
    """True when ``x ≥ y`` componentwise."""
    return all(a >= b for a, b in zip(x, y))


def monoid_hilbert_basis(M: IntMatrix) -> tuple[ExponentVector, ...]:
    """Unique minimal generating set of the monoid ``ker M ∩ N^cols``."""
    cols = M.cols
    images = M.columns()
    basis: list[ExponentVector] = []

    frontier: dict[ExponentVector, tuple[int, ...]] = {}
    for j in range(cols):
        unit = tuple(int(i == j) for i in range(cols))
        frontier[unit] = images[j]

    level = 1
    while frontier:
        found = [v for v, defect in frontier.items() if not any(defect)]
        basis.extend(found)
        nxt: dict[ExponentVector, tuple[int, ...]] = {}
        for v, defect in frontier.items():
            if not any(defect):
                continue
            for j in range(cols):
                if sum(d * c for d, c in zip(defect, images[j])) >= 0:
                    continue
                w = v[:j] + (v[j] + 1,) + v[j + 1:]
                if w in nxt or any(dominates(w, b) for b in basis):
                    continue
                nxt[w] = tuple(d + c for d, c in zip(defect, images[j]))
        logger.debug("Hilbert completion level %d: %d new basis elements, %d candidates", level, len(found), len(nxt))
        add_stat("hilbert_candidates", len(nxt))
        frontier = nxt
        level += 1

    logger.info("Hilbert basis of %dx%d system: %d elements", M.rows, cols, len(basis))
    return tuple(sorted(basis, key=graded_lex_key))


def brute_force_hilbert_basis(M: IntMatrix, bound: int) -> tuple[ExponentVector, ...]:
    """Minimal solutions of total degree ≤ ``bound``, by exhaustive enumeration."""
    solutions = [
        x for x in product(range(bound + 1), repeat=M.cols)
        if 0 < sum(x) <= bound and not any(M.apply(x))
    ]
    solutions.sort(key=graded_lex_key)
    minimal: list[ExponentVector] = []
    for x in solutions:
        if not any(dominates(x, h) for h in minimal):
            minimal.append(x)
    return tuple(minimal)


def decompose(vector: ExponentVector, basis: tuple[ExponentVector, ...]) -> list[int] | None:
    """Multiplicities ``c`` with ``Σ c_i basis_i = vector`` found greedily.

    For a saturated monoid any basis element below a member leaves a member,
    so the greedy walk only fails when ``vector`` is not in the monoid.
    """
    remaining = list(vector)
    counts = [0] * len(basis)
    while any(remaining):
        for idx, h in enumerate(basis):
            if dominates(remaining, h):
                remaining = [r - x for r, x in zip(remaining, h)]
                counts[idx] += 1
                break
        else:
            return None
    return counts
