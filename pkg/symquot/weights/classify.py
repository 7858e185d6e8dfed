"""Classification keys for Type I/II quotients and the grading data behind them.

For ``k = 1`` the class is determined by ``η`` alone; for Type I_k with
``k > 1`` by the triple ``(k, α, β)``. Two Type II matrices with the same
reduced circle matrix are equivalent; anything else is only separated
when a grading invariant or the Hilbert series differs.
"""

from __future__ import annotations

import logging
from dataclasses import dataclass, field
from enum import Enum
from math import comb
from typing import TYPE_CHECKING, Optional

from symquot.config import get_settings
from symquot.errors import RegularSequenceError
from symquot.lattice.matrix import IntMatrix
from symquot.series.counting import offshell_dims, onshell_dims, series_equal
from symquot.weights.types import TypeInfo, TypeKind, detect_type, is_faithful

if TYPE_CHECKING:
    from symquot.invariants.generators import GeneratorSet

logger = logging.getLogger(__name__)


class Verdict(str, Enum):
    SAME = "same"
    DIFFERENT = "different"
    UNDETERMINED = "undetermined"


@dataclass(frozen=True)
class ClassKey:
    """Invariant attached to a weight matrix; ``determined`` when it is a complete invariant."""

    kind: TypeKind
    key: tuple = ()
    determined: bool = False
    note: str = ""


@dataclass(frozen=True)
class Comparison:
    verdict: Verdict
    reason: str
    keys: tuple[ClassKey, ClassKey] = field(default=(), compare=False)


def classify(A: IntMatrix) -> ClassKey:
    info = detect_type(A)
    if not info.is_block:
        return ClassKey(TypeKind.GENERAL, note="no block form; no classification available")
    if not is_faithful(A):
        return ClassKey(info.kind, note="representation is not faithful")
    if info.k == 1:
        return ClassKey(info.kind, ("eta", info.eta), True)
    if info.kind is TypeKind.TYPE_I:
        return ClassKey(info.kind, ("typeI", info.k, info.alpha, info.beta), True)
    return ClassKey(
        info.kind,
        ("typeII", info.k, info.alpha, info.beta, tuple(sorted(info.c))),
        False,
        "Type II_k with k > 1 is only classified up to equal reduced matrices",
    )


def expected_grading_invariants(info: TypeInfo) -> dict[str, int]:
    """Krull dimension, lowest non-quadratic degree and the number of such monomials."""
    info.require_block()
    return {
        "krull_dimension": 2 * info.k,
        "lowest_nonquadratic_degree": info.eta,
        "lowest_nonquadratic_count": comb(info.alpha + info.k - 1, info.k - 1),
    }


def grading_invariants(gens: "GeneratorSet") -> dict[str, Optional[int]]:
    """The same data read off a generator set.

    Conjugate pairs are counted once, matching a count of holomorphic
    monomials.
    """
    A = gens.matrix
    higher = [g for g in gens.generators if g.degree > 2]
    lowest = min((g.degree for g in higher), default=None)
    count = None
    if lowest is not None:
        count = sum(1 for g in higher if g.degree == lowest) // 2
    return {
        "krull_dimension": 2 * (A.cols - A.rank()),
        "lowest_nonquadratic_degree": lowest,
        "lowest_nonquadratic_count": count,
    }


def _series_differ(A: IntMatrix, B: IntMatrix) -> bool:
    N = get_settings().degree_bound
    try:
        return not series_equal(onshell_dims(A, N), onshell_dims(B, N))
    except RegularSequenceError:
        logger.warning("On-shell series unavailable; comparing off-shell series")
        return not series_equal(offshell_dims(A, N), offshell_dims(B, N))


def same_class(A: IntMatrix, B: IntMatrix) -> Comparison:
    ka, kb = classify(A), classify(B)
    keys = (ka, kb)
    if ka.key and kb.key:
        if ka.key == kb.key:
            if ka.determined or ka.key[0] == "typeII":
                return Comparison(Verdict.SAME, "equal classification keys", keys)
        elif ka.determined and kb.determined and ka.key[0] == kb.key[0]:
            return Comparison(Verdict.DIFFERENT, f"keys {ka.key} and {kb.key} differ", keys)
        if ka.key[0] != "eta" and kb.key[0] != "eta" and ka.key[1] != kb.key[1]:
            return Comparison(Verdict.DIFFERENT, "Krull dimensions differ", keys)
        if (ka.key[0] == "eta") != (kb.key[0] == "eta"):
            return Comparison(Verdict.DIFFERENT, "Krull dimensions differ", keys)
    if _series_differ(A, B):
        return Comparison(Verdict.DIFFERENT, "Hilbert series differ", keys)
    return Comparison(Verdict.UNDETERMINED, "no computed invariant separates the quotients", keys)
