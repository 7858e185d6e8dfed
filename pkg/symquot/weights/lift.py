"""Equivalence of weight matrices through their cotangent lifts ``[A | −A]``.

Swapping column ``j`` with ``j + n`` in the lift negates the weight of
``z_j``; permuting the ``z`` block together with the ``w`` block permutes
the weights. Both moves preserve the invariant theory of the lift, and
two lifts are equivalent when a move brings one to the other's row
lattice (equal Hermite forms).
"""

from __future__ import annotations

import logging
from itertools import permutations, product
from typing import Optional, Sequence

from symquot.config import get_settings
from symquot.errors import ArgumentError
from symquot.lattice.matrix import IntMatrix, hermite_normal_form

logger = logging.getLogger(__name__)

# full signed-permutation search up to this many columns, sign flips only beyond
_FULL_SEARCH_COLUMNS = 6


def _row_lattice(M: IntMatrix) -> tuple[tuple[int, ...], ...]:
    H, _ = hermite_normal_form(M)
    return tuple(row for row in H.entries if any(row))


def transpositions_to_order(pairs: Sequence[tuple[int, int]], size: int) -> list[int]:
    """Column order produced by applying 1-based transpositions left to right."""
    order = list(range(size))
    for i, j in pairs:
        if not (1 <= i <= size and 1 <= j <= size):
            raise ArgumentError(f"Transposition ({i}, {j}) is outside 1..{size}")
        order[i - 1], order[j - 1] = order[j - 1], order[i - 1]
    return order


def _signed_order(perm: Sequence[int], signs: Sequence[int]) -> list[int]:
    n = len(perm)
    head = [p if s > 0 else p + n for p, s in zip(perm, signs)]
    tail = [p + n if s > 0 else p for p, s in zip(perm, signs)]
    return head + tail


def _order_to_transpositions(order: Sequence[int]) -> list[tuple[int, int]]:
    current = list(range(len(order)))
    pairs: list[tuple[int, int]] = []
    for pos, wanted in enumerate(order):
        if current[pos] != wanted:
            other = current.index(wanted)
            current[pos], current[other] = current[other], current[pos]
            pairs.append((pos + 1, other + 1))
    return pairs


def lift_equivalent_under(A: IntMatrix, B: IntMatrix, order: Sequence[int]) -> bool:
    """True when the lift of ``A`` with columns reordered by ``order`` row-reduces to the lift of ``B``."""
    lift_a = A.cotangent_lift().permute_columns(order)
    return _row_lattice(lift_a) == _row_lattice(B.cotangent_lift())


def find_cotangent_pairing(A: IntMatrix, B: IntMatrix) -> Optional[list[tuple[int, int]]]:
    """Search signed column permutations; return the move as 1-based lift transpositions."""
    if (A.rows, A.cols) != (B.rows, B.cols):
        raise ArgumentError(f"Shapes {A.rows}x{A.cols} and {B.rows}x{B.cols} differ")
    n = A.cols
    target = _row_lattice(B.cotangent_lift())
    limit = get_settings().permutation_search_limit
    perms = permutations(range(n)) if n <= min(_FULL_SEARCH_COLUMNS, limit) else [tuple(range(n))]
    for perm in perms:
        for signs in product((1, -1), repeat=n):
            order = _signed_order(perm, signs)
            if _row_lattice(A.cotangent_lift().permute_columns(order)) == target:
                pairs = _order_to_transpositions(order)
                logger.info("Cotangent lifts match under transpositions %s", pairs)
                return pairs
    return None


def cotangent_lift_equivalent(
    A: IntMatrix,
    B: IntMatrix,
    column_pairing: Optional[Sequence[tuple[int, int]] | Sequence[int]] = None,
) -> bool:
    """Decide equivalence of the lifts, with a given pairing or by bounded search.

    ``column_pairing`` is either a list of 1-based transpositions of lift
    columns or a full 0-based column order of length ``2n``.
    """
    if (A.rows, A.cols) != (B.rows, B.cols):
        raise ArgumentError(f"Shapes {A.rows}x{A.cols} and {B.rows}x{B.cols} differ")
    if column_pairing is None:
        return find_cotangent_pairing(A, B) is not None
    size = 2 * A.cols
    pairing = list(column_pairing)
    if pairing and isinstance(pairing[0], (tuple, list)):
        order = transpositions_to_order([tuple(p) for p in pairing], size)
    else:
        order = [int(x) for x in pairing] or list(range(size))
        if sorted(order) != list(range(size)):
            raise ArgumentError(f"Column order {order} is not a permutation of 0..{size - 1}")
    return lift_equivalent_under(A, B, order)
