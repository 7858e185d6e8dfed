"""Type detection for block weight matrices ``[D | c_1 n … c_k n]``."""

from __future__ import annotations

import logging
import math
from dataclasses import dataclass, field
from enum import Enum
from itertools import permutations
from typing import Optional

from sympy import divisors, primefactors

from symquot.config import get_settings
from symquot.errors import ArgumentError, GuardError, PreconditionError
from symquot.lattice.matrix import IntMatrix, gcd_lcm

logger = logging.getLogger(__name__)


class TypeKind(str, Enum):
    TYPE_I = "TypeI"
    TYPE_II = "TypeII"
    GENERAL = "General"


@dataclass(frozen=True)
class TypeInfo:
    """Block structure of a weight matrix plus the derived invariants.

    ``c`` is kept in column order so :func:`assemble` reproduces the input;
    ``column_order`` records the permutation found by an opt-in search.
    """

    kind: TypeKind
    rows: int
    cols: int
    a: tuple[int, ...] = ()
    n: tuple[int, ...] = ()
    c: tuple[int, ...] = ()
    alpha: Optional[int] = None
    m: tuple[int, ...] = ()
    beta: Optional[int] = None
    eta: Optional[int] = None
    column_order: tuple[int, ...] = ()
    alternatives: tuple[tuple[tuple[int, ...], tuple[int, ...]], ...] = field(default=(), compare=False)

    @property
    def ell(self) -> int:
        return self.rows

    @property
    def k(self) -> int:
        return len(self.c)

    @property
    def is_block(self) -> bool:
        return self.kind is not TypeKind.GENERAL

    def require_block(self) -> None:
        if not self.is_block:
            raise ArgumentError("Operation needs a Type I or Type II weight matrix")

    def classification_key(self) -> tuple:
        """``(k, α, β, sorted c)``; for Type I the c part is all ones."""
        self.require_block()
        return (self.k, self.alpha, self.beta, tuple(sorted(self.c)))


def _derived(a: tuple[int, ...], n: tuple[int, ...]) -> tuple[int, tuple[int, ...], int, int]:
    _, alpha = gcd_lcm(list(a))
    m = tuple(n_i * alpha // a_i for a_i, n_i in zip(a, n))
    beta = sum(m)
    return alpha, m, beta, alpha + beta


def _match_block(A: IntMatrix) -> Optional[tuple[tuple[int, ...], tuple[int, ...], tuple[int, ...], tuple]]:
    """Return ``(a, n, c, alternatives)`` when ``A`` literally has block shape."""
    ell = A.rows
    if A.cols <= ell:
        return None
    for i in range(ell):
        for j in range(ell):
            entry = A.entries[i][j]
            if (i == j and entry >= 0) or (i != j and entry != 0):
                return None
    a = tuple(-A.entries[i][i] for i in range(ell))
    tail = A.columns()[ell:]
    if any(x <= 0 for col in tail for x in col):
        return None
    first = tail[0]
    content = math.gcd(*first)
    direction = tuple(x // content for x in first)
    lambdas = []
    for col in tail:
        scale = col[0] // direction[0]
        if tuple(scale * d for d in direction) != col:
            return None
        lambdas.append(scale)
    common = math.gcd(*lambdas)
    n = tuple(common * d for d in direction)
    c = tuple(lam // common for lam in lambdas)
    alternatives = tuple(
        (tuple(d * x for x in direction), tuple(lam // d for lam in lambdas))
        for d in divisors(common)
    )
    return a, n, c, alternatives


def _info_from_block(A: IntMatrix, block, column_order: tuple[int, ...]) -> TypeInfo:
    a, n, c, alternatives = block
    alpha, m, beta, eta = _derived(a, n)
    kind = TypeKind.TYPE_I if all(x == 1 for x in c) else TypeKind.TYPE_II
    return TypeInfo(kind, A.rows, A.cols, a, n, c, alpha, m, beta, eta, column_order, alternatives)


def detect_type(A: IntMatrix, search_permutations: bool = False) -> TypeInfo:
    """Detect the Type I/II block form of ``A``.

    ``c`` is normalized to content one and ``n`` carries the common factor;
    all other factorizations are listed in ``alternatives``.
    """
    if A.rank() < A.rows:
        raise ArgumentError(f"Weight matrix {A} does not have full row rank")
    identity = tuple(range(A.cols))
    block = _match_block(A)
    if block is not None:
        return _info_from_block(A, block, identity)
    if search_permutations:
        limit = get_settings().permutation_search_limit
        if A.cols > limit:
            raise GuardError(f"Column permutation search is limited to {limit} columns")
        for order in permutations(range(A.cols)):
            block = _match_block(A.permute_columns(order))
            if block is not None:
                logger.info("Block form found after permuting columns to %s", order)
                return _info_from_block(A, block, tuple(order))
    return TypeInfo(TypeKind.GENERAL, A.rows, A.cols, column_order=identity)


def type_alternatives(A: IntMatrix) -> list[TypeInfo]:
    """Every ``(n, c)`` factorization of a block matrix, canonical one first."""
    info = detect_type(A)
    info.require_block()
    out = [info]
    for n, c in info.alternatives:
        if (n, c) == (info.n, info.c):
            continue
        alpha, m, beta, eta = _derived(info.a, n)
        kind = TypeKind.TYPE_I if all(x == 1 for x in c) else TypeKind.TYPE_II
        out.append(TypeInfo(kind, info.rows, info.cols, info.a, n, c, alpha, m, beta, eta, info.column_order))
    return out


def make_type_info(a: tuple[int, ...], n: tuple[int, ...], c: tuple[int, ...]) -> TypeInfo:
    """Build the info of ``[diag(−a) | c_1 n … c_k n]`` directly."""
    if len(a) != len(n) or not c:
        raise ArgumentError("Need len(a) == len(n) and k ≥ 1")
    if any(x <= 0 for x in (*a, *n, *c)):
        raise ArgumentError("a, n and c must be positive")
    return detect_type(assemble_blocks(a, n, c))


def assemble_blocks(a: tuple[int, ...], n: tuple[int, ...], c: tuple[int, ...]) -> IntMatrix:
    ell = len(a)
    rows = []
    for i in range(ell):
        diag = [(-a[i] if j == i else 0) for j in range(ell)]
        rows.append(tuple(diag + [c_r * n[i] for c_r in c]))
    return IntMatrix(tuple(rows))


def assemble(info: TypeInfo) -> IntMatrix:
    """Reassemble the weight matrix described by ``info`` in its original column order."""
    info.require_block()
    block = assemble_blocks(info.a, info.n, info.c)
    inverse = [0] * info.cols
    for pos, col in enumerate(info.column_order):
        inverse[col] = pos
    return block.permute_columns(inverse)


# ---------------------------------------------------------------------------
# Faithfulness
# ---------------------------------------------------------------------------


def is_faithful(A: IntMatrix) -> bool:
    """True iff the nonzero maximal minors of ``A`` have no common factor."""
    if A.rank() < A.rows:
        raise ArgumentError(f"Weight matrix {A} does not have full row rank")
    minors = [abs(x) for x in A.maximal_minors() if x]
    return math.gcd(*minors) == 1


def is_faithful_type2(info: TypeInfo) -> bool:
    """Faithfulness read off the block data.

    The ``a_j`` must be pairwise coprime and every prime ``p | a_j`` must
    miss some ``c_r n_j``. Asking for one ``r`` that works for all primes of
    ``a_j`` at once (see :func:`single_witness_condition`) is stronger: (−6, 2, 3) is
    faithful but fails it.
    """
    info.require_block()
    a = info.a
    for i in range(len(a)):
        for j in range(i + 1, len(a)):
            if math.gcd(a[i], a[j]) != 1:
                return False
    for j, a_j in enumerate(a):
        for p in primefactors(a_j):
            if all((c_r * info.n[j]) % p == 0 for c_r in info.c):
                return False
    return True


def single_witness_condition(info: TypeInfo) -> bool:
    """Pairwise coprime ``a`` and, for each ``j``, one ``r`` with ``gcd(a_j, c_r n_j) = 1``."""
    info.require_block()
    a = info.a
    if any(math.gcd(a[i], a[j]) != 1 for i in range(len(a)) for j in range(i + 1, len(a))):
        return False
    return all(any(math.gcd(a_j, c_r * info.n[j]) == 1 for c_r in info.c) for j, a_j in enumerate(a))


def require_faithful_type2(info: TypeInfo) -> None:
    info.require_block()
    if not is_faithful_type2(info):
        raise PreconditionError("Weight matrix is not faithful; the circle reduction does not apply")
