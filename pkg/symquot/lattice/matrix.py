"""Exact integer matrices: gcd/lcm, Hermite normal form, kernel lattices."""

from __future__ import annotations

import logging
import math
import operator
from dataclasses import dataclass
from itertools import combinations
from typing import Iterable, Sequence

from sympy import Matrix
from sympy.matrices.normalforms import invariant_factors
from sympy.polys.domains import ZZ

from symquot.errors import ArgumentError, ParseError

logger = logging.getLogger(__name__)

ExponentVector = tuple[int, ...]


def _as_int(value: object) -> int:
    if isinstance(value, bool):
        raise ParseError(f"Matrix entry {value!r} is not an integer")
    if isinstance(value, str):
        text = value.strip()
        if text.lstrip("+-").isdigit():
            return int(text)
        raise ParseError(f"Matrix entry {value!r} is not an integer")
    try:
        return int(operator.index(value))
    except TypeError:
        raise ParseError(f"Matrix entry {value!r} is not an integer") from None


@dataclass(frozen=True)
class IntMatrix:
    """Immutable integer matrix stored row-major."""

    entries: tuple[tuple[int, ...], ...]

    def __post_init__(self) -> None:
        rows = tuple(tuple(_as_int(x) for x in row) for row in self.entries)
        if not rows or not rows[0]:
            raise ArgumentError("Matrix must have at least one row and one column")
        if any(len(row) != len(rows[0]) for row in rows):
            raise ArgumentError("Matrix rows have different lengths")
        object.__setattr__(self, "entries", rows)

    # -- construction ------------------------------------------------------

    @classmethod
    def from_rows(cls, rows: Iterable[Iterable[object]]) -> "IntMatrix":
        try:
            return cls(tuple(tuple(row) for row in rows))
        except TypeError as exc:
            raise ParseError(f"Matrix must be an array of arrays: {exc}") from exc

    @classmethod
    def row_vector(cls, values: Iterable[int]) -> "IntMatrix":
        return cls((tuple(values),))

    @classmethod
    def identity(cls, size: int) -> "IntMatrix":
        return cls(tuple(tuple(int(i == j) for j in range(size)) for i in range(size)))

    @classmethod
    def from_columns(cls, columns: Sequence[Sequence[int]]) -> "IntMatrix":
        return cls(tuple(zip(*columns)))

    # -- shape and access --------------------------------------------------

    @property
    def rows(self) -> int:
        return len(self.entries)

    @property
    def cols(self) -> int:
        return len(self.entries[0])

    def row(self, i: int) -> tuple[int, ...]:
        return self.entries[i]

    def column(self, j: int) -> tuple[int, ...]:
        return tuple(row[j] for row in self.entries)

    def columns(self) -> list[tuple[int, ...]]:
        return [self.column(j) for j in range(self.cols)]

    def transpose(self) -> "IntMatrix":
        return IntMatrix(tuple(zip(*self.entries)))

    def hstack(self, other: "IntMatrix") -> "IntMatrix":
        if other.rows != self.rows:
            raise ArgumentError("Cannot stack matrices with different row counts")
        return IntMatrix(tuple(a + b for a, b in zip(self.entries, other.entries)))

    def negate(self) -> "IntMatrix":
        return IntMatrix(tuple(tuple(-x for x in row) for row in self.entries))

    def cotangent_lift(self) -> "IntMatrix":
        """The weight matrix [A | −A] of the action on V ⊕ V*."""
        return self.hstack(self.negate())

    def permute_columns(self, order: Sequence[int]) -> "IntMatrix":
        return IntMatrix.from_columns([self.column(j) for j in order])

    def apply(self, vector: Sequence[int]) -> tuple[int, ...]:
        if len(vector) != self.cols:
            raise ArgumentError(f"Vector of length {len(vector)} does not fit {self.cols} columns")
        return tuple(sum(a * x for a, x in zip(row, vector)) for row in self.entries)

    def __matmul__(self, other: "IntMatrix") -> "IntMatrix":
        if self.cols != other.rows:
            raise ArgumentError("Incompatible shapes for matrix product")
        cols = other.columns()
        return IntMatrix(tuple(tuple(sum(a * b for a, b in zip(row, col)) for col in cols) for row in self.entries))

    # -- exact linear algebra ---------------------------------------------

    def to_sympy(self) -> Matrix:
        return Matrix(self.entries)

    def rank(self) -> int:
        return self.to_sympy().rank()

    def determinant(self) -> int:
        if self.rows != self.cols:
            raise ArgumentError("Determinant needs a square matrix")
        return int(self.to_sympy().det())

    def maximal_minors(self) -> list[int]:
        """All ℓ×ℓ minors, ℓ = number of rows, in column-combination order."""
        sym = self.to_sympy()
        return [int(sym.extract(list(range(self.rows)), list(cols)).det()) for cols in combinations(range(self.cols), self.rows)]

    def to_json(self) -> list[list[str]]:
        return [[str(x) for x in row] for row in self.entries]

    def __str__(self) -> str:
        return "[" + ", ".join("[" + ", ".join(str(x) for x in row) + "]" for row in self.entries) + "]"


# ---------------------------------------------------------------------------
# gcd / lcm
# ---------------------------------------------------------------------------


def gcd_lcm(values: Sequence[int]) -> tuple[int, int]:
    """Return ``(gcd, lcm)`` of a nonempty integer list."""
    if not values:
        raise ArgumentError("gcd_lcm needs a nonempty list")
    if any(v == 0 for v in values):
        raise ArgumentError("lcm is undefined when a value is zero")
    return math.gcd(*values), math.lcm(*values)


# ---------------------------------------------------------------------------
# Hermite normal form
# ---------------------------------------------------------------------------


def hermite_normal_form(M: IntMatrix) -> tuple[IntMatrix, IntMatrix]:
    """Row-style Hermite normal form ``H = U·M`` with ``U`` unimodular.

    ``H`` is upper echelon, pivots are positive, entries above a pivot lie in
    ``[0, pivot)`` and zero rows are collected at the bottom.
    """
    m, n = M.rows, M.cols
    H = [list(row) for row in M.entries]
    U = [[int(i == j) for j in range(m)] for i in range(m)]

    def combine(r1: int, r2: int, a: int, b: int, c: int, d: int) -> None:
        # (R1, R2) <- (a R1 + b R2, c R1 + d R2)
        for mat in (H, U):
            x, y = mat[r1], mat[r2]
            mat[r1] = [a * p + b * q for p, q in zip(x, y)]
            mat[r2] = [c * p + d * q for p, q in zip(x, y)]

    pivot = 0
    for col in range(n):
        if pivot == m:
            break
        for r in range(pivot + 1, m):
            b = H[r][col]
            if b == 0:
                continue
            a = H[pivot][col]
            s, t, g = (int(x) for x in ZZ.gcdex(ZZ(a), ZZ(b)))
            combine(pivot, r, s, t, -b // g, a // g)
        p = H[pivot][col]
        if p == 0:
            continue
        if p < 0:
            H[pivot] = [-x for x in H[pivot]]
            U[pivot] = [-x for x in U[pivot]]
            p = -p
        for r in range(pivot):
            q = H[r][col] // p
            if q:
                H[r] = [x - q * y for x, y in zip(H[r], H[pivot])]
                U[r] = [x - q * y for x, y in zip(U[r], U[pivot])]
        pivot += 1
    return IntMatrix(tuple(map(tuple, H))), IntMatrix(tuple(map(tuple, U)))


def _normalize_sign(vector: Sequence[int]) -> tuple[int, ...]:
    for x in vector:
        if x:
            return tuple(vector) if x > 0 else tuple(-y for y in vector)
    return tuple(vector)


def integer_kernel_basis(M: IntMatrix) -> list[tuple[int, ...]]:
    """Lattice basis of ``{x ∈ Z^cols : M x = 0}``.

    Computed from the Hermite form of ``Mᵀ``: rows of the transform that
    hit zero rows of the echelon form span the kernel lattice.
    """
    H, U = hermite_normal_form(M.transpose())
    basis = [_normalize_sign(U.row(i)) for i in range(H.rows) if not any(H.row(i))]
    logger.debug("Kernel of %dx%d matrix has rank %d", M.rows, M.cols, len(basis))
    return basis


def smith_invariants(M: IntMatrix) -> list[int]:
    """Nonzero invariant factors of ``M`` (sympy normal forms)."""
    factors = invariant_factors(M.to_sympy(), domain=ZZ)
    return [abs(int(f)) for f in factors if f != 0]
