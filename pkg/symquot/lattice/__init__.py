"""Integer linear algebra and monoid Hilbert bases."""

from symquot.lattice.hilbert import (
    brute_force_hilbert_basis,
    decompose,
    dominates,
    graded_lex_key,
    monoid_hilbert_basis,
)
from symquot.lattice.matrix import (
    ExponentVector,
    IntMatrix,
    gcd_lcm,
    hermite_normal_form,
    integer_kernel_basis,
    smith_invariants,
)

__all__ = [
    "ExponentVector",
    "IntMatrix",
    "brute_force_hilbert_basis",
    "decompose",
    "dominates",
    "gcd_lcm",
    "graded_lex_key",
    "hermite_normal_form",
    "integer_kernel_basis",
    "monoid_hilbert_basis",
    "smith_invariants",
]
