"""Shared generator sets and presentations.

Enumeration and toric saturation are the expensive steps every command
repeats; results are cached per matrix for the lifetime of the process.
"""

from __future__ import annotations

import logging
from functools import lru_cache

from symquot.invariants.generators import GeneratorSet, invariant_generators
from symquot.invariants.relations import PresentationIdeal, Shell, toric_relations
from symquot.lattice.matrix import IntMatrix
from symquot.utils.file_utils import bundled_matrices

logger = logging.getLogger(__name__)


@lru_cache(maxsize=64)
def get_generators(A: IntMatrix, prefix: str = "p", force: bool = False) -> GeneratorSet:
    """Return a **cached** generator set keyed by matrix and prefix."""
    return invariant_generators(A, prefix, force)


@lru_cache(maxsize=64)
def get_presentation(A: IntMatrix, prefix: str = "p", shell: Shell = Shell.ON, force: bool = False) -> PresentationIdeal:
    """Return a **cached** toric presentation, on-shell unless asked otherwise."""
    presentation = toric_relations(get_generators(A, prefix, force))
    logger.debug("Presentation of %s cached (%s-shell)", A, shell.value)
    return presentation.on_shell() if shell is Shell.ON else presentation


def bundled_matrix(name: str) -> IntMatrix:
    return IntMatrix.from_rows(bundled_matrices()[name])
