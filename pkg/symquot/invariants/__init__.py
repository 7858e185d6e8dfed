"""Invariant rings: generators, relations, brackets and the semialgebraic description."""

from symquot.invariants.generators import (
    Generator,
    GeneratorSet,
    ambient_names,
    ambient_polynomial,
    hilbert_map,
    invariant_generators,
    type1_generators,
)
from symquot.invariants.moment import MomentForm, moment_forms, shell_forms, shell_identity
from symquot.invariants.poisson import (
    bracket_in_generators,
    bracket_table,
    poisson_bracket,
    rewrite_in_generators,
    type1_bracket,
)
from symquot.invariants.relations import (
    PresentationIdeal,
    Shell,
    certify_toric,
    toric_relations,
    type1_relations,
)
from symquot.invariants.semialgebraic import (
    Inequality,
    SetMembership,
    in_semialgebraic_set,
    reconstruct_point,
    semialgebraic_description,
    shell_sample,
)

__all__ = [
    "Generator",
    "GeneratorSet",
    "Inequality",
    "MomentForm",
    "PresentationIdeal",
    "SetMembership",
    "Shell",
    "ambient_names",
    "ambient_polynomial",
    "bracket_in_generators",
    "bracket_table",
    "certify_toric",
    "hilbert_map",
    "in_semialgebraic_set",
    "invariant_generators",
    "moment_forms",
    "poisson_bracket",
    "reconstruct_point",
    "rewrite_in_generators",
    "semialgebraic_description",
    "shell_forms",
    "shell_identity",
    "shell_sample",
    "toric_relations",
    "type1_bracket",
    "type1_generators",
    "type1_relations",
]
