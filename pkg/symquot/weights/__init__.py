"""Weight-matrix analysis: types, faithfulness, circle reduction, cotangent lifts."""

from symquot.weights.classify import (
    ClassKey,
    Comparison,
    Verdict,
    classify,
    expected_grading_invariants,
    grading_invariants,
    same_class,
)
from symquot.weights.lift import cotangent_lift_equivalent, find_cotangent_pairing, transpositions_to_order
from symquot.weights.reduction import (
    EmbeddingMap,
    embedding_map,
    inverse_embedding,
    orbit_map_identity,
    reduce_to_circle,
)
from symquot.weights.types import (
    TypeInfo,
    TypeKind,
    assemble,
    assemble_blocks,
    detect_type,
    is_faithful,
    is_faithful_type2,
    make_type_info,
    require_faithful_type2,
    single_witness_condition,
    type_alternatives,
)

__all__ = [
    "ClassKey",
    "Comparison",
    "EmbeddingMap",
    "TypeInfo",
    "TypeKind",
    "Verdict",
    "assemble",
    "assemble_blocks",
    "classify",
    "cotangent_lift_equivalent",
    "detect_type",
    "embedding_map",
    "expected_grading_invariants",
    "find_cotangent_pairing",
    "grading_invariants",
    "inverse_embedding",
    "is_faithful",
    "is_faithful_type2",
    "make_type_info",
    "orbit_map_identity",
    "reduce_to_circle",
    "require_faithful_type2",
    "same_class",
    "single_witness_condition",
    "transpositions_to_order",
    "type_alternatives",
]
