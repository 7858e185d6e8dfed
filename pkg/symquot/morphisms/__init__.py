"""Graded maps between quotient presentations and their verification."""

from symquot.morphisms.ansatz import AnsatzFamily, AnsatzSolution, AnsatzSystem, ansatz_nogo, ansatz_system, branch_implies
from symquot.morphisms.maps import (
    BUILTIN_NAMES,
    GradedMonomialMap,
    RadicalSum,
    builtin_maps,
    compose,
    identity_map,
    inverse,
    map_from_json,
    pullback_map,
    restrict,
    scaling_map,
    theorem_map,
)
from symquot.morphisms.verify import (
    Certificate,
    InequalityStatus,
    InequalityVerdict,
    VerificationResult,
    Witness,
    verify_graded,
    verify_inequalities,
    verify_poisson,
    verify_relations,
)

__all__ = [
    "BUILTIN_NAMES",
    "AnsatzFamily",
    "AnsatzSolution",
    "AnsatzSystem",
    "Certificate",
    "GradedMonomialMap",
    "InequalityStatus",
    "InequalityVerdict",
    "RadicalSum",
    "VerificationResult",
    "Witness",
    "ansatz_nogo",
    "ansatz_system",
    "branch_implies",
    "builtin_maps",
    "compose",
    "identity_map",
    "inverse",
    "map_from_json",
    "pullback_map",
    "restrict",
    "scaling_map",
    "theorem_map",
    "verify_graded",
    "verify_inequalities",
    "verify_poisson",
    "verify_relations",
]
