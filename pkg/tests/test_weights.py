"""Type detection, faithfulness, circle reduction, classification and cotangent lifts."""

from __future__ import annotations

import numpy as np
import pytest

from symquot.errors import ArgumentError, PreconditionError
from symquot.invariants.moment import shell_identity
from symquot.lattice.matrix import IntMatrix
from symquot.series.counting import offshell_dims, onshell_dims
from symquot.utils.cache import get_generators
from symquot.weights.classify import Verdict, classify, expected_grading_invariants, grading_invariants, same_class
from symquot.weights.lift import cotangent_lift_equivalent, find_cotangent_pairing, transpositions_to_order
from symquot.weights.reduction import embedding_map, inverse_embedding, orbit_map_identity, reduce_to_circle
from symquot.weights.types import (
    TypeKind,
    assemble,
    assemble_blocks,
    detect_type,
    is_faithful,
    is_faithful_type2,
    single_witness_condition,
    type_alternatives,
)

from tests.conftest import row


def _random_block(rng: np.random.Generator, max_rows: int = 3, max_k: int = 2, bound: int = 5) -> IntMatrix:
    ell = int(rng.integers(1, max_rows + 1))
    k = int(rng.integers(1, max_k + 1))
    a = tuple(int(x) for x in rng.integers(1, bound + 1, size=ell))
    n = tuple(int(x) for x in rng.integers(1, bound + 1, size=ell))
    c_max = max(1, bound // max(n))
    c = tuple(int(x) for x in rng.integers(1, c_max + 1, size=k))
    return assemble_blocks(a, n, c)


# ---------------------------------------------------------------------------
# Type detection
# ---------------------------------------------------------------------------


def test_example_type2_block_data(matrices):
    info = detect_type(matrices["ex3.6"])
    assert info.kind is TypeKind.TYPE_II
    assert (info.ell, info.k) == (3, 4)
    assert info.a == (3, 4, 5)
    assert info.n == (1, 3, 2)
    assert info.c == (1, 2, 3, 3)
    assert (info.alpha, info.m, info.beta, info.eta) == (60, (20, 45, 24), 89, 149)


def test_content_moves_into_n():
    info = detect_type(row(-2, 3, 6))
    assert (info.n, info.c) == ((3,), (1, 2))
    assert info.kind is TypeKind.TYPE_II


def test_alternative_factorizations():
    infos = type_alternatives(row(-1, 4, 12))
    assert (infos[0].n, infos[0].c) == ((4,), (1, 3))
    assert {(i.n, i.c) for i in infos} == {((4,), (1, 3)), ((2,), (2, 6)), ((1,), (4, 12))}


def test_type1_detection(matrices):
    info = detect_type(matrices["bracket.typeI2"])
    assert info.kind is TypeKind.TYPE_I
    assert (info.a, info.n, info.c) == ((2, 3), (1, 1), (1, 1))
    assert (info.alpha, info.m, info.beta) == (6, (3, 2), 5)


def test_general_matrix_and_permutation_search():
    A = row(3, -2, 6)
    assert detect_type(A).kind is TypeKind.GENERAL
    info = detect_type(A, search_permutations=True)
    assert info.column_order == (1, 0, 2)
    assert assemble(info) == A


def test_rank_deficient_rejected():
    with pytest.raises(ArgumentError):
        detect_type(IntMatrix.from_rows([[1, 2], [2, 4]]))


def test_degenerate_single_column_is_general():
    assert detect_type(row(-1)).kind is TypeKind.GENERAL


# ---------------------------------------------------------------------------
# Faithfulness
# ---------------------------------------------------------------------------


@pytest.mark.parametrize(
    "rows,expected",
    [
        ([[-2, 3, 6]], True),
        ([[-2, 4]], False),
        ([[-2, 0, 1, 1], [0, -3, 1, 1]], True),
        ([[-2, 0, 1], [0, -4, 1]], False),
    ],
)
def test_minor_gcd_criterion(rows, expected):
    assert is_faithful(IntMatrix.from_rows(rows)) is expected


def test_block_criterion_is_weaker_than_single_column_condition():
    info = detect_type(row(-6, 2, 3))
    assert is_faithful_type2(info)
    assert not single_witness_condition(info)
    assert is_faithful(row(-6, 2, 3))


def test_block_criterion_agrees_with_minors():
    rng = np.random.default_rng(11)
    for _ in range(200):
        A = _random_block(rng)
        assert is_faithful_type2(detect_type(A)) == is_faithful(A), A


# ---------------------------------------------------------------------------
# Circle reduction
# ---------------------------------------------------------------------------


def test_example_reduction(matrices):
    info = detect_type(matrices["ex3.6"])
    assert reduce_to_circle(info) == row(-60, 89, 178, 267, 267)
    assert shell_identity(info)
    assert orbit_map_identity(info)


def test_reduction_fixes_circle_matrices():
    assert reduce_to_circle(detect_type(row(-2, 3, 6))) == row(-2, 3, 6)


def test_reduction_needs_faithful_input():
    with pytest.raises(PreconditionError):
        reduce_to_circle(detect_type(row(-2, 2, 4)))


def test_inverse_embedding_undoes_embedding(matrices, rng):
    info = detect_type(matrices["ex3.6"])
    phi = embedding_map(info)
    point = rng.normal(size=info.k + 1) + 1j * rng.normal(size=info.k + 1)
    assert np.allclose(inverse_embedding(info, phi.apply(point)), point)


def test_embedding_squares_sum_to_one(matrices):
    assert embedding_map(detect_type(matrices["ex3.6"])).squared_sum() == 1


@pytest.mark.slow
def test_reduction_preserves_series():
    rng = np.random.default_rng(2024)
    checked = 0
    while checked < 25:
        A = _random_block(rng)
        info = detect_type(A)
        if not is_faithful(A):
            continue
        assert onshell_dims(A, 10) == onshell_dims(reduce_to_circle(info), 10), A
        checked += 1


# ---------------------------------------------------------------------------
# Classification
# ---------------------------------------------------------------------------


def test_circle_classes():
    assert classify(row(-1, 2)).key == ("eta", 3)
    assert same_class(row(-1, 2), row(-2, 1)).verdict is Verdict.SAME
    assert same_class(row(-1, 2), row(-1, 3)).verdict is Verdict.DIFFERENT


def test_type1_classes(matrices):
    key = classify(matrices["sec6.aprime"])
    assert key.key == ("typeI", 2, 2, 1)
    assert key.determined
    assert same_class(matrices["sec6.aprime"], row(-1, 1, 1)).verdict is Verdict.DIFFERENT


def test_equal_series_is_undetermined(matrices):
    comparison = same_class(matrices["sec6.a"], matrices["sec6.b"])
    assert comparison.verdict is Verdict.UNDETERMINED


def test_classify_notes_non_block_matrices():
    key = classify(row(1, 2, 3))
    assert key.kind is TypeKind.GENERAL
    assert not key.determined


def test_grading_invariants(matrices):
    A = matrices["sec6.aprime"]
    expected = expected_grading_invariants(detect_type(A))
    assert expected == {"krull_dimension": 4, "lowest_nonquadratic_degree": 3, "lowest_nonquadratic_count": 3}
    assert grading_invariants(get_generators(A, "p")) == expected


# ---------------------------------------------------------------------------
# Cotangent lifts
# ---------------------------------------------------------------------------


def test_transpositions_to_order():
    assert transpositions_to_order([(1, 4)], 4) == [3, 1, 2, 0]
    with pytest.raises(ArgumentError):
        transpositions_to_order([(0, 2)], 4)


def test_lift_equivalence_of_sec6_pair(matrices):
    A, B = matrices["sec6.adoubleprime"], matrices["sec6.bdoubleprime"]
    assert cotangent_lift_equivalent(A, B, [(1, 4), (3, 7), (5, 8)])
    assert find_cotangent_pairing(A, B) is not None


def test_lift_equivalence_is_refuted_for_other_matrices(matrices):
    A = matrices["sec6.adoubleprime"]
    target = offshell_dims(A, 6)
    rng = np.random.default_rng(5)
    tried = 0
    while tried < 10:
        M = IntMatrix.from_rows(rng.integers(-3, 4, size=(2, 4)).tolist())
        if M.rank() < 2 or offshell_dims(M, 6) == target:
            continue
        assert not cotangent_lift_equivalent(A, M)
        tried += 1


def test_lift_shape_mismatch():
    with pytest.raises(ArgumentError):
        cotangent_lift_equivalent(row(-1, 1), row(-1, 1, 1))
