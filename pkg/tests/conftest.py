"""Shared fixtures: the worked-example matrices and their presentations."""

from __future__ import annotations

import math

import numpy as np
import pytest

from symquot.invariants.relations import Shell
from symquot.lattice.matrix import IntMatrix
from symquot.utils.cache import bundled_matrix, get_generators, get_presentation


@pytest.fixture(scope="session")
def matrices() -> dict[str, IntMatrix]:
    names = (
        "ex3.6",
        "sec6.a",
        "sec6.b",
        "sec6.aprime",
        "sec6.bprime",
        "sec6.adoubleprime",
        "sec6.bdoubleprime",
        "bracket.typeI2",
    )
    return {name: bundled_matrix(name) for name in names}


@pytest.fixture(scope="session")
def gens_a(matrices):
    return get_generators(matrices["sec6.a"], "p")


@pytest.fixture(scope="session")
def gens_b(matrices):
    return get_generators(matrices["sec6.b"], "q")


@pytest.fixture(scope="session")
def onshell_a(matrices):
    return get_presentation(matrices["sec6.a"], "p", Shell.ON)


@pytest.fixture(scope="session")
def onshell_b(matrices):
    return get_presentation(matrices["sec6.b"], "q", Shell.ON)


@pytest.fixture
def rng() -> np.random.Generator:
    return np.random.default_rng(7)


def row(*values: int) -> IntMatrix:
    return IntMatrix.row_vector(values)


# Faithful Type I_k instances ``(a, n, c)`` with ℓ ≤ 3, k ≤ 2 and α ≤ 6.
TYPE1_FAMILY = (
    ((1,), (1,), (1,)),
    ((2,), (1,), (1,)),
    ((3,), (2,), (1,)),
    ((2,), (1,), (1, 1)),
    ((3,), (1,), (1, 1)),
    ((1, 2), (1, 1), (1,)),
    ((2, 3), (1, 1), (1,)),
    ((1, 2), (1, 1), (1, 1)),
    ((2, 3), (1, 1), (1, 1)),
    ((1, 1, 1), (1, 1, 1), (1,)),
    ((1, 2, 3), (1, 1, 1), (1,)),
    ((1, 1, 2), (1, 1, 1), (1, 1)),
)


def type1_params(slow_above: int | None = None) -> list:
    """``TYPE1_FAMILY`` as ``pytest.param``s; more than ``slow_above`` generators marks a case slow."""
    params = []
    for a, n, c in TYPE1_FAMILY:
        k, alpha = len(c), math.lcm(*a)
        count = len(a) + k * k + 2 * math.comb(alpha + k - 1, k - 1)
        marks = [pytest.mark.slow] if slow_above is not None and count > slow_above else []
        params.append(pytest.param(a, n, c, marks=marks, id=f"a={a}-n={n}-c={c}"))
    return params
