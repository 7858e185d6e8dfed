"""Relation ideals among invariant generators, off-shell and on-shell."""

from __future__ import annotations

import logging
from collections import defaultdict
from dataclasses import dataclass
from enum import Enum

from symquot.errors import InternalConsistencyError
from symquot.invariants.generators import (
    GeneratorSet,
    ambient_polynomial,
    compositions,
    monomials_of_degree,
    require_type1,
    s_label,
    type1_generators,
)
from symquot.invariants.moment import shell_forms
from symquot.lattice.matrix import IntMatrix, integer_kernel_basis
from symquot.poly.groebner import IdealBasis, groebner_basis, ideal_member
from symquot.poly.polynomial import Polynomial
from symquot.utils.stats import timed
from symquot.weights.types import TypeInfo

logger = logging.getLogger(__name__)


class Shell(str, Enum):
    OFF = "off"
    ON = "on"


@dataclass(frozen=True)
class PresentationIdeal:
    """Relations among the generators of ``gens``."""

    gens: GeneratorSet
    ideal: IdealBasis
    shell: Shell = Shell.OFF

    @property
    def names(self) -> tuple[str, ...]:
        return self.gens.names

    def on_shell(self) -> "PresentationIdeal":
        if self.shell is Shell.ON:
            return self
        ideal = self.ideal.with_generators(shell_forms(self.gens))
        return PresentationIdeal(self.gens, ideal, Shell.ON)

    def contains(self, f: Polynomial) -> bool:
        return bool(ideal_member(f, self.ideal))

    def to_json(self) -> dict:
        return {
            "shell": self.shell.value,
            "generators": list(self.names),
            "relations": [str(g) for g in self.ideal.generators],
        }


def binomial(gens: GeneratorSet, plus: dict[str, int], minus: dict[str, int]) -> Polynomial:
    names, weights = gens.names, gens.degrees
    left = tuple(plus.get(n, 0) for n in names)
    right = tuple(minus.get(n, 0) for n in names)
    return Polynomial(names, {left: 1}, weights) - Polynomial(names, {right: 1}, weights)


# ---------------------------------------------------------------------------
# Generic toric ideal
# ---------------------------------------------------------------------------


def _exponent_matrix(gens: GeneratorSet) -> IntMatrix:
    return IntMatrix.from_columns([g.exponent for g in gens.generators])


def _lattice_binomial(names, weights, vector) -> Polynomial:
    plus = tuple(max(x, 0) for x in vector)
    minus = tuple(max(-x, 0) for x in vector)
    return Polynomial(names, {plus: 1}, weights) - Polynomial(names, {minus: 1}, weights)


def _saturate_variable(ideal: IdealBasis, index: int) -> IdealBasis:
    """``I : x^∞`` for a homogeneous binomial ideal, with ``x`` ordered last."""
    names, weights = ideal.names, ideal.weights
    order = [i for i in range(len(names)) if i != index] + [index]
    moved_names = tuple(names[i] for i in order)
    moved_weights = tuple(weights[i] for i in order)
    moved = [g.embed(moved_names, moved_weights) for g in ideal.generators]
    G = groebner_basis(IdealBasis.of(moved, moved_names, moved_weights))
    last = len(names) - 1
    divided = []
    for g in G.generators:
        power = min(exp[last] for exp, _ in g.items())
        terms = {exp[:last] + (exp[last] - power,): c for exp, c in g.items()}
        divided.append(Polynomial(moved_names, terms, moved_weights).embed(names, weights))
    return IdealBasis.of(divided, names, weights)


def toric_relations(gens: GeneratorSet) -> PresentationIdeal:
    """Lattice ideal of the exponent map, saturated one generator at a time."""
    names, weights = gens.names, gens.degrees
    kernel = integer_kernel_basis(_exponent_matrix(gens))
    ideal = IdealBasis.of([_lattice_binomial(names, weights, v) for v in kernel], names, weights)
    if ideal.is_zero():
        return PresentationIdeal(gens, ideal)
    with timed("toric"):
        for index in range(len(names)):
            ideal = _saturate_variable(ideal, index)
        ideal = groebner_basis(ideal)
    logger.info("Toric ideal on %d generators: kernel rank %d, %d Gröbner elements", len(names), len(kernel), len(ideal.generators))
    return PresentationIdeal(gens, ideal)


def certify_toric(presentation: PresentationIdeal, bound: int) -> bool:
    """Check the ideal against all monomial coincidences up to degree ``bound``.

    Every generator must vanish on the ambient monomials, and every pair of
    generator monomials with the same ambient image must differ by a member.
    """
    gens = presentation.gens
    if presentation.shell is Shell.OFF:
        for g in presentation.ideal.generators:
            if not ambient_polynomial(gens, g).is_zero():
                raise InternalConsistencyError(f"Relation {g} does not vanish on the invariants")
    for degree in range(1, bound + 1):
        groups: dict[tuple, list] = defaultdict(list)
        for exp in monomials_of_degree(gens, degree):
            image = [0] * (2 * gens.n)
            for e, g in zip(exp, gens.generators):
                if e:
                    image = [x + e * y for x, y in zip(image, g.exponent)]
            groups[tuple(image)].append(exp)
        for members in groups.values():
            first = Polynomial(gens.names, {members[0]: 1}, gens.degrees)
            for other in members[1:]:
                diff = first - Polynomial(gens.names, {other: 1}, gens.degrees)
                if not ideal_member(diff, presentation.ideal):
                    logger.warning("Missing relation in degree %d: %s", degree, diff)
                    return False
    return True


# ---------------------------------------------------------------------------
# Type I_k closed form
# ---------------------------------------------------------------------------


def type1_relations(info: TypeInfo, gens: GeneratorSet | None = None) -> PresentationIdeal:
    """The six binomial families of a faithful Type I_k presentation."""
    require_type1(info)
    gens = gens or type1_generators(info)
    k, alpha = info.k, info.alpha
    rng = range(1, k + 1)
    ss = compositions(alpha, k)
    found: dict[frozenset, Polynomial] = {}

    def add(plus: dict[str, int], minus: dict[str, int]) -> None:
        key = frozenset([tuple(sorted(plus.items())), tuple(sorted(minus.items()))])
        if len(key) == 2 and key not in found:
            found[key] = binomial(gens, plus, minus)

    def bump(counts: dict[str, int], name: str) -> dict[str, int]:
        out = dict(counts)
        out[name] = out.get(name, 0) + 1
        return out

    def p(i: int, j: int) -> str:
        return f"p{i}_{j}"

    def shift(s: tuple[int, ...], up: int, down: int) -> tuple[int, ...]:
        out = list(s)
        out[up - 1] += 1
        out[down - 1] -= 1
        return tuple(out)

    # (1) 2×2 minors of the p-matrix
    for g in rng:
        for h in rng:
            for i in rng:
                for j in rng:
                    if g != i and h != j:
                        add(bump(bump({}, p(g, h)), p(i, j)), bump(bump({}, p(g, j)), p(i, h)))
    # (2) and (3) moving one unit of s between two columns
    for s in ss:
        for g in rng:
            for i in rng:
                if g == i or s[i - 1] < 1:
                    continue
                s2 = shift(s, g, i)
                for h in rng:
                    add({p(g, h): 1, f"q{s_label(s)}": 1}, {p(i, h): 1, f"q{s_label(s2)}": 1})
        for h in rng:
            for i in rng:
                if h == i or s[i - 1] < 1:
                    continue
                s2 = shift(s, h, i)
                for g in rng:
                    add({p(g, h): 1, f"qbar{s_label(s)}": 1}, {p(g, i): 1, f"qbar{s_label(s2)}": 1})
    # (4) and (5) quadratic relations among the q's with equal sums
    by_sum: dict[tuple[int, ...], list] = defaultdict(list)
    for a_idx, s in enumerate(ss):
        for t in ss[a_idx:]:
            by_sum[tuple(x + y for x, y in zip(s, t))].append((s, t))
    for pairs in by_sum.values():
        for (s, s2), (t, t2) in zip(pairs, pairs[1:]):
            for bar in ("q", "qbar"):
                add(bump(bump({}, f"{bar}{s_label(s)}"), f"{bar}{s_label(s2)}"),
                    bump(bump({}, f"{bar}{s_label(t)}"), f"{bar}{s_label(t2)}"))
    # (6) q_s · qbar_s' against r- and p-monomials
    for s in ss:
        for s2 in ss:
            rows = [g for g in rng for _ in range(s[g - 1])]
            cols = [h for h in rng for _ in range(s2[h - 1])]
            plus: dict[str, int] = {f"r{i + 1}": m for i, m in enumerate(info.m)}
            for g, h in zip(rows, cols):
                plus = bump(plus, p(g, h))
            add(plus, {f"q{s_label(s)}": 1, f"qbar{s_label(s2)}": 1})
    relations = list(found.values())
    logger.info("Type I_%d closed form: %d binomial relations", k, len(relations))
    return PresentationIdeal(gens, IdealBasis.of(relations, gens.names, gens.degrees))
