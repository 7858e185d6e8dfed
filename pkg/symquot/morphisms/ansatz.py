"""Coefficient ansatz for a graded isomorphism between the (−2, 3, 6) and (−3, 2, 6) quotients.

A graded map must send each ``p_i`` (``i ≥ 1``) to a combination of the two
``q`` generators of the same degree block. Requiring that the two lowest
relations map to the corresponding relations,

    Φ(R1) = k1·R1'
    Φ(R2) = k2·(R2' + k3·q1·R1' + k4·q2·R1'),

gives polynomial equations in the coefficients. The system is solved by
Gröbner bases with a case split on monomial basis elements, after
saturating by ``k1·k2``.
"""

from __future__ import annotations

import logging
from dataclasses import dataclass, field
from typing import Sequence

from symquot.config import get_settings
from symquot.poly.groebner import IdealBasis, groebner_basis, radical_member, saturate
from symquot.poly.polynomial import Polynomial
from symquot.poly.textual import parse_polynomial
from symquot.utils.file_utils import read_json

logger = logging.getLogger(__name__)

BLOCKS = ((1, 2), (3, 4), (5, 6), (7, 8))
SOURCE_NAMES = tuple(f"p{i}" for i in range(1, 9))
TARGET_NAMES = tuple(f"q{i}" for i in range(1, 9))
SCALARS = ("k1", "k2", "k3", "k4")

# (relation, target monomial exponents over q1..q8) for the listed coefficient equations
SELECTED = (
    ("R1", (3, 0, 0, 0, 0, 0, 0, 0)),
    ("R1", (0, 0, 2, 0, 0, 0, 0, 0)),
    ("R1", (2, 1, 0, 0, 0, 0, 0, 0)),
    ("R2", (2, 2, 0, 0, 0, 0, 0, 0)),
    ("R2", (1, 3, 0, 0, 0, 0, 0, 0)),
    ("R2", (0, 4, 0, 0, 0, 0, 0, 0)),
    ("R2", (1, 0, 1, 1, 0, 0, 0, 0)),
    ("R2", (0, 1, 1, 1, 0, 0, 0, 0)),
)


def _block_of(i: int) -> tuple[int, int]:
    return next(b for b in BLOCKS if i in b)


def coefficient_names() -> tuple[str, ...]:
    names = []
    for i in range(1, 9):
        for j in _block_of(i):
            names.append(f"c{i}{j}")
    return tuple(names)


def unknowns() -> tuple[str, ...]:
    return coefficient_names() + SCALARS


@dataclass(frozen=True)
class AnsatzSystem:
    unknowns: tuple[str, ...]
    equations: tuple[Polynomial, ...]
    labels: tuple[str, ...]

    def to_json(self) -> dict:
        return {
            "unknowns": list(self.unknowns),
            "equations": [{"label": l, "equation": f"{e} = 0"} for l, e in zip(self.labels, self.equations)],
        }


@dataclass(frozen=True)
class AnsatzFamily:
    """One branch of the case split with its saturated ideal."""

    assumptions: tuple[str, ...]
    basis: tuple[Polynomial, ...]
    killed: tuple[str, ...]
    forced: bool

    def to_json(self) -> dict:
        return {
            "assumptions": list(self.assumptions),
            "basis": [str(g) for g in self.basis],
            "killed": list(self.killed),
            "forced": self.forced,
        }


@dataclass(frozen=True)
class AnsatzSolution:
    families: tuple[AnsatzFamily, ...]
    inconsistent: tuple[tuple[str, ...], ...] = field(default=())

    @property
    def nondegenerate(self) -> list[AnsatzFamily]:
        return [f for f in self.families if not f.killed]

    @property
    def forced_everywhere(self) -> bool:
        return all(f.forced for f in self.nondegenerate)

    def to_json(self) -> dict:
        return {
            "families": [f.to_json() for f in self.families],
            "inconsistent_branches": [list(a) for a in self.inconsistent],
            "forced_everywhere": self.forced_everywhere,
        }


# ---------------------------------------------------------------------------
# Building the system
# ---------------------------------------------------------------------------


def _context() -> tuple[str, ...]:
    return unknowns() + TARGET_NAMES


def _images(names: tuple[str, ...]) -> dict[str, Polynomial]:
    images = {}
    for i in range(1, 9):
        a, b = _block_of(i)
        images[f"p{i}"] = (
            Polynomial.variable(names, f"c{i}{a}") * Polynomial.variable(names, f"q{a}")
            + Polynomial.variable(names, f"c{i}{b}") * Polynomial.variable(names, f"q{b}")
        )
    return images


def _load_relations() -> dict[str, dict[str, str]]:
    return read_json(f"{get_settings().data_dir}/ansatz_relations.json")


def _split_coefficients(poly: Polynomial, count: int) -> dict[tuple[int, ...], Polynomial]:
    """Group ``poly`` by its exponent in the last ``count`` variables."""
    head = poly.names[: len(poly.names) - count]
    grouped: dict[tuple[int, ...], dict] = {}
    for exp, coeff in poly.items():
        key = exp[len(head):]
        grouped.setdefault(key, {})[exp[: len(head)]] = coeff
    return {key: Polynomial(head, terms) for key, terms in grouped.items()}


def _residuals() -> dict[str, Polynomial]:
    names = _context()
    text = _load_relations()
    images = _images(names)
    source = {key: parse_polynomial(value, SOURCE_NAMES) for key, value in text["source"].items()}
    target = {key: parse_polynomial(value, names) for key, value in text["target"].items()}
    k = {s: Polynomial.variable(names, s) for s in SCALARS}
    q = {n: Polynomial.variable(names, n) for n in ("q1", "q2")}
    phi = {key: poly.substitute(images, names) for key, poly in source.items()}
    r1 = phi["R1"] - k["k1"] * target["R1"]
    cofactor = target["R2"] + k["k3"] * q["q1"] * target["R1"] + k["k4"] * q["q2"] * target["R1"]
    r2 = phi["R2"] - k["k2"] * cofactor
    return {"R1": r1, "R2": r2}


def _monomial_label(exp: Sequence[int]) -> str:
    parts = [n if e == 1 else f"{n}^{e}" for n, e in zip(TARGET_NAMES, exp) if e]
    return "*".join(parts) or "1"


def ansatz_system(full: bool = False) -> AnsatzSystem:
    """The listed coefficient equations, or every coefficient equation with ``full``."""
    residuals = {key: _split_coefficients(r, len(TARGET_NAMES)) for key, r in _residuals().items()}
    zero = Polynomial.zero(unknowns())
    equations, labels = [], []
    if full:
        for key in ("R1", "R2"):
            for exp, eq in sorted(residuals[key].items(), reverse=True):
                equations.append(eq)
                labels.append(f"{key}:{_monomial_label(exp)}")
    else:
        for key, exp in SELECTED:
            equations.append(residuals[key].get(exp, zero))
            labels.append(f"{key}:{_monomial_label(exp)}")
    logger.info("Ansatz system: %d equations in %d unknowns", len(equations), len(unknowns()))
    return AnsatzSystem(unknowns(), tuple(equations), tuple(labels))


# ---------------------------------------------------------------------------
# Solving
# ---------------------------------------------------------------------------


def _variable(name: str) -> Polynomial:
    return Polynomial.variable(unknowns(), name)


def _nonzero() -> Polynomial:
    return _variable("k1") * _variable("k2")


def forced_relations() -> dict[str, Polynomial]:
    c = _variable
    return {
        "c21 = 0": c("c21"),
        "c11 = -2*c22/3": c("c11").scale(3) + c("c22").scale(2),
        "c12 = -2*c22": c("c12") + c("c22").scale(2),
    }


def _splitting_element(basis: Sequence[Polynomial]) -> Polynomial | None:
    for g in basis:
        if g.is_monomial() and len(g.support()) > 1:
            return g
    return None


def _killed(ideal: IdealBasis) -> tuple[str, ...]:
    killed = []
    for i in range(1, 9):
        a, b = _block_of(i)
        if radical_member(_variable(f"c{i}{a}"), ideal) and radical_member(_variable(f"c{i}{b}"), ideal):
            killed.append(f"p{i}")
    return tuple(killed)


def branch_implies(assumptions: Sequence[Polynomial], consequence: Polynomial, full: bool = False) -> bool:
    """Whether the system plus ``assumptions`` forces ``consequence`` to vanish."""
    system = ansatz_system(full)
    ideal = IdealBasis.of(list(system.equations) + list(assumptions), unknowns())
    return radical_member(consequence, ideal)


def ansatz_nogo(full: bool = False) -> AnsatzSolution:
    """All solution families of the ansatz with ``k1, k2 ≠ 0``."""
    system = ansatz_system(full)
    names = unknowns()
    pending = [((), IdealBasis.of(list(system.equations), names))]
    families: list[AnsatzFamily] = []
    inconsistent: list[tuple[str, ...]] = []
    while pending:
        assumptions, ideal = pending.pop(0)
        saturated = groebner_basis(saturate(ideal, _nonzero()))
        if any(g.degree() == 0 for g in saturated.generators):
            logger.debug("Branch %s is inconsistent with k1*k2 != 0", assumptions)
            inconsistent.append(assumptions)
            continue
        split = _splitting_element(saturated.generators)
        if split is not None:
            for var in sorted(split.support()):
                extra = saturated.with_generators([_variable(var)])
                pending.append((assumptions + (f"{var} = 0",), extra))
            continue
        killed = _killed(saturated)
        forced = all(radical_member(rel, saturated) for rel in forced_relations().values())
        logger.info("Ansatz family %s: killed %s, forced %s", assumptions or "(generic)", killed or "none", forced)
        families.append(AnsatzFamily(assumptions, saturated.generators, killed, forced))
    return AnsatzSolution(tuple(families), tuple(inconsistent))
