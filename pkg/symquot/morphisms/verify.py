"""Checks that a graded map respects relations, brackets and inequalities.

Membership is decided radicand by radicand: square roots of distinct
squarefree integers are linearly independent over the Gaussian rationals,
so an image lies in the extended ideal exactly when each part does.
"""

from __future__ import annotations

import logging
from dataclasses import dataclass, field
from enum import Enum
from typing import Optional

import numpy as np

from symquot.config import get_settings
from symquot.errors import UnsupportedCombinationError
from symquot.invariants.generators import ambient_polynomial, hilbert_map
from symquot.invariants.poisson import RewriteMethod, bracket_in_generators, poisson_bracket, rewrite_in_generators
from symquot.invariants.relations import PresentationIdeal
from symquot.invariants.semialgebraic import shell_sample
from symquot.morphisms.maps import GradedMonomialMap, RadicalSum
from symquot.poly.coefficient import Coefficient
from symquot.poly.groebner import normal_form
from symquot.poly.polynomial import Polynomial
from symquot.utils.stats import add_stat

logger = logging.getLogger(__name__)


# ---------------------------------------------------------------------------
# Results
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class Certificate:
    """Normal form of one image modulo the destination ideal, per radicand."""

    subject: str
    image: str
    normal_forms: dict[int, str] = field(default_factory=dict)
    method: str = "normal-form"

    @property
    def member(self) -> bool:
        return all(text == "0" for text in self.normal_forms.values())

    def to_json(self) -> dict:
        return {
            "subject": self.subject,
            "image": self.image,
            "normal_forms": {str(r): text for r, text in sorted(self.normal_forms.items())},
            "method": self.method,
            "member": self.member,
        }


@dataclass(frozen=True)
class VerificationResult:
    holds: bool
    certificates: tuple[Certificate, ...] = ()

    def __bool__(self) -> bool:
        return self.holds

    def failures(self) -> list[Certificate]:
        return [c for c in self.certificates if not c.member]

    def to_json(self) -> dict:
        return {"holds": self.holds, "certificates": [c.to_json() for c in self.certificates]}


class InequalityStatus(str, Enum):
    VIOLATED = "violated"
    NO_VIOLATION_FOUND = "no_violation_found"


@dataclass(frozen=True)
class Witness:
    """A shell point where the image of ``generator`` is negative."""

    generator: str
    image: str
    value: float
    point: tuple[complex, ...]

    def to_json(self) -> dict:
        return {
            "generator": self.generator,
            "image": self.image,
            "value": self.value,
            "point": [[z.real, z.imag] for z in self.point],
        }


@dataclass(frozen=True)
class InequalityVerdict:
    status: InequalityStatus
    samples: int
    witness: Optional[Witness] = None

    @property
    def violated(self) -> bool:
        return self.status is InequalityStatus.VIOLATED

    def to_json(self) -> dict:
        return {
            "status": self.status.value,
            "samples": self.samples,
            "witness": self.witness.to_json() if self.witness else None,
        }


# ---------------------------------------------------------------------------
# Grading
# ---------------------------------------------------------------------------


def verify_graded(mapping: GradedMonomialMap) -> bool:
    """Every image is homogeneous of the degree of its source generator."""
    for g in mapping.source.generators:
        image = mapping.images[g.name]
        if image.is_zero():
            continue
        if image.degrees() != {g.degree}:
            logger.info("%s: image of %s has degrees %s, expected %d", mapping.name, g.name, sorted(image.degrees()), g.degree)
            return False
    return True


# ---------------------------------------------------------------------------
# Relations
# ---------------------------------------------------------------------------


def _certify(subject: str, image: RadicalSum, dst: PresentationIdeal, method: str = "normal-form") -> Certificate:
    forms = {r: str(normal_form(part, dst.ideal)) for r, part in image.parts.items()}
    return Certificate(subject, str(image), forms, method)


def _check_combination(mapping: GradedMonomialMap, relation: Polynomial) -> str:
    if not mapping.has_radicals:
        return "normal-form"
    touched = relation.support() & mapping.radical_generators()
    if not touched:
        return "normal-form"
    if not relation.is_binomial():
        raise UnsupportedCombinationError(
            f"{mapping.name} has radical images on {sorted(touched)} and {relation} is not a binomial"
        )
    return "radicand-split"


def verify_relations(mapping: GradedMonomialMap, src: PresentationIdeal, dst: PresentationIdeal) -> VerificationResult:
    """Map every generator of the source ideal into the destination ideal.

    Binomial relations under radical-coefficient maps are split by radicand,
    which compares exponents and squared coefficients of the two terms.
    """
    certificates = []
    for relation in src.ideal.generators:
        method = _check_combination(mapping, relation)
        certificates.append(_certify(str(relation), mapping.apply_radical(relation), dst, method))
    holds = all(c.member for c in certificates)
    add_stat("relations_checked", len(certificates))
    logger.info("%s: %d relations mapped, %s", mapping.name, len(certificates), "all members" if holds else "some outside")
    return VerificationResult(holds, tuple(certificates))


# ---------------------------------------------------------------------------
# Brackets
# ---------------------------------------------------------------------------


def _bracket_radical(dst: PresentationIdeal, f: RadicalSum, g: RadicalSum, method: RewriteMethod) -> RadicalSum:
    """``{f, g}`` in the destination generators, bilinear over the radicand parts."""
    gens = dst.gens
    parts: dict[int, Polynomial] = {}
    for r1, f1 in f.parts.items():
        for r2, g1 in g.parts.items():
            ambient = poisson_bracket(ambient_polynomial(gens, f1), ambient_polynomial(gens, g1))
            rewritten = rewrite_in_generators(gens, ambient, method)
            root = Coefficient.sqrt(r1) * Coefficient.sqrt(r2)
            scaled = rewritten.scale(Coefficient(root.gaussian))
            parts[root.radicand] = parts[root.radicand] + scaled if root.radicand in parts else scaled
    return RadicalSum(gens.names, gens.degrees, parts)


def verify_poisson(
    mapping: GradedMonomialMap,
    src: PresentationIdeal,
    dst: PresentationIdeal,
    method: RewriteMethod = "greedy",
) -> VerificationResult:
    """``map{a, b} − {map a, map b}`` lies in the on-shell destination ideal for all pairs."""
    target = dst.on_shell()
    images = {n: RadicalSum.of(img) for n, img in mapping.images.items()}
    names = mapping.source.names
    certificates = []
    for i, a in enumerate(names):
        for b in names[i + 1:]:
            source_bracket = bracket_in_generators(src.gens, a, b, method)
            _check_combination(mapping, source_bracket)
            lhs = mapping.apply_radical(source_bracket)
            rhs = _bracket_radical(target, images[a], images[b], method)
            certificates.append(_certify(f"{{{a}, {b}}}", lhs - rhs, target))
    holds = all(c.member for c in certificates)
    add_stat("brackets_checked", len(certificates))
    logger.info("%s: %d bracket pairs, %s", mapping.name, len(certificates), "compatible" if holds else "incompatible")
    return VerificationResult(holds, tuple(certificates))


# ---------------------------------------------------------------------------
# Inequalities
# ---------------------------------------------------------------------------


def _ambient_value(dst: PresentationIdeal, image: Polynomial, point: np.ndarray) -> complex:
    ambient = ambient_polynomial(dst.gens, image)
    n = dst.gens.n
    values = {f"z{j + 1}": point[j] for j in range(n)} | {f"w{j + 1}": np.conj(point[j]) for j in range(n)}
    return ambient.evaluate(values)


def verify_inequalities(
    mapping: GradedMonomialMap,
    src: PresentationIdeal,
    dst: PresentationIdeal,
    samples: Optional[int] = None,
    rng: Optional[np.random.Generator] = None,
) -> InequalityVerdict:
    """Look for a shell point of the destination where a nonnegative source generator maps below zero.

    A witness is confirmed a second time by evaluating the image as an
    ambient polynomial. Finding none proves nothing.
    """
    settings = get_settings()
    samples = samples if samples is not None else settings.inequality_samples
    rng = rng if rng is not None else np.random.default_rng(settings.random_seed)
    tol = settings.float_tolerance
    checked = sorted(src.gens.nonneg)
    for _ in range(samples):
        point = shell_sample(dst.gens.matrix, rng)
        values = hilbert_map(dst.gens, point)
        for name in checked:
            image = mapping.images[name]
            value = image.evaluate(values)
            if value.real >= -tol * max(1.0, abs(value)):
                continue
            confirmed = _ambient_value(dst, image, point)
            if confirmed.real < -tol * max(1.0, abs(confirmed)):
                logger.info("%s: %s maps to %.6g at a shell point", mapping.name, name, confirmed.real)
                witness = Witness(name, str(image), float(confirmed.real), tuple(complex(z) for z in point))
                return InequalityVerdict(InequalityStatus.VIOLATED, samples, witness)
    logger.warning("%s: no inequality violation in %d samples (inconclusive)", mapping.name, samples)
    return InequalityVerdict(InequalityStatus.NO_VIOLATION_FOUND, samples)
