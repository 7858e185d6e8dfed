"""Pydantic report models shared by the commands and the reproduction registry."""

from __future__ import annotations

from enum import Enum
from typing import Any, Optional

from pydantic import BaseModel, Field


# ── Output ───────────────────────────────────────────────────────────────────

class OutputFormat(str, Enum):
    JSON = "json"
    TABLE = "table"


class ItemStatus(str, Enum):
    PASS = "pass"
    FAIL = "fail"


# ── Weight matrices ──────────────────────────────────────────────────────────

class TypeReport(BaseModel):
    """Block data of a weight matrix."""
    kind: str
    rows: int
    cols: int
    a: list[int] = Field(default_factory=list)
    n: list[int] = Field(default_factory=list)
    c: list[int] = Field(default_factory=list)
    alpha: Optional[int] = None
    m: list[int] = Field(default_factory=list)
    beta: Optional[int] = None
    eta: Optional[int] = None
    column_order: list[int] = Field(default_factory=list)


class ReductionReport(BaseModel):
    matrix: list[list[int]]
    type: TypeReport
    faithful: bool
    reduced: Optional[list[list[int]]] = None
    shell_identity: Optional[bool] = None
    orbit_identity: Optional[bool] = None


class ClassificationReport(BaseModel):
    kind: str
    key: list[Any] = Field(default_factory=list)
    determined: bool = False
    note: str = ""


class ComparisonReport(BaseModel):
    verdict: str
    reason: str
    left: ClassificationReport
    right: ClassificationReport


# ── Invariants ───────────────────────────────────────────────────────────────

class GeneratorRow(BaseModel):
    name: str
    u: list[int]
    v: list[int]
    degree: int
    monomial: str
    nonneg: bool = False


class RelationsReport(BaseModel):
    shell: str
    generators: list[str]
    relations: list[str]


class BracketRow(BaseModel):
    left: str
    right: str
    bracket: str


class GeneratorsReport(BaseModel):
    matrix: list[list[int]]
    generators: list[GeneratorRow]


class BracketsReport(BaseModel):
    matrix: list[list[int]]
    method: str
    brackets: list[BracketRow]


class SeriesReport(BaseModel):
    matrix: list[list[int]]
    order: int
    shell: str
    coefficients: list[int]
    rational: Optional[str] = None
    matches_rational: Optional[bool] = None
    compared_with: Optional[list[list[int]]] = None
    equal: Optional[bool] = None


# ── Full analysis ────────────────────────────────────────────────────────────

class AnalysisReport(BaseModel):
    """Everything ``analyze`` computes for one weight matrix."""
    matrix: list[list[int]]
    type: TypeReport
    faithful: bool
    reduced: Optional[list[list[int]]] = None
    generators: list[GeneratorRow] = Field(default_factory=list)
    relations: Optional[RelationsReport] = None
    brackets: list[BracketRow] = Field(default_factory=list)
    series: Optional[SeriesReport] = None
    steps: list[str] = Field(default_factory=list)
    metadata: dict[str, Any] = Field(default_factory=dict)


# ── Maps ─────────────────────────────────────────────────────────────────────

class VerificationReport(BaseModel):
    """Verdicts for one candidate map."""
    map: str
    source: list[list[int]]
    target: list[list[int]]
    images: dict[str, str]
    graded: bool
    relations: Optional[dict[str, Any]] = None
    inverse_relations: Optional[dict[str, Any]] = None
    poisson: Optional[dict[str, Any]] = None
    inequalities: Optional[dict[str, Any]] = None
    metadata: dict[str, Any] = Field(default_factory=dict)


# ── Reproduction ─────────────────────────────────────────────────────────────

class CheckResult(BaseModel):
    name: str
    expected: str
    actual: str
    passed: bool


class ItemResult(BaseModel):
    item: str
    description: str
    status: ItemStatus
    checks: list[CheckResult] = Field(default_factory=list)


class ReproduceSummary(BaseModel):
    items: list[ItemResult]
    passed: int
    failed: int


# ── Error ────────────────────────────────────────────────────────────────────

class ErrorResponse(BaseModel):
    error: str
    detail: str
