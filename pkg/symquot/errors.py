"""Exception hierarchy shared by the library and the CLI.

Every error carries a short machine-readable ``code`` and the process exit
status the CLI returns for it (2 precondition, 3 parse, 4 internal
consistency).
"""

from __future__ import annotations


class SymquotError(Exception):
    """Base class for all library errors."""

    code: str = "error"
    exit_code: int = 4

    def to_dict(self) -> dict[str, str]:
        return {"error": self.code, "detail": str(self)}


# ── Precondition family (exit 2) ─────────────────────────────────────────────

class ArgumentError(SymquotError, ValueError):
    code = "argument"
    exit_code = 2


class PreconditionError(SymquotError):
    code = "precondition"
    exit_code = 2


class GuardError(PreconditionError):
    """An enumeration guard (α or column count) was exceeded without --force."""

    code = "guard"


class UnsupportedCoefficientError(SymquotError):
    code = "unsupported-coefficient"
    exit_code = 2


class UnsupportedCombinationError(SymquotError):
    code = "unsupported-combination"
    exit_code = 2


class RegularSequenceError(PreconditionError):
    code = "regular-sequence"


class ReconstructionError(PreconditionError):
    code = "reconstruction"


class SamplerError(PreconditionError):
    code = "sampler"


# ── Parse (exit 3) ───────────────────────────────────────────────────────────

class ParseError(SymquotError, ValueError):
    code = "parse"
    exit_code = 3


# ── Internal consistency (exit 4) ────────────────────────────────────────────

class InternalConsistencyError(SymquotError):
    code = "internal-consistency"
    exit_code = 4
