"""Structured exceptions.

Every domain rejection carries a stable ``code`` and a ``details`` mapping so
the CLI can emit machine-readable JSON on stderr. Witness subsets are reported
as comma-joined label strings in ground order, matching the file format's
subset keys.
"""

from __future__ import annotations


class PmkitError(Exception):
    """Base class for all domain rejections."""

    code = "Error"

    def __init__(self, message: str, **details):
        super().__init__(message)
        self.details = details

    def to_json(self) -> dict:
        out = {"error": self.code, "message": str(self)}
        if self.details:
            out["details"] = {k: v for k, v in self.details.items()}
        return out


class MalformedInput(PmkitError):
    """Input fails a precondition before axiom checking (shape, types, keys)."""

    code = "MalformedInput"


class TooManyElements(PmkitError):
    code = "TooManyElements"


class DuplicateLabel(PmkitError):
    code = "DuplicateLabel"


# Axiom violations reported by validate(), in the order they are checked.

class NotNormalized(PmkitError):
    code = "NotNormalized"


class NotMonotone(PmkitError):
    code = "NotMonotone"


class NotSubmodular(PmkitError):
    code = "NotSubmodular"


class ExceedsK(PmkitError):
    code = "ExceedsK"


class InvalidParams(PmkitError):
    code = "InvalidParams"


class UnknownElement(PmkitError):
    code = "UnknownElement"


class LabelCollision(PmkitError):
    code = "LabelCollision"


class MixedK(PmkitError):
    code = "MixedK"


class GroundMismatch(PmkitError):
    code = "GroundMismatch"


class OutOfGrid(PmkitError):
    code = "OutOfGrid"


class TooLarge(PmkitError):
    code = "TooLarge"


class LevelOutOfRange(PmkitError):
    code = "LevelOutOfRange"


class NotExcludedMinor(PmkitError):
    code = "NotExcludedMinor"


class KMismatch(PmkitError):
    code = "KMismatch"


class RegimeViolated(PmkitError):
    code = "RegimeViolated"


class UniquenessRegimeViolated(PmkitError):
    code = "UniquenessRegimeViolated"


class NotDecomposable(PmkitError):
    code = "NotDecomposable"


class LevelMismatch(PmkitError):
    code = "LevelMismatch"


class ReconstructionFailure(PmkitError):
    code = "ReconstructionFailure"


class MinorNotDecomposable(PmkitError):
    code = "MinorNotDecomposable"


class NotInTable(PmkitError):
    code = "NotInTable"


class HypothesisViolated(PmkitError):
    code = "HypothesisViolated"


class CollapseFailed(PmkitError):
    """Raised when a guaranteed compression collapse does not hold; indicates a bug."""

    code = "CollapseFailed"


class NonIntegerResult(PmkitError):
    code = "NonIntegerResult"


class SearchBudgetExceeded(PmkitError):
    code = "SearchBudgetExceeded"


class DimensionMismatch(PmkitError):
    code = "DimensionMismatch"


class OverlappingSets(PmkitError):
    code = "OverlappingSets"


class UnknownSuite(PmkitError):
    code = "UnknownSuite"
