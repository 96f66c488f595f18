"""Exception types raised across the engine."""

from __future__ import annotations

from typing import NamedTuple


class Violation(NamedTuple):
    code: str
    message: str
    items: tuple = ()

    def as_dict(self):
        return {"code": self.code, "message": self.message, "items": list(self.items)}


class KanError(Exception):
    """Base class; every engine error carries a machine-readable ``code``."""

    code = "error"

    def as_dict(self):
        return {"code": self.code, "message": str(self)}


class ValidationError(KanError):
    """Raised when tables fail the axioms; ``violations`` lists every failure."""

    code = "validation"

    def __init__(self, what, violations):
        self.what = what
        self.violations = list(violations)
        lines = "; ".join(v.message for v in self.violations[:5])
        more = len(self.violations) - 5
        if more > 0:
            lines += f"; ... ({more} more)"
        super().__init__(f"invalid {what}: {lines}")

    def as_dict(self):
        return {
            "code": self.code,
            "message": str(self),
            "violations": [v.as_dict() for v in self.violations],
        }


def format_count(n):
    """Exact decimal for modest integers, a power of two otherwise."""
    if isinstance(n, int) and n.bit_length() > 64:
        return f"~2^{n.bit_length() - 1}"
    return str(n)


class GuardExceeded(KanError):
    code = "guard-exceeded"

    def __init__(self, what, estimate, cap):
        self.estimate = estimate
        self.cap = cap
        super().__init__(f"{what}: search space estimate {format_count(estimate)} exceeds cap {cap}")

    def as_dict(self):
        est = self.estimate if isinstance(self.estimate, int) and self.estimate.bit_length() <= 64 else format_count(self.estimate)
        return {"code": self.code, "message": str(self), "estimate": est, "cap": self.cap}


class UniversalityError(KanError):
    """A universal property failed: no factorisation, or more than one."""

    code = "universality"

    def __init__(self, message, survivors=0):
        self.survivors = survivors
        super().__init__(message)


class NoColimit(KanError):
    """A required (co)limit does not exist in a finite target category."""

    code = "no-colimit"


class ExtensionUndefined(KanError):
    code = "extension-undefined"


class NotFound(KanError):
    code = "not-found"
