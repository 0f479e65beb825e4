"""Structured validation errors shared by all validators."""

from __future__ import annotations

from dataclasses import dataclass, field


@dataclass(frozen=True)
class Violation:
    """One broken law: which law, the offending cells, and a readable detail."""

    law: str
    witnesses: tuple[str, ...]
    detail: str

    def __str__(self):
        if self.witnesses:
            return "%s: %s [%s]" % (self.law, self.detail, ", ".join(self.witnesses))
        return "%s: %s" % (self.law, self.detail)

    def to_json(self):
        return {"law": self.law, "witnesses": list(self.witnesses), "detail": self.detail}


class ValidationError(Exception):
    """Raised by validators; carries the complete list of violations found."""

    def __init__(self, violations):
        self.violations = list(violations)
        super().__init__("; ".join(str(v) for v in self.violations))


class FormatError(ValueError):
    """Malformed interchange document (wrong shape, unknown or missing fields)."""


class SearchLimitExceeded(RuntimeError):
    """An exhaustive search outgrew its branch budget."""


@dataclass
class SearchBudget:
    """Counts candidate branches visited by exhaustive searches.

    The default limit is read from GEOMNERVE_MAX_BRANCHES (fallback 10**7).
    """

    limit: int
    spent: int = field(default=0)

    @classmethod
    def create(cls, limit=None):
        if limit is None:
            import os

            limit = int(os.environ.get("GEOMNERVE_MAX_BRANCHES", 10**7))
        return cls(limit=limit)

    def spend(self, n=1):
        self.spent += n
        if self.spent > self.limit:
            raise SearchLimitExceeded(
                "search exceeded %d candidate branches; raise the limit via "
                "--max-branches or GEOMNERVE_MAX_BRANCHES" % self.limit
            )
