"""Verification reports with witnesses.

Every checker returns a Report.  A failing report carries at least one
Witness naming the violated equation tag, the basis tuple it was evaluated
on, and the two values that disagree.  Witness values are formatted strings
so reports serialize to JSON without knowing the scalar type.
"""

from __future__ import annotations

from dataclasses import dataclass, field


class InputError(ValueError):
    """Malformed input: shape mismatch, unresolved name, non-prime modulus."""


class WellDefinednessError(ValueError):
    """An induced map on a tensor quotient does not kill the relation span."""

    def __init__(self, message, relation=None):
        super().__init__(message)
        self.relation = relation


class PreconditionFailure(ValueError):
    """A builder's input fails its defining laws; carries the full report."""

    def __init__(self, report):
        super().__init__(
            f"{report.check}: violated " + ", ".join(report.equations()))
        self.report = report


@dataclass
class Witness:
    equation: str
    basis: tuple
    lhs: str
    rhs: str

    def to_json(self):
        return {
            "equation": self.equation,
            "basis": list(self.basis),
            "lhs": self.lhs,
            "rhs": self.rhs,
        }


@dataclass
class Report:
    check: str
    status: str = "pass"  # pass | fail | error
    witnesses: list = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return self.status == "pass"

    def add(self, witness: Witness):
        self.status = "fail"
        self.witnesses.append(witness)

    def extend(self, other: "Report"):
        """Fold a sub-report into this one."""
        if not other.ok:
            self.status = "fail"
            self.witnesses.extend(other.witnesses)
        return self

    def equations(self):
        return sorted({w.equation for w in self.witnesses})

    def to_json(self):
        return {
            "check": self.check,
            "status": self.status,
            "witnesses": [w.to_json() for w in self.witnesses],
        }

    def summary(self) -> str:
        if self.ok:
            return f"{self.check}: pass"
        lines = [f"{self.check}: {self.status}"]
        for w in self.witnesses:
            lines.append(
                f"  {w.equation} at {w.basis}: lhs={w.lhs} rhs={w.rhs}"
            )
        return "\n".join(lines)
