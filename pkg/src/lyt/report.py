"""Violation reports shared by every checker."""

from dataclasses import dataclass, field
import os

import numpy as np

from .linalg import fmt


def max_violations():
    return int(os.environ.get("LYT_MAX_VIOLATIONS", "32"))


@dataclass(frozen=True)
class Violation:
    axiom: str
    index: tuple
    left: tuple
    right: tuple

    def as_dict(self):
        return {
            "axiom": self.axiom,
            "index": list(self.index),
            "left": [fmt(v) for v in self.left],
            "right": [fmt(v) for v in self.right],
        }


@dataclass
class AxiomReport:
    """Outcome of an identity check on all basis tuples.

    ``violations`` holds at most ``cap`` entries; ``total`` counts all of them.
    """

    violations: list = field(default_factory=list)
    total: int = 0
    cap: int = field(default_factory=max_violations)
    checked: list = field(default_factory=list)

    @property
    def passed(self):
        return self.total == 0

    def __bool__(self):
        return self.passed

    def failed_axioms(self):
        return sorted({v.axiom for v in self.violations})

    def compare(self, tag, lhs, rhs, value_axes=1):
        """Record every basis tuple where ``lhs`` and ``rhs`` differ.

        The trailing ``value_axes`` axes hold the value; with ``value_axes=2``
        the values are matrices and each column (one basis vector of the
        module) is reported separately.
        """
        self.checked.append(tag)
        lhs = np.asarray(lhs, dtype=object)
        rhs = np.asarray(rhs, dtype=object)
        if lhs.shape != rhs.shape:
            raise ValueError(f"{tag}: shape mismatch {lhs.shape} vs {rhs.shape}")
        if value_axes == 2:
            # (..., a, u) -> (..., u, a): the column index joins the basis tuple
            lhs = np.swapaxes(lhs, -1, -2)
            rhs = np.swapaxes(rhs, -1, -2)
        if lhs.ndim == 0 or lhs.shape[-1] == 0:
            return self
        diff = lhs - rhs
        bad = np.array([v != 0 for v in diff.flat], dtype=bool).reshape(diff.shape)
        idx = np.argwhere(bad.any(axis=-1))
        self.total += len(idx)
        room = self.cap - len(self.violations)
        for i in map(tuple, idx[:max(room, 0)]):
            self.violations.append(
                Violation(tag, tuple(int(k) for k in i), tuple(lhs[i]), tuple(rhs[i]))
            )
        return self

    def merge(self, other):
        self.checked.extend(other.checked)
        self.total += other.total
        room = self.cap - len(self.violations)
        self.violations.extend(other.violations[:max(room, 0)])
        return self

    def as_dict(self):
        return {
            "passed": self.passed,
            "total_violations": self.total,
            "checked": list(dict.fromkeys(self.checked)),
            "violations": [v.as_dict() for v in self.violations],
        }

    def summary(self):
        tags = list(dict.fromkeys(self.checked))
        if self.passed:
            return f"{', '.join(tags)}: pass"
        return f"FAIL ({self.total} violations in {', '.join(self.failed_axioms())})"


class CheckFailed(ValueError):
    """Raised when a construction's precondition check fails; carries the report."""

    def __init__(self, message, report=None):
        super().__init__(message)
        self.report = report
