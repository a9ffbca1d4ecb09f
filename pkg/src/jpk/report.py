"""Verdict reports returned by every identity checker."""
from __future__ import annotations

from dataclasses import dataclass, field

from .partitions import SymPoly, format_partition
from .scalars import format_drat


@dataclass
class VerdictReport:
    identity: str
    params: dict
    passed: bool = True
    counterexample: dict | None = None
    checks: int = 0
    notes: list = field(default_factory=list)

    def fail(self, **where):
        if self.passed:
            self.passed = False
            self.counterexample = where
        return self

    def require(self, ok: bool, **where):
        self.checks += 1
        if not ok:
            self.fail(**where)
        return ok

    def merge(self, other: "VerdictReport"):
        self.checks += other.checks
        self.notes.extend(other.notes)
        if not other.passed and self.passed:
            self.passed = False
            self.counterexample = dict(other.counterexample or {}, identity=other.identity)
        return self

    def line(self) -> str:
        status = "PASS" if self.passed else "FAIL"
        ps = " ".join(f"{k}={_fmt(v)}" for k, v in self.params.items())
        out = f"{status}  {self.identity:<28} {ps}  ({self.checks} checks)"
        if self.counterexample:
            out += "  first counterexample: " + ", ".join(
                f"{k}={_fmt(v)}" for k, v in self.counterexample.items()
            )
        return out

    def to_json(self) -> dict:
        return {
            "identity": self.identity,
            "params": {k: _fmt(v) for k, v in self.params.items()},
            "passed": self.passed,
            "checks": self.checks,
            "counterexample": None if self.counterexample is None
            else {k: _fmt(v) for k, v in self.counterexample.items()},
            "notes": list(self.notes),
        }


def _fmt(v):
    if isinstance(v, tuple) and all(isinstance(x, int) for x in v):
        return "(" + format_partition(v) + ")"
    if isinstance(v, (list, tuple)):
        return "[" + ", ".join(_fmt(x) for x in v) + "]"
    if isinstance(v, SymPoly):
        return str(v)
    if isinstance(v, (bool, int, str)) or v is None:
        return v
    return format_drat(v)


def compare_slots(report: VerdictReport, lhs: list, rhs: list, **where) -> bool:
    """Slotwise comparison of two u-polynomials with SymPoly coefficients."""
    r = len(lhs) - 1
    for p, (a, b) in enumerate(zip(lhs, rhs)):
        diff = a - b
        if not report.require(diff.is_zero(), slot=f"u^{r - p}",
                              partition=next(iter(sorted(diff.coeffs, reverse=True)), None),
                              difference=diff, **where):
            return False
    return True


def compare_scalar_slots(report: VerdictReport, lhs: list, rhs: list, **where) -> bool:
    r = len(lhs) - 1
    for p, (a, b) in enumerate(zip(lhs, rhs)):
        diff = a - b
        if not report.require(not diff, slot=f"u^{r - p}", difference=diff, **where):
            return False
    return True
