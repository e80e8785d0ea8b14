"""Verification report: per-check verdicts with evidence, text and JSON forms."""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Any, Mapping, Optional

from .profile import NumberTable
from .rational import as_rational, format_rational

CHECK_IDS = (
    "validate",
    "duality",
    "slope-symmetry",
    "hypotheses",
    "hodge-witt-numbers",
    "mazur-ogus",
    "ekedahl-equality",
    "hodge-symmetry",
    "betti-parity",
)

VERDICTS = ("pass", "fail", "skipped")


@dataclass(frozen=True)
class Evidence:
    degree: Optional[int] = None
    i: Optional[int] = None
    j: Optional[int] = None
    values: Mapping[str, Fraction] = field(default_factory=dict)
    note: str = ""

    def __post_init__(self) -> None:
        object.__setattr__(
            self, "values", {k: as_rational(v) for k, v in self.values.items()}
        )

    def to_dict(self) -> dict[str, Any]:
        return {
            "degree": self.degree,
            "i": self.i,
            "j": self.j,
            "values": {k: format_rational(v) for k, v in self.values.items()},
            "note": self.note,
        }

    @classmethod
    def from_dict(cls, d: Mapping[str, Any]) -> "Evidence":
        return cls(d["degree"], d["i"], d["j"], dict(d["values"]), d["note"])

    def __str__(self) -> str:
        where = []
        if self.i is not None:
            where.append(f"(p,q)=({self.i},{self.j})")
        if self.degree is not None:
            where.append(f"n={self.degree}")
        vals = ", ".join(f"{k}={format_rational(v)}" for k, v in self.values.items())
        text = " ".join(where)
        if vals:
            text += f" [{vals}]"
        if self.note:
            text += f" {self.note}"
        return text.strip()


@dataclass(frozen=True)
class CheckResult:
    id: str
    verdict: str
    reason: str = ""
    evidence: tuple[Evidence, ...] = ()
    required: bool = True

    def __post_init__(self) -> None:
        if self.verdict not in VERDICTS:
            raise ValueError(f"unknown verdict {self.verdict!r}")

    def to_dict(self) -> dict[str, Any]:
        return {
            "id": self.id,
            "verdict": self.verdict,
            "reason": self.reason,
            "required": self.required,
            "evidence": [e.to_dict() for e in self.evidence],
        }

    @classmethod
    def from_dict(cls, d: Mapping[str, Any]) -> "CheckResult":
        return cls(
            d["id"], d["verdict"], d["reason"],
            tuple(Evidence.from_dict(e) for e in d["evidence"]),
            d["required"],
        )


def _table_to_json(t: Optional[NumberTable]) -> Optional[list]:
    if t is None:
        return None
    return [
        {"degree": n, "numbers": [format_rational(v) for v in row]}
        for n, row in t.rows.items()
    ]


def _table_from_json(d: Optional[list]) -> Optional[NumberTable]:
    if d is None:
        return None
    return NumberTable({r["degree"]: tuple(as_rational(v) for v in r["numbers"]) for r in d})


@dataclass(frozen=True)
class VerificationReport:
    profile: str
    checks: tuple[CheckResult, ...]
    predicted_hodge: Optional[NumberTable] = None

    @property
    def overall(self) -> str:
        """``pass`` iff nothing failed and no required check was skipped."""
        if any(c.verdict == "fail" for c in self.checks):
            return "fail"
        if any(c.verdict == "skipped" and c.required for c in self.checks):
            return "skipped"
        return "pass"

    def check(self, check_id: str) -> CheckResult:
        for c in self.checks:
            if c.id == check_id:
                return c
        raise KeyError(check_id)

    def verdicts(self) -> dict[str, str]:
        return {c.id: c.verdict for c in self.checks}

    def to_dict(self) -> dict[str, Any]:
        return {
            "profile": self.profile,
            "overall": self.overall,
            "checks": [c.to_dict() for c in self.checks],
            "predicted_hodge": _table_to_json(self.predicted_hodge),
        }

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), indent=2) + "\n"

    @classmethod
    def from_dict(cls, d: Mapping[str, Any]) -> "VerificationReport":
        report = cls(
            d["profile"],
            tuple(CheckResult.from_dict(c) for c in d["checks"]),
            _table_from_json(d.get("predicted_hodge")),
        )
        if d.get("overall", report.overall) != report.overall:
            raise ValueError("stored overall verdict disagrees with the checks")
        return report

    @classmethod
    def from_json(cls, text: str) -> "VerificationReport":
        return cls.from_dict(json.loads(text))

    def to_text(self) -> str:
        lines = [f"profile: {self.profile}"]
        width = max(len(c) for c in CHECK_IDS)
        for c in self.checks:
            lines.append(f"  {c.id:<{width}}  {c.verdict.upper():<7}  {c.reason}")
            for e in c.evidence:
                lines.append(f"  {'':<{width}}    - {e}")
        if self.predicted_hodge is not None:
            lines.append("  predicted Hodge numbers (h^(0,n), ..., h^(n,0)):")
            for n, row in self.predicted_hodge.rows.items():
                lines.append(f"    n={n}: ({', '.join(format_rational(v) for v in row)})")
        lines.append(f"overall: {self.overall.upper()}")
        return "\n".join(lines) + "\n"
