"""Structured pass/fail records with witnesses, serializable to JSON."""

from __future__ import annotations

import json
from dataclasses import asdict, dataclass, field

PASS = "pass"
FAIL = "fail"
INCONCLUSIVE = "inconclusive"
STATUSES = (PASS, FAIL, INCONCLUSIVE)


@dataclass(frozen=True)
class Check:
    id: str
    paper_ref: str
    status: str
    witness: str | None = None
    description: str = ""

    def __post_init__(self):
        if self.status not in STATUSES:
            raise ValueError(f"bad status {self.status!r}")

    @property
    def passed(self) -> bool:
        return self.status == PASS


def check(id: str, ok: bool, paper_ref: str, witness: str | None = None, description: str = "") -> Check:
    """A pass/fail check; the witness is only kept on failure."""
    return Check(id, paper_ref, PASS if ok else FAIL, None if ok else witness, description)


@dataclass
class VerificationReport:
    suite: str
    checks: list[Check] = field(default_factory=list)
    config: dict = field(default_factory=dict)

    def add(self, c: Check) -> Check:
        self.checks.append(c)
        return c

    def extend(self, other: VerificationReport) -> VerificationReport:
        self.checks.extend(other.checks)
        return self

    @property
    def passed(self) -> bool:
        return all(c.status == PASS for c in self.checks)

    def count(self, status: str) -> int:
        return sum(c.status == status for c in self.checks)

    def failures(self) -> list[Check]:
        return [c for c in self.checks if c.status == FAIL]

    def exit_code(self) -> int:
        """0 all pass, 1 any failure, 3 only inconclusive checks besides passes."""
        if self.count(FAIL):
            return 1
        if self.count(INCONCLUSIVE):
            return 3
        return 0

    def to_dict(self) -> dict:
        return {
            "suite": self.suite,
            "config": dict(sorted(self.config.items())),
            "checks": [asdict(c) for c in sorted(self.checks, key=lambda c: c.id)],
        }

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), indent=2, sort_keys=False) + "\n"

    @classmethod
    def from_dict(cls, data: dict) -> VerificationReport:
        return cls(
            suite=data["suite"],
            checks=[Check(**c) for c in data["checks"]],
            config=dict(data.get("config", {})),
        )

    @classmethod
    def from_json(cls, text: str) -> VerificationReport:
        return cls.from_dict(json.loads(text))

    def summary(self) -> str:
        return (
            f"{self.suite}: {self.count(PASS)} passed, {self.count(FAIL)} failed, "
            f"{self.count(INCONCLUSIVE)} inconclusive"
        )

    def render(self) -> str:
        lines = []
        for c in sorted(self.checks, key=lambda c: c.id):
            line = f"[{c.status.upper():>12}] {c.id}"
            if c.description:
                line += f"  {c.description}"
            lines.append(line)
            if c.witness:
                lines.append(f"{'':15}witness: {c.witness}")
        lines.append(self.summary())
        return "\n".join(lines)
