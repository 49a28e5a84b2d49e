"""Shared verdict types for exhaustive checks and suites."""

from __future__ import annotations

from dataclasses import dataclass, field


@dataclass(frozen=True)
class Failure:
    check: str
    witness: str


@dataclass
class Verdict:
    """Outcome of an exhaustive check: how many cases ran, which ones failed."""

    checks: int = 0
    failures: list[Failure] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return not self.failures

    def __bool__(self) -> bool:
        return self.ok

    def record(self, passed: bool, check: str, witness: str = "") -> None:
        self.checks += 1
        if not passed:
            self.failures.append(Failure(check, witness))

    def extend(self, other: Verdict) -> None:
        self.checks += other.checks
        self.failures.extend(other.failures)

    def summary(self) -> str:
        if self.ok:
            return f"pass ({self.checks} checks)"
        first = self.failures[0]
        return (
            f"FAIL {len(self.failures)}/{self.checks} checks; "
            f"first: {first.check} [{first.witness}]"
        )
