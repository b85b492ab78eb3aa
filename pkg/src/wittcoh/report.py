"""Check results shared by the theorem verifiers and the CLI."""

from __future__ import annotations

from dataclasses import dataclass, field


@dataclass
class CheckResult:
    name: str
    passed: bool = True
    checked: int = 0
    failures: list[str] = field(default_factory=list)
    notes: list[str] = field(default_factory=list)

    def count(self, k: int = 1) -> None:
        self.checked += k

    def fail(self, message: str) -> None:
        self.passed = False
        self.failures.append(message)

    def note(self, message: str) -> None:
        self.notes.append(message)

    def absorb(self, other: "CheckResult") -> None:
        self.passed = self.passed and other.passed
        self.checked += other.checked
        self.failures.extend(other.failures)
        self.notes.extend(other.notes)

    def summary(self) -> str:
        status = "PASS" if self.passed else "FAIL"
        return f"{status}  {self.name} ({self.checked} checks)"
