"""Plain-text verification reports: one line per suite, then the failures."""

from __future__ import annotations

from dataclasses import dataclass, field


@dataclass
class SuiteReport:
    name: str
    checks: int = 0
    failures: list[str] = field(default_factory=list)
    notes: list[str] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return not self.failures

    def check(self, ok: bool, what: str) -> bool:
        self.checks += 1
        if not ok:
            self.failures.append(what)
        return ok

    def note(self, text: str) -> None:
        self.notes.append(text)

    def extend(self, other: "SuiteReport") -> None:
        self.checks += other.checks
        self.failures.extend(other.failures)
        self.notes.extend(other.notes)

    def render(self) -> str:
        lines = [f"suite={self.name} checks={self.checks} failures={len(self.failures)}"]
        lines += [f"  note: {n}" for n in self.notes]
        lines += [f"  FAIL: {f}" for f in self.failures]
        return "\n".join(lines)

    def __str__(self):
        return self.render()
