from __future__ import annotations

from dataclasses import dataclass, field


@dataclass(frozen=True)
class CheckResult:
    check: str
    residual: float
    passed: bool

    def to_dict(self) -> dict:
        return {"check": self.check, "residual": self.residual, "pass": self.passed}


@dataclass(frozen=True)
class AxiomReport:
    """Per-check maximum residuals; ``overall`` is the conjunction of passes."""

    entries: tuple[CheckResult, ...] = field(default_factory=tuple)

    @property
    def overall(self) -> bool:
        return all(e.passed for e in self.entries)

    def __getitem__(self, name: str) -> CheckResult:
        for e in self.entries:
            if e.check == name:
                return e
        raise KeyError(name)

    def __contains__(self, name: str) -> bool:
        return any(e.check == name for e in self.entries)

    def names(self) -> list[str]:
        return [e.check for e in self.entries]

    def failing(self) -> list[str]:
        return [e.check for e in self.entries if not e.passed]

    def max_residual(self) -> float:
        return max((e.residual for e in self.entries), default=0.0)

    def merged(self, other: "AxiomReport", prefix: str = "") -> "AxiomReport":
        extra = tuple(CheckResult(prefix + e.check, e.residual, e.passed) for e in other.entries)
        return AxiomReport(self.entries + extra)

    def to_dict(self) -> dict:
        return {"entries": [e.to_dict() for e in self.entries], "overall": self.overall}

    def to_text(self) -> str:
        width = max((len(e.check) for e in self.entries), default=0)
        lines = [
            f"{'PASS' if e.passed else 'FAIL'}  {e.check:<{width}}  {e.residual:.3e}" for e in self.entries
        ]
        lines.append(f"overall: {'PASS' if self.overall else 'FAIL'}")
        return "\n".join(lines)


class ReportBuilder:
    """Accumulates residual checks against a threshold."""

    def __init__(self):
        self._entries: list[CheckResult] = []

    def add(self, name: str, residual: float, threshold: float) -> float:
        residual = float(abs(residual))
        self._entries.append(CheckResult(name, residual, bool(residual <= threshold)))
        return residual

    def add_result(self, name: str, residual: float, passed: bool) -> None:
        self._entries.append(CheckResult(name, float(residual), bool(passed)))

    def build(self) -> AxiomReport:
        return AxiomReport(tuple(self._entries))
