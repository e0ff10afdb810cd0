"""Check reports: a pass flag backed by sorted, replayable witnesses."""

from __future__ import annotations

from dataclasses import dataclass, field
from itertools import product
from typing import Callable, Iterable


@dataclass(frozen=True, order=True)
class Violation:
    check: str
    indices: tuple[int, ...]
    residual: tuple = field(compare=False)


@dataclass
class Report:
    name: str
    violations: list[Violation] = field(default_factory=list)
    info: dict = field(default_factory=dict)

    def __post_init__(self):
        self.violations = sorted(self.violations)

    @property
    def passed(self) -> bool:
        return not self.violations

    def __bool__(self) -> bool:
        return self.passed

    def failed_checks(self) -> list[str]:
        return sorted({v.check for v in self.violations})

    def by_check(self, check: str) -> list[Violation]:
        return [v for v in self.violations if v.check == check]

    def merge(self, other: "Report") -> "Report":
        return Report(self.name, self.violations + other.violations, {**self.info, **other.info})


def scan(check: str, n: int, arity: int, residual: Callable[..., tuple],
         indices: Iterable[tuple[int, ...]] | None = None) -> list[Violation]:
    """Evaluate ``residual`` on basis index tuples, keeping the nonzero ones."""
    out = []
    for idx in (indices if indices is not None else product(range(n), repeat=arity)):
        res = residual(*idx)
        if any(x != 0 for x in res):
            out.append(Violation(check, tuple(idx), tuple(res)))
    return out
