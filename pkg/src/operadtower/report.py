"""Structured results of exhaustive law checks."""

from __future__ import annotations

import json
from collections import Counter
from dataclasses import dataclass, field
from typing import Any, Callable, Optional

FORMAT_VERSION = 1


class InstanceLimitExceeded(RuntimeError):
    """Raised when a suite would test more instances than its ceiling allows."""


@dataclass(frozen=True)
class InstanceResult:
    law: str
    operands: tuple[str, ...]
    expected: str
    actual: str
    passed: bool

    def to_dict(self) -> dict:
        return {
            "law": self.law,
            "operands": list(self.operands),
            "expected": self.expected,
            "actual": self.actual,
            "pass": self.passed,
        }


@dataclass
class Report:
    """Tally of law instances; keeps every failure, and passes too if ``keep_passes``.

    Suites run to hundreds of thousands of instances, so passing instances are
    only materialized on request.
    """

    suite: str
    params: dict = field(default_factory=dict)
    keep_passes: bool = False
    limit: Optional[int] = None
    results: list[InstanceResult] = field(default_factory=list)
    passed_by_law: Counter = field(default_factory=Counter)
    failed_by_law: Counter = field(default_factory=Counter)
    _seen: int = field(default=0, repr=False)

    @property
    def total(self) -> int:
        return self.passed + self.failed

    @property
    def passed(self) -> int:
        return sum(self.passed_by_law.values())

    @property
    def failed(self) -> int:
        return sum(self.failed_by_law.values())

    @property
    def ok(self) -> bool:
        return self.failed == 0

    @property
    def failures(self) -> list[InstanceResult]:
        return [r for r in self.results if not r.passed]

    def _bump(self, n: int = 1):
        self._seen += n
        if self.limit is not None and self._seen > self.limit:
            raise InstanceLimitExceeded(
                f"suite {self.suite!r} exceeds the ceiling of {self.limit} instances")

    def check(self, law: str, operands: tuple, expected: Callable[[], Any],
              actual: Callable[[], Any], fmt: Callable[[Any], str] = str) -> bool:
        """Evaluate one instance; exceptions in either route count as failures."""
        self._bump()
        try:
            exp = expected()
            act = actual()
            passed = exp == act
        except Exception as exc:  # noqa: BLE001 - a broken law is data
            exp, act, passed = None, exc, False
        if passed and not self.keep_passes:
            self.passed_by_law[law] += 1
            return True
        self.record(law, operands, exp, act, passed, fmt, counted=True)
        return passed

    def record(self, law: str, operands: tuple, expected, actual, passed: bool,
               fmt: Callable[[Any], str] = str, counted: bool = False):
        """Store an instance whose outcome was decided by the caller."""
        if not counted:
            self._bump()
        if passed:
            self.passed_by_law[law] += 1
        else:
            self.failed_by_law[law] += 1
        if self.keep_passes or not passed:
            self.results.append(InstanceResult(
                law,
                tuple(_show(o, fmt) for o in operands),
                _show(expected, fmt),
                _show(actual, fmt),
                passed,
            ))

    def bulk_pass(self, law: str, count: int):
        """Count ``count`` passing instances without materializing them."""
        self._bump(count)
        self.passed_by_law[law] += count

    def merge(self, other: Report) -> Report:
        self._seen += other._seen
        self.results.extend(other.results)
        self.passed_by_law.update(other.passed_by_law)
        self.failed_by_law.update(other.failed_by_law)
        return self

    def summary(self) -> dict:
        laws = sorted(set(self.passed_by_law) | set(self.failed_by_law))
        return {
            "total": self.total,
            "passed": self.passed,
            "failed": self.failed,
            "laws": {law: {"passed": self.passed_by_law[law], "failed": self.failed_by_law[law]}
                     for law in laws},
        }

    def to_dict(self) -> dict:
        return {
            "format_version": FORMAT_VERSION,
            "suite": self.suite,
            "params": self.params,
            "summary": self.summary(),
            "results": [r.to_dict() for r in self.results],
        }

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), indent=2, sort_keys=True)

    def to_text(self, max_failures: int = 10) -> str:
        lines = [f"suite {self.suite}  " + " ".join(f"{k}={v}" for k, v in sorted(self.params.items()))]
        s = self.summary()
        width = max([len(law) for law in s["laws"]] + [4])
        lines.append(f"  {'law':<{width}}  {'pass':>8}  {'fail':>6}")
        for law, c in s["laws"].items():
            lines.append(f"  {law:<{width}}  {c['passed']:>8}  {c['failed']:>6}")
        lines.append(f"  {'all':<{width}}  {s['passed']:>8}  {s['failed']:>6}")
        for r in self.failures[:max_failures]:
            lines.append(f"  FAIL {r.law}: {', '.join(r.operands)}")
            lines.append(f"       expected {r.expected}")
            lines.append(f"       actual   {r.actual}")
        return "\n".join(lines)


def _show(value, fmt) -> str:
    if value is None:
        return "-"
    if isinstance(value, Exception):
        return f"error: {type(value).__name__}: {value}"
    if isinstance(value, (list, tuple)):
        return "(" + ", ".join(_show(v, fmt) for v in value) + ")"
    return fmt(value)
