"""Structured verification reports."""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from typing import Any


@dataclass
class Failure:
    tuple: tuple
    delta: Any  # anything with a to_dict() method, or plain JSON data

    def to_dict(self) -> dict:
        delta = self.delta.to_dict() if hasattr(self.delta, "to_dict") else self.delta
        return {"tuple": list(self.tuple), "delta": delta}


@dataclass
class Report:
    """Outcome of one verification suite.

    ``failures`` lists every checked tuple whose identity did not hold,
    together with the nonzero difference; an empty list means all passed.
    """

    suite: str
    params: dict
    checked: int = 0
    failures: list[Failure] = field(default_factory=list)
    info: dict = field(default_factory=dict)

    @property
    def ok(self) -> bool:
        return not self.failures

    def check(self, key: tuple, delta) -> bool:
        """Record one instance; ``delta`` is falsy exactly when it passes."""
        self.checked += 1
        if delta:
            self.failures.append(Failure(tuple(key), delta))
            return False
        return True

    def merge(self, other: "Report") -> None:
        self.checked += other.checked
        self.failures.extend(other.failures)

    def to_dict(self) -> dict:
        out = {
            "suite": self.suite,
            "params": self.params,
            "checked": self.checked,
            "failures": [f.to_dict() for f in self.failures],
        }
        if self.info:
            out["info"] = self.info
        return out

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), sort_keys=True)

    def summary(self) -> str:
        status = "PASS" if self.ok else "FAIL"
        params = " ".join(f"{k}={v}" for k, v in self.params.items())
        return f"{status} {self.suite} [{params}] checked={self.checked} failures={len(self.failures)}"
