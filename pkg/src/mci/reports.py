"""Uniform check reports.

Every validation/verification routine returns a Report: an ordered list of
named entries with one of four statuses.  "not-checked" marks an exhaustive
check that exceeded the enumeration cap and is never silently treated as a
pass; "holds-by-construction" marks a condition forced by the representation
(e.g. bilinearity of a structure-constant tensor).
"""

from __future__ import annotations

import os
from dataclasses import dataclass, field

PASS = "pass"
FAIL = "fail"
NOT_CHECKED = "not-checked"
BY_CONSTRUCTION = "holds-by-construction"

DEFAULT_ENUM_CAP = 2**24


def enum_cap() -> int:
    raw = os.environ.get("MCI_ENUM_CAP")
    if raw:
        try:
            return int(raw)
        except ValueError:
            pass
    return DEFAULT_ENUM_CAP


@dataclass
class Entry:
    name: str
    status: str
    witness: object = None

    def to_json(self):
        out = {"name": self.name, "status": self.status}
        if self.witness is not None:
            out["witness"] = self.witness
        return out


@dataclass
class Report:
    command: str
    entries: list[Entry] = field(default_factory=list)
    elapsed_ms: float | None = None

    def add(self, name: str, status: str, witness=None) -> Entry:
        e = Entry(name, status, witness)
        self.entries.append(e)
        return e

    def extend(self, other: "Report", prefix: str = ""):
        for e in other.entries:
            self.entries.append(Entry(prefix + e.name, e.status, e.witness))

    @property
    def failed(self) -> bool:
        return any(e.status == FAIL for e in self.entries)

    @property
    def complete(self) -> bool:
        return all(e.status != NOT_CHECKED for e in self.entries)

    @property
    def verdict(self) -> str:
        if self.failed:
            return FAIL
        if not self.complete:
            return NOT_CHECKED
        return PASS

    @property
    def ok(self) -> bool:
        return self.verdict == PASS

    def failures(self) -> list[Entry]:
        return [e for e in self.entries if e.status == FAIL]

    def first_failure(self) -> Entry | None:
        fs = self.failures()
        return fs[0] if fs else None

    def to_json(self, with_timing: bool = True):
        out = {
            "command": self.command,
            "verdict": self.verdict,
            "checks": [e.to_json() for e in self.entries],
            "failures": [e.to_json() for e in self.failures()],
        }
        if with_timing and self.elapsed_ms is not None:
            out["elapsed_ms"] = self.elapsed_ms
        return out

    def render(self) -> str:
        lines = [f"{self.command}: {self.verdict}"]
        for e in self.entries:
            line = f"  [{e.status:>22}] {e.name}"
            if e.witness is not None and e.status == FAIL:
                line += f"  witness={e.witness}"
            lines.append(line)
        return "\n".join(lines)
