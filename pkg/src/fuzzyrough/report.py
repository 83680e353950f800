from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from typing import Any


@dataclass(frozen=True)
class Check:
    name: str
    ok: bool
    witness: Any = None
    note: str = ""


@dataclass
class ValidationReport:
    """Ordered collection of named checks; violations carry a witness."""

    checks: list[Check] = field(default_factory=list)

    def add(self, name: str, ok: bool, witness: Any = None, note: str = "") -> Check:
        check = Check(name, bool(ok), None if ok else witness, note)
        self.checks.append(check)
        return check

    def __getitem__(self, name: str) -> Check:
        for check in self.checks:
            if check.name == name:
                return check
        raise KeyError(name)

    def __contains__(self, name: str) -> bool:
        return any(c.name == name for c in self.checks)

    def holds(self, name: str) -> bool:
        return self[name].ok

    @property
    def ok(self) -> bool:
        return all(c.ok for c in self.checks)

    def failures(self) -> list[Check]:
        return [c for c in self.checks if not c.ok]

    def to_dict(self) -> dict:
        out = {}
        for c in self.checks:
            entry: dict[str, Any] = {"ok": c.ok}
            if c.witness is not None:
                entry["witness"] = _plain(c.witness)
            if c.note:
                entry["note"] = c.note
            out[c.name] = entry
        return out


def _plain(obj):
    if isinstance(obj, Fraction):
        return str(obj)
    if isinstance(obj, (tuple, list)):
        return [_plain(x) for x in obj]
    if isinstance(obj, dict):
        return {str(k): _plain(v) for k, v in obj.items()}
    return obj
