"""Verification reports: ordered lists of identity checks with pass/fail status."""
from __future__ import annotations

import json
from dataclasses import dataclass, field
from typing import Any


@dataclass
class Check:
    identity_id: str
    parameters: dict
    status: str
    counterexample_cell: Any = None

    @property
    def passed(self):
        return self.status == "pass"

    def to_json(self):
        out = {"identity_id": self.identity_id, "parameters": self.parameters, "status": self.status}
        if self.counterexample_cell is not None:
            out["counterexample_cell"] = self.counterexample_cell
        return out


@dataclass
class Report:
    checks: list = field(default_factory=list)

    def add(self, identity_id: str, parameters: dict, ok: bool, cell=None) -> bool:
        self.checks.append(Check(identity_id, dict(parameters), "pass" if ok else "fail", None if ok else cell))
        return ok

    def extend(self, other: "Report"):
        self.checks.extend(other.checks)
        return self

    @property
    def ok(self):
        return all(c.passed for c in self.checks)

    @property
    def failures(self):
        return [c for c in self.checks if not c.passed]

    def __iter__(self):
        return iter(self.checks)

    def __len__(self):
        return len(self.checks)

    def ids(self):
        return [c.identity_id for c in self.checks]

    def to_json(self):
        return [c.to_json() for c in self.checks]

    def dumps(self):
        return json.dumps(self.to_json(), indent=2, sort_keys=True)


class MutationError(ValueError):
    """Unknown mutation rule id."""


def check_mutation(mutation, allowed):
    if mutation is not None and mutation not in allowed:
        raise MutationError(f"unknown mutation {mutation!r}; choose from {sorted(allowed)}")
