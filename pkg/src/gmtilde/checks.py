"""Check records and reports shared by the verification routines and the CLI."""

from __future__ import annotations

import json
import time
from contextlib import contextmanager
from dataclasses import dataclass, field
from typing import Any, Dict, List, Optional

PASS, FAIL, SKIP = "pass", "fail", "skip"


@dataclass
class Check:
    name: str
    status: str
    witness: Optional[str] = None
    detail: Optional[str] = None
    seconds: float = 0.0

    @property
    def ok(self):
        return self.status != FAIL

    def as_dict(self):
        d = {"name": self.name, "status": self.status}
        if self.witness is not None:
            d["witness"] = self.witness
        if self.detail is not None:
            d["detail"] = self.detail
        return d


@dataclass
class Report:
    """A named collection of checks plus free-form result data."""

    title: str
    checks: List[Check] = field(default_factory=list)
    data: Dict[str, Any] = field(default_factory=dict)

    def add(self, name, ok, witness=None, detail=None, seconds=0.0, skip=False):
        status = SKIP if skip else (PASS if ok else FAIL)
        if witness is not None and not isinstance(witness, str):
            witness = str(witness)
        c = Check(name, status, witness, detail, seconds)
        self.checks.append(c)
        return c

    def extend(self, other: "Report", prefix=None):
        for c in other.checks:
            name = f"{prefix}.{c.name}" if prefix else c.name
            self.checks.append(Check(name, c.status, c.witness, c.detail, c.seconds))
        return self

    @contextmanager
    def timed(self, name):
        """Run a block and record a check; the block sets ``box['ok']`` etc."""
        box = {"ok": True, "witness": None, "detail": None}
        start = time.perf_counter()
        yield box
        self.add(name, box["ok"], box["witness"], box["detail"], time.perf_counter() - start)

    @property
    def ok(self):
        return all(c.ok for c in self.checks)

    def failures(self):
        return [c for c in self.checks if c.status == FAIL]

    def check(self, name) -> Check:
        for c in self.checks:
            if c.name == name:
                return c
        raise KeyError(name)

    def to_dict(self, command=None):
        checks = sorted(self.checks, key=lambda c: c.name)
        d = {"schema": 1}
        if command is not None:
            d["command"] = command
        d["title"] = self.title
        d["ok"] = self.ok
        d["checks"] = [c.as_dict() for c in checks]
        d["data"] = self.data
        d["timings"] = {c.name: round(c.seconds, 6) for c in checks}
        return d

    def to_json(self, command=None):
        return json.dumps(self.to_dict(command), indent=2, sort_keys=False, default=str)

    def render_text(self):
        lines = [self.title]
        for k, v in self.data.items():
            if isinstance(v, (list, tuple)):
                v = ", ".join(map(str, v)) if v else "(none)"
            elif isinstance(v, dict):
                v = ", ".join(f"{a}: {b}" for a, b in v.items()) if v else "(none)"
            lines.append(f"  {k}: {v}")
        for c in sorted(self.checks, key=lambda c: c.name):
            line = f"  [{c.status.upper()}] {c.name}"
            if c.detail:
                line += f" - {c.detail}"
            if c.witness:
                line += f" (witness: {c.witness})"
            lines.append(line)
        lines.append("result: " + ("ok" if self.ok else "FAILED"))
        return "\n".join(lines)
