"""Verification report: a flat, ID-sorted list of check records."""

from __future__ import annotations

import json
import os
import time
from dataclasses import asdict, dataclass, field
from typing import Callable

from .exact import DEFAULT_BOUND
from .weierstrass import DEFAULT_PRECISION

DEFAULT_P_MAX = 100
CONFIG_ENV = "XNS11_CONFIG"

PASS, FAIL, CITED, SKIPPED = "pass", "fail", "cited", "skipped"


@dataclass(frozen=True)
class Config:
    precision: int = DEFAULT_PRECISION
    bound: int = DEFAULT_BOUND
    p_max: int = DEFAULT_P_MAX

    @classmethod
    def load(cls, path: str | None = None, **overrides) -> Config:
        """Defaults, then the JSON file at ``path`` (or ``$XNS11_CONFIG``), then overrides."""
        values = asdict(cls())
        path = path or os.environ.get(CONFIG_ENV)
        if path:
            with open(path) as fh:
                data = json.load(fh)
            unknown = set(data) - set(values)
            if unknown:
                raise ValueError(f"unknown config keys: {sorted(unknown)}")
            values.update(data)
        values.update({k: v for k, v in overrides.items() if v is not None})
        for k, v in values.items():
            if not isinstance(v, int) or isinstance(v, bool) or v < 2:
                raise ValueError(f"config value {k} must be an integer >= 2, got {v!r}")
        return cls(**values)


@dataclass
class CheckRecord:
    check_id: str
    location: str
    status: str
    witness: str
    wall_time: float = 0.0

    def to_json(self, with_time: bool = True) -> dict:
        d = asdict(self)
        if not with_time:
            d.pop("wall_time")
        return d


@dataclass
class VerificationReport:
    records: list[CheckRecord] = field(default_factory=list)

    def add(self, record: CheckRecord) -> None:
        if any(r.check_id == record.check_id for r in self.records):
            raise ValueError(f"duplicate check id {record.check_id}")
        self.records.append(record)
        self.records.sort(key=lambda r: r.check_id)

    @property
    def passed(self) -> bool:
        return all(r.status in (PASS, CITED, SKIPPED) for r in self.records)

    def failures(self) -> list[CheckRecord]:
        return [r for r in self.records if r.status == FAIL]

    def to_json(self, with_time: bool = True) -> dict:
        return {
            "status": PASS if self.passed else FAIL,
            "checks": [r.to_json(with_time) for r in self.records],
        }

    def dumps(self, with_time: bool = True) -> str:
        return json.dumps(self.to_json(with_time), indent=2, sort_keys=True)

    def render_text(self, with_time: bool = True) -> str:
        lines = []
        for r in self.records:
            t = f" ({r.wall_time:.2f}s)" if with_time else ""
            lines.append(f"[{r.status:7}] {r.check_id}{t}: {r.witness}")
        lines.append(f"overall: {PASS if self.passed else FAIL}")
        return "\n".join(lines)


def run_check(check_id: str, location: str, fn: Callable[[], tuple[bool, str]]) -> CheckRecord:
    """Run ``fn`` (returning ``(ok, witness)``); exceptions become failures."""
    start = time.perf_counter()
    try:
        ok, witness = fn()
        status = PASS if ok else FAIL
    except Exception as exc:  # a check must never crash the report
        status, witness = FAIL, f"{type(exc).__name__}: {exc}"
    return CheckRecord(check_id, location, status, witness, time.perf_counter() - start)


def cited(check_id: str, location: str, witness: str) -> CheckRecord:
    return CheckRecord(check_id, location, CITED, witness)


def skipped(check_id: str, location: str, reason: str) -> CheckRecord:
    return CheckRecord(check_id, location, SKIPPED, reason)
