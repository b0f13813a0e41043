"""Structured verification reports.

A report is a list of check records, each carrying the identity it
verifies, a digest of its inputs, the measured values, the tolerance, and
the verdict.  Wall-clock timings ride along in a separate section that is
excluded from the deterministic report body, so identical inputs and seed
produce byte-identical bodies.
"""

from __future__ import annotations

import hashlib
import json
from dataclasses import asdict, dataclass, field


@dataclass
class CheckRecord:
    name: str
    anchor: str  # the verified identity, in plain ASCII math
    inputs_digest: str
    measured: dict
    tolerance: float
    passed: bool


@dataclass
class VerificationReport:
    tool: dict
    state_spec: dict | None
    checks: list[CheckRecord]
    overall_pass: bool
    wall_clock_s: dict = field(default_factory=dict)


def digest_inputs(obj) -> str:
    """Short stable digest of a JSON-able input description."""
    payload = json.dumps(obj, sort_keys=True, default=str)
    return hashlib.sha256(payload.encode()).hexdigest()[:16]


def build_report(
    tool: dict,
    state_spec: dict | None,
    checks: list[CheckRecord],
    wall_clock_s: dict | None = None,
) -> VerificationReport:
    return VerificationReport(
        tool=tool,
        state_spec=state_spec,
        checks=checks,
        overall_pass=all(c.passed for c in checks),
        wall_clock_s=wall_clock_s or {},
    )


def report_to_dict(report: VerificationReport, include_timings: bool = True) -> dict:
    data = asdict(report)
    if not include_timings:
        data.pop("wall_clock_s")
    return data


def report_body_json(report: VerificationReport) -> str:
    """Deterministic serialization: everything except timings."""
    return json.dumps(report_to_dict(report, include_timings=False), sort_keys=True)


def report_to_json(report: VerificationReport) -> str:
    return json.dumps(report_to_dict(report), sort_keys=True, indent=2)


def report_from_dict(data: dict) -> VerificationReport:
    checks = [CheckRecord(**c) for c in data["checks"]]
    return VerificationReport(
        tool=data["tool"],
        state_spec=data["state_spec"],
        checks=checks,
        overall_pass=data["overall_pass"],
        wall_clock_s=data.get("wall_clock_s", {}),
    )


def report_from_json(text: str) -> VerificationReport:
    return report_from_dict(json.loads(text))
