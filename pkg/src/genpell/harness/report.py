"""Canonical JSON serialization of a verification report."""

from __future__ import annotations

import json
from typing import Any

from genpell.harness.model import STATUS_FOR_EXPECTED, VAR_ORDER
from genpell.harness.verify import VerificationReport

TOOL = "genpell"


def _record(spec, res) -> dict[str, Any]:
    rec: dict[str, Any] = {
        "id": res.id,
        "ref": spec.locator,
        "formula": spec.formula,
        "ring": spec.ring,
        "conjectured": spec.conjectured,
        "expected": STATUS_FOR_EXPECTED[spec.expected_status],
        "status": res.status,
        "trials": res.trials,
        "failures": res.failures,
        "counterexample": None,
    }
    if spec.corrects:
        rec["corrects"] = spec.corrects
    if spec.notes:
        rec["notes"] = spec.notes
    ce = res.counterexample
    if ce is not None:
        rec["counterexample"] = {
            "binding": {k: ce.binding[k] for k in VAR_ORDER if k in ce.binding},
            "lhs": ce.lhs,
            "rhs": ce.rhs,
        }
    return rec


def summary(report: VerificationReport) -> dict[str, int]:
    """Status counts over printed identities only; conjectured corrections are excluded."""
    counts = {"verified": 0, "fails_as_printed": 0, "quarantined": 0}
    for spec, res in zip(report.specs, report.results):
        if not spec.conjectured:
            counts[res.status] += 1
    counts["total"] = sum(counts.values())
    return counts


def to_document(report: VerificationReport) -> dict[str, Any]:
    return {
        "tool": TOOL,
        "version": report.version,
        "profile": report.profile.describe(),
        "summary": summary(report),
        "identities": [_record(s, r) for s, r in zip(report.specs, report.results)],
    }


def dumps(report: VerificationReport) -> str:
    """One canonical text form: fixed key order, two-space indent, LF endings, trailing newline."""
    return json.dumps(to_document(report), indent=2, ensure_ascii=False) + "\n"


def write(report: VerificationReport, path: str) -> None:
    with open(path, "w", encoding="utf-8", newline="\n") as fh:
        fh.write(dumps(report))


def table(report: VerificationReport) -> str:
    lines = [f"{'id':<8} {'status':<17} {'expected':<17} {'trials':>8}  counterexample"]
    for spec, res in zip(report.specs, report.results):
        ce = ""
        if res.counterexample is not None:
            b = " ".join(f"{k}={v}" for k, v in res.counterexample.binding.items())
            ce = f"{b}: {res.counterexample.lhs} != {res.counterexample.rhs}"
        lines.append(
            f"{res.id:<8} {res.status:<17} {STATUS_FOR_EXPECTED[spec.expected_status]:<17} {res.trials:>8}  {ce}"
        )
    s = summary(report)
    lines.append(
        f"printed identities: {s['total']} ({s['verified']} verified, "
        f"{s['fails_as_printed']} fail as printed, {s['quarantined']} quarantined)"
    )
    return "\n".join(lines) + "\n"
