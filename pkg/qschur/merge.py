"""Merging of verification reports from separate runs."""

from __future__ import annotations

import json
from itertools import combinations
from typing import Any

from qschur.models import ReportBundle, VerificationReport


def _canonical(payload: Any) -> str:
    return json.dumps(payload, sort_keys=True, separators=(",", ":"))


def report_key(report: VerificationReport) -> tuple[str, str]:
    return report.suite, _canonical(report.config.to_dict())


def _statuses(report: VerificationReport) -> dict[str, str]:
    return {result.id: result.status for result in report.results}


def _status_conflicts(left: VerificationReport, right: VerificationReport) -> list[dict[str, Any]]:
    before = _statuses(left)
    after = _statuses(right)
    out: list[dict[str, Any]] = []
    for identity in sorted(set(before) & set(after)):
        if before[identity] != after[identity]:
            out.append(
                {
                    "suite": left.suite,
                    "config": left.config.to_dict(),
                    "id": identity,
                    "statuses": sorted([before[identity], after[identity]]),
                }
            )
    return out


def merge_reports(bundles: list[ReportBundle]) -> ReportBundle:
    grouped: dict[tuple[str, str], dict[str, VerificationReport]] = {}
    conflicts: list[dict[str, Any]] = []
    for bundle in bundles:
        conflicts.extend(bundle.conflicts)
        for report in bundle.reports:
            variants = grouped.setdefault(report_key(report), {})
            variants.setdefault(_canonical(report.to_dict()), report)

    merged = ReportBundle()
    for key in sorted(grouped):
        variants = [grouped[key][text] for text in sorted(grouped[key])]
        merged.reports.extend(variants)
        for left, right in combinations(variants, 2):
            conflicts.extend(_status_conflicts(left, right))

    seen: set[str] = set()
    for item in conflicts:
        text = _canonical(item)
        if text not in seen:
            seen.add(text)
            merged.conflicts.append(item)
    merged.conflicts.sort(key=_canonical)
    return merged
