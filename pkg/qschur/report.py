"""HTML report generation for verification bundles."""

from __future__ import annotations

import json
from pathlib import Path

from jinja2 import Environment, FileSystemLoader, select_autoescape

from qschur.models import ReportBundle


def _templates_dir() -> Path:
    return Path(__file__).resolve().parent.parent / "templates"


def render_html(bundle: ReportBundle) -> str:
    env = Environment(
        loader=FileSystemLoader(str(_templates_dir())),
        autoescape=select_autoescape(["html", "xml", "j2"]),
    )
    env.filters["tojson_pretty"] = lambda value: json.dumps(value, indent=2, sort_keys=True)
    template = env.get_template("report.html.j2")

    reports = []
    for report in bundle.reports:
        payload = report.to_dict()
        payload["counts"] = report.counts()
        reports.append(payload)
    return template.render(
        status=bundle.status,
        reports=reports,
        conflicts=bundle.conflicts,
        totals={
            "reports": len(bundle.reports),
            "failing": sum(1 for report in bundle.reports if report.status != "pass"),
        },
    )


def write_html(bundle: ReportBundle, path: Path) -> Path:
    path.parent.mkdir(parents=True, exist_ok=True)
    path.write_text(render_html(bundle), encoding="utf-8")
    return path
