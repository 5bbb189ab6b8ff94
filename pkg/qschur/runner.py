"""Suite runner: expands configuration grids, runs suites and logs progress."""

from __future__ import annotations

import time
from dataclasses import dataclass, field
from pathlib import Path
from typing import Any, Optional

from rich.console import Console

from qschur.config import resolve_suite_configs
from qschur.models import PASS, ReportBundle, SuiteConfig, VerificationReport
from qschur.suites import SUITE_ORDER, SUITES


@dataclass
class SuiteStatus:
    suite: str
    config: str
    status: str
    failures: int
    duration_seconds: float


@dataclass
class RunResult:
    bundle: ReportBundle
    statuses: list[SuiteStatus] = field(default_factory=list)

    @property
    def status(self) -> str:
        return self.bundle.status


def describe_config(cfg: SuiteConfig) -> str:
    shape = f"n={cfg.n} r={cfg.r}" if cfg.N is None else f"n={cfg.n} N={cfg.N} r={cfg.r}"
    return f"{shape} {cfg.ring_label}"


def expand_suite_names(name: str) -> list[str]:
    if name == "all":
        return list(SUITE_ORDER)
    if name not in SUITES:
        available = ", ".join(SUITE_ORDER + ["all"])
        raise ValueError(f"Unknown suite '{name}'. Available: {available}")
    return [name]


def run_suites(
    suites: list[str],
    config: dict[str, Any],
    preset: str,
    overrides: Optional[dict[str, Any]],
    console: Console,
    log_path: Optional[Path] = None,
    command_text: str = "",
) -> RunResult:
    plan: list[tuple[str, SuiteConfig]] = []
    for suite in suites:
        for cfg in resolve_suite_configs(config, suite, preset, overrides):
            plan.append((suite, cfg))

    log_file = None
    if log_path is not None:
        log_path.parent.mkdir(parents=True, exist_ok=True)
        log_file = log_path.open("a", encoding="utf-8")
        if command_text:
            log_file.write(f"$ {command_text}\n")

    result = RunResult(bundle=ReportBundle())
    try:
        for suite, cfg in plan:
            label = describe_config(cfg)
            console.print(f"[bold blue]Suite:[/bold blue] {suite} ({label})")
            started = time.perf_counter()
            report: VerificationReport = SUITES[suite](cfg)
            duration = time.perf_counter() - started

            failures = sum(1 for item in report.results if item.blocking)
            colour = "green" if report.status == PASS else "red"
            console.print(f"[{colour}]Done[/{colour}] {suite} (status={report.status}, {duration:.2f}s)")
            result.bundle.reports.append(report)
            result.statuses.append(
                SuiteStatus(suite=suite, config=label, status=report.status, failures=failures, duration_seconds=duration)
            )
            if log_file is not None:
                log_file.write(
                    f"[qschur] {suite} {label} status={report.status} failures={failures} {duration:.2f}s\n"
                )
                log_file.flush()
    finally:
        if log_file is not None:
            log_file.close()
    return result
