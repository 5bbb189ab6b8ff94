import io
from pathlib import Path

from rich.console import Console

from qschur.config import build_default_config
from qschur.models import FAIL, IdentityResult, ReportBundle, SuiteConfig, VerificationReport
from qschur.report import render_html, write_html
from qschur.runner import describe_config, expand_suite_names, run_suites


def _bundle() -> ReportBundle:
    failing = VerificationReport(
        suite="hecke",
        config=SuiteConfig(n=2, r=2),
        results=[
            IdentityResult(
                id="quadratic-T1",
                anchor="(T_k + 1)(T_k - v^2) = 0",
                status=FAIL,
                trials=4,
                counterexample={"input": {"r": 2, "terms": []}, "lhs": "<b>", "rhs": "0", "shrunk_from": 3},
            ),
            IdentityResult(id="affine-node", anchor="observed", status=FAIL, asserted=False, note="not asserted"),
        ],
    )
    schur = VerificationReport(suite="schur", config=SuiteConfig(n=2, N=3, r=2, lprime=3), label="Morita range")
    return ReportBundle(reports=[failing, schur])


def test_html_lists_reports_and_escapes_payloads() -> None:
    html = render_html(_bundle())
    assert "hecke" in html
    assert "schur" in html
    assert "Morita range" in html
    assert "quadratic-T1" in html
    assert "<b>" not in html
    assert "fail" in html


def test_write_html_creates_parent_directories(tmp_path: Path) -> None:
    path = write_html(_bundle(), tmp_path / "out" / "report.html")
    assert path.exists()
    assert path.read_text(encoding="utf-8").lstrip().lower().startswith("<!doctype html>")


def test_describe_config_and_suite_names() -> None:
    assert describe_config(SuiteConfig(n=2, r=2)) == "n=2 r=2 generic"
    assert describe_config(SuiteConfig(n=2, N=3, r=2, lprime=3)) == "n=2 N=3 r=2 eps(l'=3)"
    assert expand_suite_names("qla") == ["qla"]
    assert expand_suite_names("all")[-1] == "selftest"


def test_run_suites_appends_log_lines(tmp_path: Path) -> None:
    log_path = tmp_path / "logs" / "run.log"
    console = Console(file=io.StringIO())
    result = run_suites(
        ["qcomb"],
        build_default_config(),
        "quick",
        {"lprimes": [4]},
        console,
        log_path=log_path,
        command_text="qschur verify qcomb",
    )
    assert result.status == "pass"
    assert [status.config for status in result.statuses] == ["n=1 r=1 eps(l'=4)"]
    lines = log_path.read_text(encoding="utf-8").splitlines()
    assert lines[0] == "$ qschur verify qcomb"
    assert lines[1].startswith("[qschur] qcomb n=1 r=1 eps(l'=4) status=pass failures=0 ")
