from qschur.merge import merge_reports, report_key
from qschur.models import FAIL, PASS, IdentityResult, ReportBundle, SuiteConfig, VerificationReport


def _report(suite: str, status: str = PASS, n: int = 2, lprime=None) -> VerificationReport:
    return VerificationReport(
        suite=suite,
        config=SuiteConfig(n=n, r=2, lprime=lprime),
        results=[
            IdentityResult(id="quadratic-T1", anchor="(T + 1)(T - v^2) = 0", status=status, trials=3),
            IdentityResult(id="inverse-T1", anchor="T^-1 T = 1", status=PASS, trials=3),
        ],
    )


def test_identical_reports_are_deduplicated() -> None:
    first = ReportBundle(reports=[_report("hecke"), _report("qla")])
    second = ReportBundle(reports=[_report("hecke")])
    merged = merge_reports([first, second])
    assert [report.suite for report in merged.reports] == ["hecke", "qla"]
    assert merged.conflicts == []
    assert merged.status == PASS


def test_reports_sort_by_suite_and_config() -> None:
    merged = merge_reports([ReportBundle(reports=[_report("qla", n=3), _report("hecke", lprime=3), _report("hecke")])])
    keys = [report_key(report) for report in merged.reports]
    assert keys == sorted(keys)
    assert merged.reports[-1].suite == "qla"


def test_status_disagreement_becomes_a_conflict() -> None:
    merged = merge_reports([ReportBundle(reports=[_report("hecke")]), ReportBundle(reports=[_report("hecke", FAIL)])])
    assert len(merged.reports) == 2
    assert merged.conflicts == [
        {
            "suite": "hecke",
            "config": SuiteConfig(n=2, r=2).to_dict(),
            "id": "quadratic-T1",
            "statuses": [FAIL, PASS],
        }
    ]
    assert merged.status == FAIL
    assert "conflicts" in merged.to_dict()


def test_carried_conflicts_survive_a_second_merge() -> None:
    once = merge_reports([ReportBundle(reports=[_report("hecke")]), ReportBundle(reports=[_report("hecke", FAIL)])])
    twice = merge_reports([ReportBundle.from_dict(once.to_dict()), ReportBundle(reports=[_report("hecke")])])
    assert twice.conflicts == once.conflicts
    assert len(twice.reports) == 2


def test_bare_report_payload_loads_as_bundle() -> None:
    bundle = ReportBundle.from_dict(_report("qcomb").to_dict())
    assert [report.suite for report in bundle.reports] == ["qcomb"]
    assert bundle.reports[0].results[0].id == "quadratic-T1"
