"""Harness sensitivity: a perturbed Hecke table must be caught."""

from __future__ import annotations

from qschur.models import FAIL, PASS, IdentityResult, SuiteConfig, VerificationReport
from qschur.suites.bimodule import verify_bimodule_commutation
from qschur.suites.hecke import verify_hecke_presentation
from qschur.tensor.session import HeckeTerms, TensorSession


class PerturbedSession(TensorSession):
    """T_k with the (v^2 - 1) coefficient of the descending case replaced by v^2."""

    def _hecke_base(self, a: int, b: int) -> HeckeTerms:
        if a > b:
            return (((b, a), self.v(1)), ((a, b), self.v(2)))
        return super()._hecke_base(a, b)


def _detection(name: str, report: VerificationReport) -> IdentityResult:
    caught = [result.id for result in report.results if result.status == FAIL]
    return IdentityResult(
        id=f"{name}-detects-perturbation",
        anchor="a perturbed T_k coefficient makes at least one identity fail",
        status=PASS if caught else FAIL,
        trials=len(report.results),
        note=f"{len(caught)} failing identities" + (f", first {caught[0]}" if caught else ""),
    )


def verify_selftest(cfg: SuiteConfig) -> VerificationReport:
    report = VerificationReport(suite="selftest", config=cfg)
    report.results.append(_detection("hecke", verify_hecke_presentation(cfg, PerturbedSession)))
    report.results.append(_detection("bimodule", verify_bimodule_commutation(cfg, PerturbedSession)))
    return report
