"""Verification suites keyed by their CLI names."""

from __future__ import annotations

from typing import Callable

from qschur.models import SuiteConfig, VerificationReport
from qschur.suites.bimodule import verify_bimodule_commutation
from qschur.suites.hecke import verify_hecke_presentation
from qschur.suites.idempotents import verify_weight_idempotents
from qschur.suites.qcomb import verify_qcomb_lemmas
from qschur.suites.qla import verify_level_zero_qla
from qschur.suites.schur import verify_schur_functor
from qschur.suites.selftest import verify_selftest
from qschur.suites.specialization import verify_specialization_naturality

SuiteFn = Callable[[SuiteConfig], VerificationReport]

SUITES: dict[str, SuiteFn] = {
    "hecke": verify_hecke_presentation,
    "bimodule": verify_bimodule_commutation,
    "idempotents": verify_weight_idempotents,
    "qla": verify_level_zero_qla,
    "qcomb": verify_qcomb_lemmas,
    "schur": verify_schur_functor,
    "specialization": verify_specialization_naturality,
    "selftest": verify_selftest,
}

SUITE_ORDER = list(SUITES)

__all__ = [
    "SUITES",
    "SUITE_ORDER",
    "verify_bimodule_commutation",
    "verify_hecke_presentation",
    "verify_level_zero_qla",
    "verify_qcomb_lemmas",
    "verify_schur_functor",
    "verify_selftest",
    "verify_specialization_naturality",
    "verify_weight_idempotents",
]
