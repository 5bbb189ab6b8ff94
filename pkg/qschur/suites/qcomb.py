"""Gaussian binomial identities, generic and at a root of unity."""

from __future__ import annotations

from collections import defaultdict
from typing import Iterator

from qschur.arith.cyclotomic import CyclotomicNumber, epsilon_power, l_of
from qschur.models import SuiteConfig, VerificationReport
from qschur.qcomb import (
    block_product,
    cor_ml_value,
    gauss_expand,
    lemma_mt_rhs,
    ml_even_explicit,
    qbinom,
    qbinom_at_eps,
    qbinom_reflection_holds,
)
from qschur.suites.harness import check_cases, skipped


def _integral_cases() -> Iterator[tuple[dict, bool, bool]]:
    for c in range(-20, 21):
        for t in range(0, 11):
            yield {"c": c, "t": t}, qbinom(c, t).is_integral(), True


def _formula_x_cases(m_max: int) -> Iterator[tuple[dict, object, object]]:
    for m in range(0, m_max + 1):
        expanded = gauss_expand(m)
        for t in range(0, m + 1):
            yield {"m": m, "t": t}, expanded[t], qbinom(m, t).shift(t * (m - 1))


def _pascal_cases() -> Iterator[tuple[dict, object, object]]:
    for c in range(1, 21):
        for t in range(1, c + 1):
            rhs = qbinom(c - 1, t - 1).shift(c - t) + qbinom(c - 1, t).shift(-t)
            yield {"c": c, "t": t}, qbinom(c, t), rhs


def _reflection_cases() -> Iterator[tuple[dict, bool, bool]]:
    for m in range(-20, 21):
        for t in range(0, 9):
            yield {"m": m, "t": t}, qbinom_reflection_holds(m, t), True


def _generic_results(cfg: SuiteConfig) -> list:
    return [
        check_cases("integral-coefficients", "[c over t]_v lies in Z[v, v^-1]", _integral_cases()),
        check_cases(
            "formula-x",
            "prod_{j<m} (1 + v^{2j} X) = sum_t [m over t]_v v^{t(m-1)} X^t",
            _formula_x_cases(cfg.formula_x_max),
        ),
        check_cases(
            "pascal",
            "[c over t] = v^{c-t} [c-1 over t-1] + v^-t [c-1 over t]",
            _pascal_cases(),
        ),
        check_cases("reflection", "[m over t] = (-1)^t [-m+t-1 over t]", _reflection_cases()),
    ]


def _primitivity_cases(lprime: int) -> Iterator[tuple[dict, object, object]]:
    one = CyclotomicNumber.one(lprime)
    yield {"k": lprime}, epsilon_power(lprime, lprime), one
    for k in range(1, lprime):
        yield {"k": k}, epsilon_power(lprime, k) == one, False
    if lprime % 2 == 0:
        yield {"k": lprime // 2}, epsilon_power(lprime, lprime // 2), -one


def _lemma_cases(lprime: int, m_max: int) -> Iterator[tuple[dict, object, object]]:
    for m in range(0, m_max + 1):
        for t in range(0, m + 1):
            yield {"m": m, "t": t, "lprime": lprime}, qbinom_at_eps(m, t, lprime), lemma_mt_rhs(m, t, lprime)


def _ml_cases(lprime: int, bound: int) -> Iterator[tuple[dict, object, object]]:
    l = l_of(lprime)
    for m in range(-bound, bound + 1):
        yield {"m": m, "lprime": lprime}, qbinom_at_eps(m, l, lprime), cor_ml_value(m, lprime)


def _ml_even_cases(lprime: int, bound: int) -> Iterator[tuple[dict, object, object]]:
    l = l_of(lprime)
    for m in range(-bound, bound + 1):
        yield {"m": m, "lprime": lprime}, qbinom_at_eps(m, l, lprime), ml_even_explicit(m, lprime)


def _injectivity_cases(lprime: int, bound: int) -> Iterator[tuple[dict, object, object]]:
    """Group m by (eps^m, [m over l]_eps); every group must be a single m."""
    l = l_of(lprime)
    groups: dict[tuple[CyclotomicNumber, CyclotomicNumber], list[int]] = defaultdict(list)
    for m in range(-bound, bound + 1):
        groups[(epsilon_power(lprime, m), qbinom_at_eps(m, l, lprime))].append(m)
    for members in groups.values():
        yield {"lprime": lprime, "m": members[0], "collisions": members[1:]}, len(members), 1


def _block_cases(lprime: int) -> Iterator[tuple[dict, object, object]]:
    l = l_of(lprime)
    zero = CyclotomicNumber.zero(lprime)
    expected = [CyclotomicNumber.one(lprime)] + [zero] * (l - 1) + [epsilon_power(lprime, l * (l - 1))]
    for power, (got, want) in enumerate(zip(block_product(lprime), expected)):
        yield {"lprime": lprime, "power": power}, got, want


def verify_qcomb_lemmas(cfg: SuiteConfig) -> VerificationReport:
    """Generic configs check the v-identities; configs with lprime check the eps-identities."""
    report = VerificationReport(suite="qcomb", config=cfg)
    if cfg.lprime is None:
        report.results.extend(_generic_results(cfg))
        return report

    lprime = cfg.lprime
    results = report.results
    results.append(
        check_cases(
            "primitivity",
            "eps^{l'} = 1, eps^k != 1 for 0 < k < l', eps^l = -1 for even l'",
            _primitivity_cases(lprime),
        )
    )
    results.append(
        check_cases(
            "lemma-m-t",
            "[m over t]_eps = eps^{l(t1 l - t1 m0 - t1 l m1 - t0 m1)} [m0 over t0]_eps C(m1, t1)",
            _lemma_cases(lprime, cfg.lemma_m_max),
        )
    )
    results.append(
        check_cases(
            "cor-m-l",
            "[m over l]_eps = m1 (l' odd), (-1)^{l+m} m1 (l' even)",
            _ml_cases(lprime, cfg.ml_bound),
        )
    )
    if lprime % 2 == 0:
        results.append(
            check_cases(
                "ml-even-explicit",
                "[a + s l' over l]_eps = (-1)^{l+m} 2s (a < l), (-1)^{l+m} (2s + 1) (a >= l)",
                _ml_even_cases(lprime, cfg.ml_bound),
            )
        )
    else:
        results.append(skipped("ml-even-explicit", "explicit [m over l]_eps for even l'", f"l' = {lprime} is odd"))
    results.append(
        check_cases(
            "injectivity",
            "eps^m = eps^m' and [m over l]_eps = [m' over l]_eps imply m = m'",
            _injectivity_cases(lprime, cfg.injectivity_bound),
        )
    )
    results.append(
        check_cases("block-product", "prod_{j<l} (1 + eps^{2j} X) = 1 + eps^{l(l-1)} X^l", _block_cases(lprime))
    )
    return report
