"""Level-zero quantum loop algebra relations realized on the tensor space."""

from __future__ import annotations

from functools import partial

from qschur.models import SuiteConfig, VerificationReport
from qschur.suites.generators import central_generators, chevalley_generators, diagonal_generators
from qschur.suites.harness import (
    SessionFactory,
    build_session,
    check_identity,
    skipped,
    then,
    window_inputs,
    zero_map,
)
from qschur.tensor.session import TensorSession
from qschur.tensor.vector import TensorVector

SERRE_ANCHOR = "x_i^2 x_j - (v + v^-1) x_i x_j x_i + x_j x_i^2 = 0 for |i - j| = 1"


def verify_level_zero_qla(
    cfg: SuiteConfig,
    session_factory: SessionFactory = TensorSession,
) -> VerificationReport:
    session = build_session(cfg, session_factory, affine_node=False)
    inputs = window_inputs(session, cfg)
    report = VerificationReport(suite="qla", config=cfg)
    results = report.results
    n = session.n
    v = session.v
    indices = list(range(1, n))

    def E(i: int):
        return partial(session.apply_e, i)

    def F(i: int):
        return partial(session.apply_f, i)

    def K(i: int, e: int = 1):
        return partial(session.apply_k, i, e)

    for i in range(1, n + 1):
        for j in range(i + 1, n + 1):
            results.append(
                check_identity(f"kk-{i}-{j}", "k_i k_j = k_j k_i", then(K(j), K(i)), then(K(i), K(j)), inputs)
            )

    for i in range(1, n + 1):
        for j in indices:
            shift = int(i == j) - int(i == j + 1)
            results.append(
                check_identity(
                    f"kEk-{i}-{j}",
                    "k_i E_j k_i^-1 = v^{delta_ij - delta_i,j+1} E_j",
                    then(K(i, -1), E(j), K(i)),
                    lambda x, j=j, shift=shift: E(j)(x).scale(v(shift)),
                    inputs,
                )
            )
            results.append(
                check_identity(
                    f"kFk-{i}-{j}",
                    "k_i F_j k_i^-1 = v^{-(delta_ij - delta_i,j+1)} F_j",
                    then(K(i, -1), F(j), K(i)),
                    lambda x, j=j, shift=shift: F(j)(x).scale(v(-shift)),
                    inputs,
                )
            )

    if not indices:
        results.append(skipped("EF-commutator", "[E_i, F_j] = delta_ij (k~_i - k~_i^-1)/(v - v^-1)", "n = 1"))
    for i in indices:
        for j in indices:

            def commutator(x: TensorVector, i: int = i, j: int = j) -> TensorVector:
                return (then(F(j), E(i))(x) - then(E(i), F(j))(x)).scale(v(1) - v(-1))

            if i == j:

                def cartan(x: TensorVector, i: int = i) -> TensorVector:
                    return session.apply_k_tilde(i, 1, x) - session.apply_k_tilde(i, -1, x)

            else:
                cartan = zero_map
            results.append(
                check_identity(
                    f"EF-commutator-{i}-{j}",
                    "(v - v^-1)[E_i, F_j] = delta_ij (k~_i - k~_i^-1)",
                    commutator,
                    cartan,
                    inputs,
                )
            )

    far = [(i, j) for i in indices for j in indices if j > i + 1]
    if not far:
        results.append(skipped("far-commute", "x_i x_j = x_j x_i for |i - j| > 1", f"no such pair for n = {n}"))
    for i, j in far:
        for name, gen in (("E", E), ("F", F)):
            results.append(
                check_identity(
                    f"far-commute-{name}{i}-{name}{j}",
                    "x_i x_j = x_j x_i for |i - j| > 1",
                    then(gen(j), gen(i)),
                    then(gen(i), gen(j)),
                    inputs,
                )
            )

    adjacent = [(i, j) for i in indices for j in indices if abs(i - j) == 1]
    if not adjacent:
        results.append(skipped("serre", SERRE_ANCHOR, f"no adjacent pair for n = {n}"))
    for i, j in adjacent:
        for name, gen in (("E", E), ("F", F)):

            def serre(x: TensorVector, gi=gen(i), gj=gen(j)) -> TensorVector:
                first = then(gj, gi, gi)(x)
                middle = then(gi, gj, gi)(x).scale(v(1) + v(-1))
                last = then(gi, gi, gj)(x)
                return first - middle + last

            results.append(check_identity(f"serre-{name}{i}-{name}{j}", SERRE_ANCHOR, serre, zero_map, inputs))

    u_side = chevalley_generators(session, indices) + diagonal_generators(session)
    for z_name, z in central_generators(session):
        for g_name, g in u_side:
            results.append(
                check_identity(
                    f"central-{z_name}-{g_name}",
                    "z_s^{+-} is central",
                    then(g, z),
                    then(z, g),
                    inputs,
                )
            )
    return report
