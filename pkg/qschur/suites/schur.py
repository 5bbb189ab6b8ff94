"""Truncation substrate: e, the retraction rho and transport of operators."""

from __future__ import annotations

from functools import partial

from qschur.arith.ring import ScalarRing
from qschur.errors import PreconditionError
from qschur.models import SuiteConfig, VerificationReport
from qschur.schur_functor import (
    TruncationPair,
    idempotent_e,
    in_image_of_e,
    retract,
    section,
    transport_endomorphism,
)
from qschur.suites.generators import hecke_generators
from qschur.suites.harness import check_identity, identity_map, sampled_inputs, then
from qschur.tensor.operators import Compose, Egen, Fgen, Identity, Kgen, WeightProj
from qschur.tensor.sampling import basis_count, window_basis
from qschur.tensor.vector import TensorVector, compositions

RHO_ANCHOR = "e Omega_N^r identified with Omega_n^r, hence e S(N, r) e = S(n, r)"
MULT_ANCHOR = "transport(op1 op2) = transport(op1) transport(op2)"


def _image_inputs(pair: TruncationPair, large, small, cfg: SuiteConfig) -> list[TensorVector]:
    """Image-of-e basis tuples in the N-window, then sections of seeded n-vectors."""
    inputs: list[TensorVector] = []
    window = cfg.exhaustive_window
    if basis_count(pair.r, window) <= cfg.exhaustive_limit:
        for idx in window_basis(pair.r, window):
            if in_image_of_e(pair, idx):
                inputs.append(large.basis(idx))
    small_cfg = SuiteConfig(
        n=pair.n,
        r=pair.r,
        lprime=cfg.lprime,
        trials=cfg.trials,
        seed=cfg.seed,
        support_bound=cfg.support_bound,
        coeff_bound=cfg.coeff_bound,
    )
    inputs.extend(section(pair, vec) for vec in sampled_inputs(small, small_cfg))
    return inputs


def verify_schur_functor(cfg: SuiteConfig) -> VerificationReport:
    if cfg.N is None:
        raise PreconditionError("The schur suite needs N")
    pair = TruncationPair(cfg.n, cfg.N, cfg.r)
    ring = ScalarRing(cfg.lprime)
    large = pair.large_session(ring)
    small = pair.small_session(ring)
    report = VerificationReport(suite="schur", config=cfg, label=pair.range_label)
    results = report.results

    image = _image_inputs(pair, large, small, cfg)
    ambient = sampled_inputs(large, cfg)
    small_inputs = [retract(pair, vec) for vec in image]
    e = partial(idempotent_e, pair)
    rho = partial(retract, pair)
    sigma = partial(section, pair)

    results.append(
        check_identity("rho-section", "section(rho(x)) = x on e Omega_N^r", then(rho, sigma), identity_map, image)
    )
    results.append(
        check_identity(
            "section-rho", "rho(section(y)) = y on Omega_n^r", then(sigma, rho), identity_map, small_inputs
        )
    )
    results.append(check_identity("e-idempotent", "e e = e", then(e, e), e, ambient))

    small_hecke = dict(hecke_generators(small, inverses=True))
    for name, h in hecke_generators(large, inverses=True):
        results.append(
            check_identity(f"e-commutes-{name}", "e commutes with the Hecke action", then(h, e), then(e, h), ambient)
        )
        results.append(
            check_identity(
                f"rho-intertwines-{name}",
                "rho(x h) = rho(x) h",
                then(h, rho),
                then(rho, small_hecke[name]),
                image,
            )
        )

    results.append(
        check_identity(
            "transport-identity",
            RHO_ANCHOR,
            transport_endomorphism(Identity(), pair, ring),
            identity_map,
            small_inputs,
        )
    )
    for mu in compositions(pair.n, pair.r):
        padded = mu.padded(pair.N)
        label = ",".join(str(p) for p in mu.parts)
        results.append(
            check_identity(
                f"transport-proj-({label})",
                RHO_ANCHOR,
                transport_endomorphism(WeightProj(padded), pair, ring),
                partial(small.project_weight, mu),
                small_inputs,
            )
        )
        results.append(
            check_identity(
                f"transport-multiplicative-({label})",
                MULT_ANCHOR,
                transport_endomorphism(Compose((WeightProj(padded), Kgen(1))), pair, ring),
                then(
                    transport_endomorphism(Kgen(1), pair, ring),
                    transport_endomorphism(WeightProj(padded), pair, ring),
                ),
                small_inputs,
            )
        )
    for i in range(1, pair.n + 1):
        results.append(
            check_identity(
                f"transport-k{i}",
                RHO_ANCHOR,
                transport_endomorphism(Kgen(i), pair, ring),
                partial(small.apply_k, i, 1),
                small_inputs,
            )
        )
    for i in range(1, pair.n):
        for name, op, target in (("E", Egen(i), small.apply_e), ("F", Fgen(i), small.apply_f)):
            results.append(
                check_identity(
                    f"transport-{name}{i}",
                    RHO_ANCHOR,
                    transport_endomorphism(op, pair, ring),
                    partial(target, i),
                    small_inputs,
                    asserted=False,
                    note="expected to match; recorded, not asserted",
                )
            )

    # E_i and F_i with i < n keep every residue in 1..n, so their words stay inside e.
    for i in range(1, pair.n):
        gens = (("E", Egen(i)), ("F", Fgen(i)))
        for mu in compositions(pair.n, pair.r):
            proj = WeightProj(mu.padded(pair.N))
            label = ",".join(str(p) for p in mu.parts)
            for name, gen in gens:
                results.append(
                    check_identity(
                        f"transport-multiplicative-{name}{i}-({label})",
                        MULT_ANCHOR,
                        transport_endomorphism(Compose((gen, proj)), pair, ring),
                        then(transport_endomorphism(proj, pair, ring), transport_endomorphism(gen, pair, ring)),
                        small_inputs,
                    )
                )
        for (outer, first), (inner, second) in ((gens[0], gens[1]), (gens[1], gens[0])):
            results.append(
                check_identity(
                    f"transport-multiplicative-{outer}{i}{inner}{i}",
                    MULT_ANCHOR,
                    transport_endomorphism(Compose((first, second)), pair, ring),
                    then(transport_endomorphism(second, pair, ring), transport_endomorphism(first, pair, ring)),
                    small_inputs,
                )
            )
    return report
