"""Named generator maps of a session, shared by the suites."""

from __future__ import annotations

from functools import partial

from qschur.suites.harness import VectorMap
from qschur.tensor.session import TensorSession

Named = list[tuple[str, VectorMap]]


def hecke_generators(session: TensorSession, inverses: bool = False) -> Named:
    out: Named = []
    for k in range(1, session.r):
        out.append((f"T{k}", partial(session.apply_t, k)))
        if inverses:
            out.append((f"T{k}^-1", partial(session.apply_t_inv, k)))
    for t in range(1, session.r + 1):
        out.append((f"X{t}", partial(session.apply_x, t, 1)))
        out.append((f"X{t}^-1", partial(session.apply_x, t, -1)))
    return out


def chevalley_generators(session: TensorSession, indices: list[int]) -> Named:
    out: Named = []
    for i in indices:
        out.append((f"E{i}", partial(session.apply_e, i)))
        out.append((f"F{i}", partial(session.apply_f, i)))
    return out


def diagonal_generators(session: TensorSession) -> Named:
    out: Named = []
    for i in range(1, session.n + 1):
        out.append((f"k{i}", partial(session.apply_k, i, 1)))
        out.append((f"k{i}^-1", partial(session.apply_k, i, -1)))
        for t in range(1, min(session.r, 2) + 1):
            out.append((f"[k{i};0 over {t}]", partial(session.apply_k_binom, i, t)))
    return out


def central_generators(session: TensorSession, levels: tuple[int, ...] = (1, 2)) -> Named:
    out: Named = []
    for s in levels:
        out.append((f"z{s}+", partial(session.apply_z, s, "+")))
        out.append((f"z{s}-", partial(session.apply_z, s, "-")))
    return out


def quantum_generators(session: TensorSession) -> Named:
    """E_i, F_i (i < n), k_i^{+-1}, [k_i;0 over t] and z_s^{+-}."""
    return (
        chevalley_generators(session, list(range(1, session.n)))
        + diagonal_generators(session)
        + central_generators(session)
    )
