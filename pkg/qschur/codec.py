"""JSON wire formats for scalars, tensor vectors and operator expressions."""

from __future__ import annotations

from fractions import Fraction
from typing import Any, Optional

from qschur.arith.cyclotomic import CyclotomicNumber
from qschur.arith.laurent import LaurentPoly
from qschur.arith.ring import Scalar, ScalarRing
from qschur.errors import CodecError, ScalarMismatchError
from qschur.tensor.operators import (
    Compose,
    Egen,
    Fgen,
    HeckeT,
    HeckeTinv,
    IdempotentE,
    Identity,
    KBinom,
    Kgen,
    LinComb,
    OperatorExpr,
    WeightProj,
    XShift,
    Zgen,
)
from qschur.tensor.vector import Composition, TensorVector


def encode_scalar(value: Scalar) -> Any:
    """LaurentPoly as sorted [exp, num, den] triples, CyclotomicNumber as {"lprime", "coords"}."""
    if isinstance(value, (LaurentPoly, CyclotomicNumber)):
        return value.to_json()
    raise CodecError(f"Cannot encode scalar {value!r}")


def decode_scalar(payload: Any, ring: Optional[ScalarRing] = None) -> Scalar:
    """Decode a scalar; bare ints and "num/den" strings are accepted as rationals.

    The {"laurent": ...} and {"cyclotomic": ...} wrappers are accepted as well.
    """
    ring = ring or ScalarRing.generic()
    try:
        if isinstance(payload, bool):
            raise CodecError(f"Not a scalar: {payload!r}")
        if isinstance(payload, int):
            return ring.from_int(payload)
        if isinstance(payload, str):
            return ring.from_int(Fraction(payload))
        if isinstance(payload, list):
            return ring.coerce(LaurentPoly.from_json(payload))
        if isinstance(payload, dict) and "coords" in payload:
            return ring.coerce(CyclotomicNumber.from_json(payload))
        if isinstance(payload, dict) and "laurent" in payload:
            return ring.coerce(LaurentPoly.from_json(payload["laurent"]))
        if isinstance(payload, dict) and "cyclotomic" in payload:
            return ring.coerce(CyclotomicNumber.from_json(payload["cyclotomic"]))
    except ScalarMismatchError:
        raise
    except (KeyError, TypeError, ValueError, ZeroDivisionError) as exc:
        if isinstance(exc, CodecError):
            raise
        raise CodecError(f"Malformed scalar {payload!r}: {exc}") from exc
    raise CodecError(f"Malformed scalar {payload!r}")


def encode_vector(vec: TensorVector) -> dict[str, Any]:
    return {
        "r": vec.r,
        "terms": [{"idx": list(idx), "coeff": encode_scalar(c)} for idx, c in vec.terms()],
    }


def decode_vector(payload: Any, ring: Optional[ScalarRing] = None) -> TensorVector:
    if not isinstance(payload, dict) or "r" not in payload or "terms" not in payload:
        raise CodecError("A vector needs 'r' and 'terms'")
    try:
        r = int(payload["r"])
        pairs = []
        for term in payload["terms"]:
            idx = tuple(int(j) for j in term["idx"])
            if len(idx) != r:
                raise CodecError(f"Index {list(idx)} does not have length {r}")
            pairs.append((idx, decode_scalar(term["coeff"], ring)))
    except ScalarMismatchError:
        raise
    except (KeyError, TypeError, ValueError) as exc:
        if isinstance(exc, CodecError):
            raise
        raise CodecError(f"Malformed vector: {exc}") from exc
    return TensorVector.from_terms(r, pairs)


def encode_operator(op: OperatorExpr) -> dict[str, Any]:
    if isinstance(op, HeckeT):
        return {"op": "T", "k": op.k}
    if isinstance(op, HeckeTinv):
        return {"op": "Tinv", "k": op.k}
    if isinstance(op, XShift):
        return {"op": "X", "t": op.t, "power": op.power}
    if isinstance(op, Egen):
        return {"op": "E", "i": op.i}
    if isinstance(op, Fgen):
        return {"op": "F", "i": op.i}
    if isinstance(op, Kgen):
        return {"op": "K", "i": op.i, "exponent": op.exponent}
    if isinstance(op, KBinom):
        return {"op": "KBinom", "i": op.i, "t": op.t}
    if isinstance(op, Zgen):
        return {"op": "Z", "s": op.s, "sign": op.sign}
    if isinstance(op, WeightProj):
        return {"op": "Proj", "lam": op.lam.to_json()}
    if isinstance(op, IdempotentE):
        return {"op": "IdempotentE", "n": op.n, "N": op.N}
    if isinstance(op, Identity):
        return {"op": "Identity"}
    if isinstance(op, Compose):
        return {"op": "Compose", "factors": [encode_operator(f) for f in op.factors]}
    if isinstance(op, LinComb):
        return {
            "op": "LinComb",
            "terms": [{"coeff": _encode_coeff(c), "expr": encode_operator(e)} for c, e in op.terms],
        }
    raise CodecError(f"Cannot encode operator {op!r}")


def _encode_coeff(value: Any) -> Any:
    if isinstance(value, int):
        return value
    if isinstance(value, Fraction):
        return str(value)
    return encode_scalar(value)


def decode_operator(payload: Any, ring: Optional[ScalarRing] = None) -> OperatorExpr:
    if not isinstance(payload, dict) or "op" not in payload:
        raise CodecError(f"An operator needs an 'op' tag, got {payload!r}")
    tag = payload["op"]
    try:
        if tag == "T":
            return HeckeT(int(payload["k"]))
        if tag == "Tinv":
            return HeckeTinv(int(payload["k"]))
        if tag == "X":
            return XShift(int(payload["t"]), int(payload.get("power", 1)))
        if tag == "E":
            return Egen(int(payload["i"]))
        if tag == "F":
            return Fgen(int(payload["i"]))
        if tag == "K":
            return Kgen(int(payload["i"]), int(payload.get("exponent", 1)))
        if tag == "KBinom":
            return KBinom(int(payload["i"]), int(payload["t"]))
        if tag == "Z":
            sign = str(payload.get("sign", "+"))
            if sign not in ("+", "-"):
                raise CodecError(f"Z sign must be '+' or '-', got {sign!r}")
            return Zgen(int(payload["s"]), sign)
        if tag == "Proj":
            return WeightProj(Composition(tuple(int(p) for p in payload["lam"])))
        if tag == "IdempotentE":
            return IdempotentE(int(payload["n"]), int(payload["N"]))
        if tag == "Identity":
            return Identity()
        if tag == "Compose":
            return Compose(tuple(decode_operator(f, ring) for f in payload["factors"]))
        if tag == "LinComb":
            return LinComb(
                tuple(
                    (decode_scalar(term["coeff"], ring), decode_operator(term["expr"], ring))
                    for term in payload["terms"]
                )
            )
    except ScalarMismatchError:
        raise
    except (KeyError, TypeError, ValueError) as exc:
        if isinstance(exc, CodecError):
            raise
        raise CodecError(f"Malformed '{tag}' operator: {exc}") from exc
    raise CodecError(f"Unknown operator tag {tag!r}")
