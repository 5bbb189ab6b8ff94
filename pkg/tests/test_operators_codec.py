from fractions import Fraction

import pytest

from qschur.arith import CyclotomicNumber, LaurentPoly, ScalarRing, epsilon
from qschur.codec import decode_operator, decode_scalar, decode_vector, encode_operator, encode_scalar, encode_vector
from qschur.errors import CodecError, IndexRangeError, ScalarMismatchError
from qschur.tensor import Composition, TensorSession, TensorVector
from qschur.tensor.operators import (
    HECKE,
    MIXED,
    NEUTRAL,
    QUANTUM,
    ZERO,
    Compose,
    Egen,
    Fgen,
    HeckeT,
    IdempotentE,
    Identity,
    Kgen,
    LinComb,
    WeightProj,
    XShift,
    Zgen,
)

V = LaurentPoly.v()


def w(*idx: int) -> TensorVector:
    return TensorVector.basis(idx, LaurentPoly.constant(1))


def test_identity_and_scalar_combination() -> None:
    session = TensorSession(2, 2)
    x = w(1, 2) + w(3, -1)
    assert session.apply_expr(Identity(), x) == x
    assert session.apply_expr(LinComb(((V**2, Identity()),)), x) == x.scale(V**2)
    assert session.apply_expr(ZERO, x).is_zero()


def test_commutator_on_a_weight_one_zero_vector() -> None:
    session = TensorSession(2, 1)
    commutator = LinComb(((1, Compose((Egen(1), Fgen(1)))), (-1, Compose((Fgen(1), Egen(1))))))
    assert session.apply_expr(commutator, w(1)) == w(1)


def test_compose_applies_quantum_right_to_left_then_hecke_left_to_right() -> None:
    session = TensorSession(2, 2)
    x = w(2, 1) + w(1, 3)
    got = session.apply_expr(Compose((Egen(1), HeckeT(1), Kgen(2), XShift(2))), x)
    expected = session.apply_x(2, 1, session.apply_t(1, session.apply_e(1, session.apply_k(2, 1, x))))
    assert got == expected


def test_operator_sides() -> None:
    assert HeckeT(1).side == HECKE
    assert Egen(1).side == QUANTUM
    assert Identity().side == NEUTRAL
    assert Compose((Egen(1), Identity())).side == QUANTUM
    assert Compose((Egen(1), HeckeT(1))).side == MIXED
    assert LinComb(((2, XShift(1)), (1, HeckeT(1)))).side == HECKE


def test_idempotent_e_needs_matching_session() -> None:
    large = TensorSession(3, 2)
    assert large.apply_expr(IdempotentE(2, 3), w(1, 3) + w(4, 2)) == w(4, 2)
    with pytest.raises(IndexRangeError):
        TensorSession(2, 2).apply_expr(IdempotentE(2, 3), w(1, 1))


def test_operator_codec_preserves_action() -> None:
    op = LinComb(
        (
            (V - V**-1, Compose((Egen(1), Fgen(1), HeckeT(1)))),
            (3, Compose((WeightProj(Composition((1, 1))), Zgen(2, "-"), XShift(1, -2)))),
        )
    )
    payload = encode_operator(op)
    assert payload["op"] == "LinComb"
    decoded = decode_operator(payload)
    session = TensorSession(2, 2)
    x = w(1, 2) + w(2, 2) + w(0, 5)
    assert session.apply_expr(decoded, x) == session.apply_expr(op, x)


def test_decode_scalar_forms() -> None:
    assert decode_scalar(3) == LaurentPoly.constant(3)
    assert decode_scalar("1/2") == LaurentPoly.constant(Fraction(1, 2))
    assert decode_scalar([[1, 1, 1]]) == V
    assert decode_scalar({"laurent": [[1, 1, 1]]}) == V
    ring = ScalarRing.at_root_of_unity(4)
    assert decode_scalar([[2, 1, 1]], ring) == -1
    assert decode_scalar({"lprime": 4, "coords": [[0, 1], [1, 1]]}, ring) == epsilon(4)
    assert decode_scalar({"cyclotomic": epsilon(4).to_json()}, ring) == epsilon(4)
    with pytest.raises(CodecError):
        decode_scalar(True)
    with pytest.raises(CodecError):
        decode_scalar({"laurent": "nope"})
    with pytest.raises(ScalarMismatchError):
        decode_scalar({"cyclotomic": epsilon(3).to_json()})
    with pytest.raises(CodecError):
        decode_scalar({"lprime": 4, "coords": [[1, 1]]}, ring)


def test_vector_payload_shape() -> None:
    x = w(2, 1) + TensorVector.basis((1, 2), V**2)
    payload = encode_vector(x)
    assert payload["r"] == 2
    assert [term["idx"] for term in payload["terms"]] == [[1, 2], [2, 1]]
    assert decode_vector(payload) == x


def test_decode_vector_errors() -> None:
    with pytest.raises(CodecError):
        decode_vector({"terms": []})
    with pytest.raises(CodecError):
        decode_vector({"r": 2, "terms": [{"idx": [1], "coeff": 1}]})
    with pytest.raises(CodecError):
        decode_vector({"r": 2, "terms": [{"idx": [1, "x"], "coeff": 1}]})


def test_decode_operator_errors() -> None:
    with pytest.raises(CodecError):
        decode_operator({"op": "Nope"})
    with pytest.raises(CodecError):
        decode_operator({"k": 1})
    with pytest.raises(CodecError):
        decode_operator({"op": "Z", "s": 1, "sign": "*"})
    with pytest.raises(CodecError):
        decode_operator({"op": "T"})


def test_specialized_lincomb_coefficients_are_coerced() -> None:
    ring = ScalarRing.at_root_of_unity(3)
    session = TensorSession(2, 1, ring)
    op = decode_operator({"op": "LinComb", "terms": [{"coeff": {"laurent": [[3, 1, 1]]}, "expr": {"op": "Identity"}}]}, ring)
    x = session.basis((1,))
    assert session.apply_expr(op, x) == x
    assert isinstance(session.apply_expr(op, x).coefficient((1,)), CyclotomicNumber)


def test_scalar_wire_forms_are_bare() -> None:
    p = LaurentPoly({-1: Fraction(1, 3), 2: -4})
    assert encode_scalar(p) == [[-1, 1, 3], [2, -4, 1]]
    assert decode_scalar(encode_scalar(p)) == p

    z = 1 + epsilon(6) * Fraction(-1, 2)
    assert encode_scalar(z) == {"lprime": 6, "coords": [[1, 1], [-1, 2]]}
    assert decode_scalar(encode_scalar(z), ScalarRing.at_root_of_unity(6)) == z


def test_vector_with_bare_scalar_coefficients() -> None:
    payload = {"r": 2, "terms": [{"idx": [2, 1], "coeff": [[1, 1, 1]]}, {"idx": [1, 2], "coeff": 3}]}
    vec = decode_vector(payload)
    assert vec.coefficient((2, 1)) == V
    assert encode_vector(vec)["terms"] == [
        {"idx": [1, 2], "coeff": [[0, 3, 1]]},
        {"idx": [2, 1], "coeff": [[1, 1, 1]]},
    ]
