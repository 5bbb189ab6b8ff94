"""The tensor space, its two commuting actions and operator expressions."""

from qschur.tensor.session import TensorSession
from qschur.tensor.vector import (
    Composition,
    IndexTuple,
    TensorVector,
    compositions,
    residue,
    specialize_vector,
    weight_of,
)

__all__ = [
    "Composition",
    "IndexTuple",
    "TensorSession",
    "TensorVector",
    "compositions",
    "residue",
    "specialize_vector",
    "weight_of",
]
