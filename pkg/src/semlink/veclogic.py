"""Vector form of classical logic over exact integer arrays.

Truth values embed as orthonormal one-hot 2-vectors, true = [1,0] and
false = [0,1].  An n-ary operator is a 2 x 2^n integer matrix applied to the
Kronecker product of the embedded inputs; the result is again a one-hot
2-vector, so matrices compose with the classical truth functions.

Column convention: column 0 corresponds to the all-true input tuple and the
tuples descend lexicographically with 1 ordered before 0.  Equivalently the
binary digits of the column index are the complemented input bits, so the
Kronecker product of the embedded inputs is exactly the standard basis
vector of that column.

Everything here is exact int64 arithmetic; no floats.
"""

from __future__ import annotations

import os
from dataclasses import dataclass
from itertools import combinations
from typing import Callable, Sequence

import numpy as np

from .terms import ConnectiveKind

DEFAULT_ARITY_CAP = 20


class ArityCapError(ValueError):
    """Operator synthesis refused: 2^n columns would exceed the cap."""


def arity_cap(override: int | None = None) -> int:
    """Active cap on operator arity; SEMLINK_ARITY_CAP overrides the default."""
    if override is not None:
        return override
    env = os.environ.get("SEMLINK_ARITY_CAP")
    if env is not None:
        try:
            return int(env)
        except ValueError:
            raise ArityCapError(f"SEMLINK_ARITY_CAP={env!r} is not an integer")
    return DEFAULT_ARITY_CAP


def _check_arity(n: int, cap: int | None):
    if n < 1:
        raise ValueError(f"arity must be >= 1, got {n}")
    limit = arity_cap(cap)
    if n > limit:
        raise ArityCapError(f"arity {n} exceeds the cap of {limit}")


def _frozen(a: np.ndarray) -> np.ndarray:
    a.setflags(write=False)
    return a


TRUE_VEC = _frozen(np.array([1, 0], dtype=np.int64))
FALSE_VEC = _frozen(np.array([0, 1], dtype=np.int64))


def embed_truth(bit: int) -> np.ndarray:
    """Map a classical bit to its one-hot 2-vector."""
    if bit == 1:
        return TRUE_VEC
    if bit == 0:
        return FALSE_VEC
    raise ValueError(f"truth value must be 0 or 1, got {bit!r}")


def project_truth(vec: np.ndarray) -> int:
    """Inverse of embed_truth; rejects anything that is not exactly one-hot."""
    v = np.asarray(vec)
    if v.shape != (2,) or not _is_one_hot(v):
        raise ValueError(f"not a truth vector: {vec!r}")
    return int(v[0])


def _is_one_hot(v: np.ndarray) -> bool:
    ok = np.logical_or(v == 0, v == 1)
    return bool(ok.all()) and int(np.asarray(v).sum()) == 1


def kron(u: np.ndarray, v: np.ndarray) -> np.ndarray:
    return np.kron(np.asarray(u), np.asarray(v))


def kron_fold(vecs: Sequence[np.ndarray]) -> np.ndarray:
    """Left fold of the Kronecker product over one or more vectors."""
    if not len(vecs):
        raise ValueError("kron_fold needs at least one vector")
    out = np.asarray(vecs[0])
    for v in vecs[1:]:
        out = np.kron(out, np.asarray(v))
    return out


def column_index(bits: Sequence[int]) -> int:
    """Column of the input tuple: binary digits are the complemented bits."""
    j = 0
    for b in bits:
        if b not in (0, 1):
            raise ValueError(f"input bits must be 0 or 1, got {b!r}")
        j = (j << 1) | (1 - b)
    return j


def column_bits(j: int, n: int) -> tuple[int, ...]:
    """Input tuple of a column; inverse of column_index."""
    if not 0 <= j < (1 << n):
        raise ValueError(f"column {j} out of range for arity {n}")
    return tuple(1 - ((j >> (n - 1 - i)) & 1) for i in range(n))


# ---------------------------------------------------------------------------
# truth tables


@dataclass(frozen=True)
class TruthTable:
    """Total map from n-tuples of bits to a bit, stored in column order."""

    arity: int
    outputs: np.ndarray  # shape (2**arity,), int8

    def __post_init__(self):
        if self.arity < 1:
            raise ValueError(f"arity must be >= 1, got {self.arity}")
        out = np.asarray(self.outputs, dtype=np.int8)
        if out.shape != (1 << self.arity,):
            raise ValueError(
                f"table for arity {self.arity} needs {1 << self.arity} outputs, got {out.shape}")
        if not np.logical_or(out == 0, out == 1).all():
            raise ValueError("table outputs must be 0 or 1")
        object.__setattr__(self, "outputs", _frozen(out))

    @classmethod
    def from_bits(cls, bits: str, arity: int | None = None) -> "TruthTable":
        """Build from a bitstring in column order, e.g. "1000" for conjunction."""
        if not bits or set(bits) - {"0", "1"}:
            raise ValueError(f"table bitstring must be nonempty 0/1, got {bits!r}")
        if arity is None:
            n = (len(bits) - 1).bit_length()
            if (1 << n) != len(bits):
                raise ValueError(f"bitstring length {len(bits)} is not a power of two")
            arity = n
        return cls(arity, np.array([int(c) for c in bits], dtype=np.int8))

    @classmethod
    def from_function(cls, fn: Callable[..., int], arity: int) -> "TruthTable":
        outs = [fn(*column_bits(j, arity)) for j in range(1 << arity)]
        return cls(arity, np.array(outs, dtype=np.int8))

    def __call__(self, bits: Sequence[int]) -> int:
        if len(bits) != self.arity:
            raise ValueError(f"expected {self.arity} bits, got {len(bits)}")
        return int(self.outputs[column_index(bits)])

    def bitstring(self) -> str:
        return "".join(str(int(b)) for b in self.outputs)


# ---------------------------------------------------------------------------
# operator matrices


@dataclass(frozen=True)
class OpMatrix:
    """2 x 2^n integer matrix whose columns are all one-hot."""

    arity: int
    mat: np.ndarray

    def __post_init__(self):
        m = np.asarray(self.mat, dtype=np.int64)
        if self.arity < 1 or m.shape != (2, 1 << self.arity):
            raise ValueError(
                f"operator of arity {self.arity} must be 2 x {1 << self.arity}, got {m.shape}")
        if not np.logical_or(m == 0, m == 1).all() or not (m.sum(axis=0) == 1).all():
            raise ValueError("every operator column must be a one-hot truth vector")
        object.__setattr__(self, "mat", _frozen(m))


def synth_operator(table: TruthTable, cap: int | None = None) -> OpMatrix:
    """Matrix of a truth table: column j is the embedded output for column j.

    This is the sum over columns of outer(embed(output_j), basis_j).
    """
    _check_arity(table.arity, cap)
    dim = 1 << table.arity
    mat = np.zeros((2, dim), dtype=np.int64)
    eye = np.eye(dim, dtype=np.int64)
    for j in range(dim):
        mat += np.outer(embed_truth(int(table.outputs[j])), eye[j])
    return OpMatrix(table.arity, mat)


def apply_operator(op: OpMatrix, inputs: Sequence[np.ndarray]) -> np.ndarray:
    """Multiply the operator into the Kronecker product of the input vectors."""
    if len(inputs) != op.arity:
        raise ValueError(f"operator of arity {op.arity} got {len(inputs)} inputs")
    for v in inputs:
        w = np.asarray(v)
        if w.shape != (2,) or not _is_one_hot(w):
            raise ValueError(f"operator input is not a truth vector: {v!r}")
    return op.mat @ kron_fold(inputs)


def table_of(op: OpMatrix) -> TruthTable:
    """Read the truth table back out of a matrix (projection of each column)."""
    outs = [project_truth(op.mat[:, j]) for j in range(op.mat.shape[1])]
    return TruthTable(op.arity, np.array(outs, dtype=np.int8))


# ---------------------------------------------------------------------------
# named operators

_COND_MAT = np.array(
    [[1, 1, 0, 0, 1, 0, 1, 0],
     [0, 0, 1, 1, 0, 1, 0, 1]], dtype=np.int64)


def named_operator(kind: "ConnectiveKind | str") -> OpMatrix:
    """Matrix for a connective, built from its standard closed form.

    Negation, conjunction, disjunction and equivalence are sums of outer
    products of the truth basis vectors; implication is the matrix product
    disjunction . (negation x identity); exclusive or is negation applied
    after equivalence; the ternary conditional has a fixed 2 x 8 matrix.
    """
    if isinstance(kind, str):
        kind = ConnectiveKind[kind.upper()] if kind.upper() in ConnectiveKind.__members__ else kind
    if not isinstance(kind, ConnectiveKind):
        raise ValueError(f"unknown connective {kind!r}")
    s, n = TRUE_VEC, FALSE_VEC
    match kind:
        case ConnectiveKind.NOT:
            mat = np.outer(n, s) + np.outer(s, n)
        case ConnectiveKind.AND:
            mat = (np.outer(s, kron(s, s)) + np.outer(n, kron(s, n))
                   + np.outer(n, kron(n, s)) + np.outer(n, kron(n, n)))
        case ConnectiveKind.OR:
            mat = (np.outer(s, kron(s, s)) + np.outer(s, kron(s, n))
                   + np.outer(s, kron(n, s)) + np.outer(n, kron(n, n)))
        case ConnectiveKind.IFF:
            mat = (np.outer(s, kron(s, s)) + np.outer(n, kron(s, n))
                   + np.outer(n, kron(n, s)) + np.outer(s, kron(n, n)))
        case ConnectiveKind.IMPLIES:
            disj = named_operator(ConnectiveKind.OR).mat
            neg = named_operator(ConnectiveKind.NOT).mat
            mat = disj @ np.kron(neg, np.eye(2, dtype=np.int64))
        case ConnectiveKind.XOR:
            neg = named_operator(ConnectiveKind.NOT).mat
            mat = neg @ named_operator(ConnectiveKind.IFF).mat
        case ConnectiveKind.COND:
            mat = _COND_MAT.copy()
    return OpMatrix(kind.arity, mat)


# ---------------------------------------------------------------------------
# majority


def majority_bit(bits: Sequence[int]) -> int:
    """Strict majority: 1 when more than half the inputs are 1, ties give 0."""
    return 1 if 2 * sum(bits) > len(bits) else 0


def majority_table(n: int) -> TruthTable:
    return TruthTable.from_function(lambda *bits: majority_bit(bits), n)


def majority_matrix(n: int, cap: int | None = None) -> OpMatrix:
    """Operator matrix of the strict n-ary majority function."""
    _check_arity(n, cap)
    return synth_operator(majority_table(n), cap=cap)


def majority_polynomial(n: int, inputs: Sequence[int]) -> int:
    """Evaluate the disjoint sum-of-products form of strict majority.

    Sum over subsets I of size k, for k from n//2 + 1 up to n, of the
    product of the chosen inputs times the product of the complements of
    the rest.  The terms are indicators of disjoint events, so the sum is
    itself a bit.
    """
    if len(inputs) != n:
        raise ValueError(f"expected {n} inputs, got {len(inputs)}")
    for b in inputs:
        if b not in (0, 1):
            raise ValueError(f"input bits must be 0 or 1, got {b!r}")
    total = 0
    for k in range(n // 2 + 1, n + 1):
        for chosen in combinations(range(n), k):
            chosen_set = set(chosen)
            prod = 1
            for i in range(n):
                prod *= inputs[i] if i in chosen_set else 1 - inputs[i]
            total += prod
    return total
