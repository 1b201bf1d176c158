"""Logical matrices, the semi-tensor product, and truth-table conversion.

States, inputs and outputs of a logical network are canonical basis
vectors, so the structure matrices are column selectors: each column is
one column of an identity matrix.  A :class:`LogicalMatrix` stores only
which one.  All indices are 1-based throughout, matching the usual delta
notation for basis vectors.

Dense matrices are plain 2-D numpy arrays; with integer dtypes every
computation here is exact.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from math import lcm
from typing import Callable, Mapping, Sequence

import numpy as np

__all__ = [
    "LogicalMatrix",
    "stp",
    "stp_logical",
    "boolean_to_algebraic",
    "encode_bits",
    "decode_bits",
    "tabulate",
]

BitTable = Mapping[tuple[int, ...], tuple[int, ...]]


@dataclass(frozen=True)
class LogicalMatrix:
    """A 0/1 matrix whose every column is a canonical basis vector.

    ``col_index[j]`` says that column ``j`` (0-based position, 1-based
    value) equals the ``col_index[j]``-th column of the ``rows x rows``
    identity matrix.
    """

    rows: int
    col_index: tuple[int, ...]

    def __post_init__(self) -> None:
        if self.rows < 1:
            raise ValueError(f"rows must be positive, got {self.rows}")
        object.__setattr__(self, "col_index", tuple(self.col_index))
        for j, i in enumerate(self.col_index, start=1):
            if not 1 <= i <= self.rows:
                raise ValueError(
                    f"column {j} selects row {i}, outside [1, {self.rows}]"
                )

    @property
    def cols(self) -> int:
        return len(self.col_index)

    @classmethod
    def identity(cls, n: int) -> "LogicalMatrix":
        return cls(n, tuple(range(1, n + 1)))

    @classmethod
    def basis(cls, n: int, i: int) -> "LogicalMatrix":
        """The i-th basis vector of height n, as an n x 1 matrix."""
        return cls(n, (i,))

    @classmethod
    def from_dense(cls, a: np.ndarray) -> "LogicalMatrix":
        """Read a dense column-selector matrix back into index form."""
        a = np.asarray(a)
        if a.ndim != 2:
            raise ValueError(f"expected a 2-D array, got shape {a.shape}")
        index = []
        for j in range(a.shape[1]):
            col = a[:, j]
            ones = np.flatnonzero(col)
            if len(ones) != 1 or col[ones[0]] != 1:
                raise ValueError(f"column {j + 1} is not a basis vector")
            index.append(int(ones[0]) + 1)
        return cls(a.shape[0], tuple(index))

    def to_dense(self) -> np.ndarray:
        out = np.zeros((self.rows, self.cols), dtype=np.int64)
        for j, i in enumerate(self.col_index):
            out[i - 1, j] = 1
        return out


def stp(a: np.ndarray, b: np.ndarray) -> np.ndarray:
    """Semi-tensor product of two dense matrices.

    For ``a`` with n columns and ``b`` with p rows this is
    ``(a kron I_{t/n}) @ (b kron I_{t/p})`` with ``t = lcm(n, p)``; when
    n equals p it reduces to the ordinary matrix product.  Defined for
    every pair of shapes.
    """
    a = np.asarray(a)
    b = np.asarray(b)
    if a.ndim != 2 or b.ndim != 2:
        raise ValueError("semi-tensor product needs 2-D operands")
    n = a.shape[1]
    p = b.shape[0]
    t = lcm(n, p)
    left = np.kron(a, np.eye(t // n, dtype=a.dtype))
    right = np.kron(b, np.eye(t // p, dtype=b.dtype))
    return left @ right


def stp_logical(a: LogicalMatrix, b: LogicalMatrix) -> LogicalMatrix:
    """Semi-tensor product specialized to logical matrices.

    Works purely on column indices, so no dense expansion is built; the
    dense expansion of the result equals ``stp`` of the expansions.
    """
    n = a.cols
    p = b.rows
    t = lcm(n, p)
    r = t // n
    s = t // p
    index = []
    for bj in b.col_index:
        for d in range(1, s + 1):
            e = (bj - 1) * s + d
            k, c = divmod(e - 1, r)
            index.append((a.col_index[k] - 1) * r + c + 1)
    return LogicalMatrix(a.rows * r, tuple(index))


def encode_bits(bits: Sequence[int]) -> int:
    """Map a Boolean vector to its 1-based basis index.

    The all-true vector maps to 1, the all-false vector to ``2**k``.
    """
    acc = 0
    for b in bits:
        if b not in (0, 1):
            raise ValueError(f"bits must be 0 or 1, got {b!r}")
        acc = 2 * acc + (1 - b)
    return acc + 1


def decode_bits(index: int, width: int) -> tuple[int, ...]:
    """Inverse of :func:`encode_bits` for vectors of the given width."""
    if width < 0:
        raise ValueError(f"width must be nonnegative, got {width}")
    if not 1 <= index <= 2**width:
        raise ValueError(f"index {index} outside [1, {2**width}]")
    rem = index - 1
    return tuple(1 - ((rem >> pos) & 1) for pos in range(width - 1, -1, -1))


def tabulate(fn: Callable[[tuple[int, ...]], Sequence[int] | int],
             arity: int) -> dict[tuple[int, ...], tuple[int, ...]]:
    """Build an explicit truth table from a callable on bit tuples."""
    table = {}
    for key in itertools.product((0, 1), repeat=arity):
        value = fn(key)
        if isinstance(value, int):
            value = (value,)
        table[key] = tuple(value)
    return table


def _table_widths(table: BitTable, name: str) -> tuple[int, int]:
    if not table:
        raise ValueError(f"{name} is empty")
    arities = {len(k) for k in table}
    if len(arities) != 1:
        raise ValueError(f"{name} mixes key widths {sorted(arities)}")
    widths = {len(v) for v in table.values()}
    if len(widths) != 1:
        raise ValueError(f"{name} mixes value widths {sorted(widths)}")
    for key, value in table.items():
        for b in (*key, *value):
            if b not in (0, 1):
                raise ValueError(f"{name} row {key} contains non-bit {b!r}")
    width = widths.pop()
    if width < 1:
        raise ValueError(f"{name} values must have at least one bit")
    return arities.pop(), width


def boolean_to_algebraic(f_table: BitTable,
                         h_table: BitTable) -> tuple[LogicalMatrix, LogicalMatrix]:
    """Convert the truth tables of a Boolean control system to matrix form.

    ``f_table`` maps concatenated (input bits, state bits) to next-state
    bits; ``h_table`` maps state bits to output bits.  The bit widths fix
    the sizes: with n state bits, m input bits and q output bits the
    returned transition matrix is 2^n x 2^(n+m) and the readout matrix is
    2^q x 2^n.  Column ``(j-1)*2^n + i`` of the transition matrix is the
    encoded successor for input index j and state index i, with vectors
    encoded by :func:`encode_bits`.

    Both tables must be total; a missing row raises an error naming it.
    """
    f_arity, n = _table_widths(f_table, "f_table")
    m = f_arity - n
    if m < 0:
        raise ValueError(
            f"f_table keys have {f_arity} bits but values have {n}; "
            "keys must append the state bits to the input bits"
        )
    h_arity, q = _table_widths(h_table, "h_table")
    if h_arity != n:
        raise ValueError(
            f"h_table keys have {h_arity} bits, expected {n} state bits"
        )
    n_states, n_inputs = 2**n, 2**m
    l_cols = []
    for j in range(1, n_inputs + 1):
        u_bits = decode_bits(j, m)
        for i in range(1, n_states + 1):
            key = u_bits + decode_bits(i, n)
            if key not in f_table:
                raise ValueError(f"f_table is missing row {key}")
            l_cols.append(encode_bits(f_table[key]))
    h_cols = []
    for i in range(1, n_states + 1):
        key = decode_bits(i, n)
        if key not in h_table:
            raise ValueError(f"h_table is missing row {key}")
        h_cols.append(encode_bits(h_table[key]))
    return LogicalMatrix(n_states, tuple(l_cols)), LogicalMatrix(2**q, tuple(h_cols))
