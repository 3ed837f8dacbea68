"""Small GF(2) linear algebra helpers.

Matrices are ``numpy.uint8`` arrays with entries in {0, 1}; row vectors that only feed
rank and span computations are packed into Python integers.
"""

from __future__ import annotations

from typing import Sequence

import numpy as np


class SingularMatrixError(ValueError):
    """Raised when a GF(2) matrix that must be invertible is singular."""


def as_gf2(matrix) -> np.ndarray:
    arr = np.asarray(matrix, dtype=np.int64) % 2
    return arr.astype(np.uint8)


def inverse(matrix) -> np.ndarray:
    """Inverse over GF(2) by Gauss-Jordan elimination."""
    a = as_gf2(matrix)
    if a.ndim != 2 or a.shape[0] != a.shape[1]:
        raise ValueError("matrix must be square")
    m = a.shape[0]
    aug = np.concatenate([a, np.eye(m, dtype=np.uint8)], axis=1)
    for col in range(m):
        pivots = np.nonzero(aug[col:, col])[0]
        if pivots.size == 0:
            raise SingularMatrixError("matrix is singular over GF(2)")
        piv = col + int(pivots[0])
        if piv != col:
            aug[[col, piv]] = aug[[piv, col]]
        rows = np.nonzero(aug[:, col])[0]
        rows = rows[rows != col]
        aug[rows] ^= aug[col]
    return aug[:, m:].copy()


def matmul(a, b) -> np.ndarray:
    return as_gf2(as_gf2(a).astype(np.int64) @ as_gf2(b).astype(np.int64))


def rank(rows: Sequence[int]) -> int:
    """Rank of a list of packed integer row vectors."""
    basis: dict[int, int] = {}
    r = 0
    for v in rows:
        v = _reduce(v, basis)
        if v:
            basis[v.bit_length() - 1] = v
            r += 1
    return r


def _reduce(v: int, basis: dict[int, int]) -> int:
    while v:
        top = v.bit_length() - 1
        b = basis.get(top)
        if b is None:
            return v
        v ^= b
    return 0


def independent_subset(rows: Sequence[int]) -> list[int]:
    """Indices of a greedy (ascending index) maximal independent subset of ``rows``."""
    basis: dict[int, int] = {}
    keep = []
    for idx, v in enumerate(rows):
        v = _reduce(v, basis)
        if v:
            basis[v.bit_length() - 1] = v
            keep.append(idx)
    return keep


def in_span(v: int, rows: Sequence[int]) -> bool:
    basis: dict[int, int] = {}
    for row in rows:
        row = _reduce(row, basis)
        if row:
            basis[row.bit_length() - 1] = row
    return _reduce(v, basis) == 0


def express(v: int, rows: Sequence[int]) -> list[int] | None:
    """Indices ``S`` with ``XOR_{i in S} rows[i] == v``, or ``None`` if ``v`` is outside the span.

    ``rows`` must be linearly independent.
    """
    # each basis entry carries the set of original rows it is made of, as a bitmask
    basis: dict[int, tuple[int, int]] = {}
    for idx, row in enumerate(rows):
        combo = 1 << idx
        while row:
            top = row.bit_length() - 1
            if top not in basis:
                break
            brow, bcombo = basis[top]
            row ^= brow
            combo ^= bcombo
        if not row:
            raise ValueError("rows are not linearly independent")
        basis[row.bit_length() - 1] = (row, combo)
    combo = 0
    while v:
        top = v.bit_length() - 1
        if top not in basis:
            return None
        brow, bcombo = basis[top]
        v ^= brow
        combo ^= bcombo
    return [i for i in range(len(rows)) if combo >> i & 1]


def bits_to_int(bits: Sequence[int]) -> int:
    out = 0
    for i, b in enumerate(bits):
        if b & 1:
            out |= 1 << i
    return out


def int_to_bits(v: int, length: int) -> list[int]:
    return [(v >> i) & 1 for i in range(length)]
