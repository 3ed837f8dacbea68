"""Exact arithmetic on n-qubit Pauli strings.

A :class:`PauliString` is stored as ``i**p * W(x_0, z_0) (x) ... (x) W(x_{n-1}, z_{n-1})``
where ``W(0,0)=I``, ``W(1,0)=X``, ``W(0,1)=Z`` and ``W(1,1)=Y``. The bit vectors are
packed into Python integers (bit ``l`` is qubit ``l``, i.e. the ``l``-th letter from
the left), so the algebra is linear in ``n`` and limited only by memory.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from typing import Iterable, Sequence

import numpy as np

__all__ = [
    "PauliString",
    "FrustrationGraph",
    "parse_pauli",
    "format_pauli",
    "mul",
    "product",
    "commutes",
    "frustration_graph",
    "identity",
]

_LETTER_BITS = {"I": (0, 0), "X": (1, 0), "Z": (0, 1), "Y": (1, 1)}
_BITS_LETTER = {v: k for k, v in _LETTER_BITS.items()}
_PREFIX_PHASE = {"": 0, "+": 0, "i": 1, "+i": 1, "-": 2, "-i": 3}
_PHASE_PREFIX = {0: "", 1: "i", 2: "-", 3: "-i"}
_PAULI_RE = re.compile(r"^(\+i|-i|\+|-|i)?([IXYZ]+)$")


def _popcount(v: int) -> int:
    return v.bit_count()


@dataclass(frozen=True)
class PauliString:
    """Phase-exact element ``i**p * W`` of the n-qubit Pauli group."""

    n: int
    p: int
    x: int
    z: int

    def __post_init__(self) -> None:
        if self.n < 0:
            raise ValueError("qubit count must be non-negative")
        mask = (1 << self.n) - 1
        if self.x & ~mask or self.z & ~mask:
            raise ValueError("bit vectors exceed the qubit count")
        object.__setattr__(self, "p", self.p % 4)

    @classmethod
    def from_letters(cls, letters: str, p: int = 0) -> "PauliString":
        x = z = 0
        for pos, ch in enumerate(letters):
            try:
                bx, bz = _LETTER_BITS[ch]
            except KeyError:
                raise ValueError(f"unknown Pauli letter {ch!r}") from None
            x |= bx << pos
            z |= bz << pos
        return cls(len(letters), p, x, z)

    @property
    def letters(self) -> str:
        return "".join(
            _BITS_LETTER[((self.x >> q) & 1, (self.z >> q) & 1)] for q in range(self.n)
        )

    @property
    def weight(self) -> int:
        return _popcount(self.x | self.z)

    @property
    def is_hermitian(self) -> bool:
        return self.p % 2 == 0

    @property
    def is_identity_up_to_phase(self) -> bool:
        return self.x == 0 and self.z == 0

    def symplectic(self) -> tuple[int, int]:
        """The phase-free part as the pair of packed bit vectors ``(x, z)``."""
        return self.x, self.z

    def symplectic_row(self) -> int:
        """The ``2n``-bit row ``x | z << n`` used for GF(2) rank computations."""
        return self.x | (self.z << self.n)

    def with_phase(self, p: int) -> "PauliString":
        return PauliString(self.n, p, self.x, self.z)

    def times_phase(self, p: int) -> "PauliString":
        """Multiply by the scalar ``i**p``."""
        return PauliString(self.n, self.p + p, self.x, self.z)

    def dagger(self) -> "PauliString":
        # every bare letter is Hermitian, so only the scalar is conjugated
        return PauliString(self.n, -self.p, self.x, self.z)

    def hermitized(self) -> "PauliString":
        """Multiply by ``i`` if needed so that the result is Hermitian."""
        return self if self.is_hermitian else self.times_phase(1)

    def equal_up_to_phase(self, other: "PauliString") -> bool:
        return self.n == other.n and self.x == other.x and self.z == other.z

    def equal_up_to_sign(self, other: "PauliString") -> bool:
        return self.equal_up_to_phase(other) and (self.p - other.p) % 2 == 0

    def square_sign(self) -> int:
        """``+1`` or ``-1`` such that ``self * self`` equals that sign times identity."""
        return -1 if self.p % 2 else 1

    def to_matrix(self) -> np.ndarray:
        """Dense ``2**n x 2**n`` complex matrix. Meant for small ``n`` only."""
        mats = {
            "I": np.eye(2, dtype=complex),
            "X": np.array([[0, 1], [1, 0]], dtype=complex),
            "Y": np.array([[0, -1j], [1j, 0]], dtype=complex),
            "Z": np.array([[1, 0], [0, -1]], dtype=complex),
        }
        out = np.ones((1, 1), dtype=complex)
        for ch in self.letters:
            out = np.kron(out, mats[ch])
        return (1j**self.p) * out

    def __mul__(self, other: "PauliString") -> "PauliString":
        return mul(self, other)

    def __neg__(self) -> "PauliString":
        return self.times_phase(2)

    def __str__(self) -> str:
        return format_pauli(self)

    def __repr__(self) -> str:
        return f"PauliString({format_pauli(self)!r})"


def identity(n: int, p: int = 0) -> PauliString:
    return PauliString(n, p, 0, 0)


def parse_pauli(text: str) -> PauliString:
    """Parse strings such as ``"IXYZ"``, ``"-ZXZ"`` or ``"-iYX"``.

    Raises:
        ValueError: empty letter body, unknown characters or malformed prefix.
    """
    text = text.strip()
    match = _PAULI_RE.match(text)
    if match is None:
        raise ValueError(f"malformed Pauli string {text!r}")
    prefix, body = match.group(1) or "", match.group(2)
    return PauliString.from_letters(body, _PREFIX_PHASE[prefix])


def format_pauli(a: PauliString) -> str:
    """Canonical text form: no ``+``, lowercase ``i`` (e.g. ``"-iYX"``).

    A zero-qubit string (a bare scalar) is written as ``1``, ``i``, ``-1`` or ``-i``.
    """
    if a.n == 0:
        return {0: "1", 1: "i", 2: "-1", 3: "-i"}[a.p]
    return _PHASE_PREFIX[a.p] + a.letters


def _check_len(a: PauliString, b: PauliString) -> None:
    if a.n != b.n:
        raise ValueError(f"Pauli strings act on {a.n} and {b.n} qubits")


def mul(a: PauliString, b: PauliString) -> PauliString:
    """Exact operator product ``a @ b``."""
    _check_len(a, b)
    x = a.x ^ b.x
    z = a.z ^ b.z
    # W(v) = i^{x.z} X^x Z^z ; moving Z^{a.z} past X^{b.x} costs (-1)^{a.z . b.x}
    p = (
        a.p
        + b.p
        + _popcount(a.x & a.z)
        + _popcount(b.x & b.z)
        + 2 * _popcount(a.z & b.x)
        - _popcount(x & z)
    )
    return PauliString(a.n, p, x, z)


def product(items: Iterable[PauliString], n: int | None = None) -> PauliString:
    """Ordered product of ``items``; ``n`` is required when ``items`` may be empty."""
    acc: PauliString | None = None if n is None else identity(n)
    for item in items:
        acc = item if acc is None else mul(acc, item)
    if acc is None:
        raise ValueError("empty product needs an explicit qubit count")
    return acc


def commutes(a: PauliString, b: PauliString) -> int:
    """Return 0 if ``ab = ba`` and 1 if ``ab = -ba`` (the symplectic product)."""
    _check_len(a, b)
    return _popcount((a.x & b.z) ^ (a.z & b.x)) & 1


@dataclass(frozen=True)
class FrustrationGraph:
    """Anti-commutation graph; ``adj`` is a symmetric 0/1 matrix with zero diagonal."""

    m: int
    adj: tuple[tuple[int, ...], ...]

    def __post_init__(self) -> None:
        if len(self.adj) != self.m or any(len(row) != self.m for row in self.adj):
            raise ValueError("adjacency matrix has the wrong shape")
        for i in range(self.m):
            if self.adj[i][i]:
                raise ValueError("frustration graph has a self loop")
            for j in range(i):
                if self.adj[i][j] != self.adj[j][i]:
                    raise ValueError("adjacency matrix is not symmetric")

    @property
    def edges(self) -> list[tuple[int, int]]:
        return [
            (i, j) for i in range(self.m) for j in range(i + 1, self.m) if self.adj[i][j]
        ]

    def to_numpy(self) -> np.ndarray:
        return np.array(self.adj, dtype=np.uint8).reshape(self.m, self.m)


def frustration_graph(gens: Sequence[PauliString]) -> FrustrationGraph:
    if not gens:
        raise ValueError("need at least one generator")
    m = len(gens)
    adj = [[0] * m for _ in range(m)]
    for i in range(m):
        for j in range(i + 1, m):
            adj[i][j] = adj[j][i] = commutes(gens[i], gens[j])
    return FrustrationGraph(m, tuple(tuple(row) for row in adj))
