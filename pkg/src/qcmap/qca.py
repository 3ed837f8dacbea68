"""Special quasi-Clifford algebras, monomial arithmetic and the splitting algorithm.

Generators ``x_0, ..., x_{m-1}`` obey ``x_i**2 = k_i`` with ``k_i`` in {+1, -1} and
``x_j x_i = (-1)**chi[i][j] x_i x_j``. Monomials are products of generators in
ascending index order times a power of ``i``; exponent vectors are packed into an
integer (bit ``i`` is generator ``i``).
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Iterable, Sequence, Union

import numpy as np

from . import gf2
from .pauli import FrustrationGraph

__all__ = [
    "QcaSpec",
    "Monomial",
    "PairBlock",
    "CentralBlock",
    "WedderburnDecomposition",
    "validate_spec",
    "monomial_chi",
    "monomial_mul",
    "monomial_square_sign",
    "split_step",
    "run_splitting",
    "LOWEST_PAIR",
]

LOWEST_PAIR = "lowest-pair"

PivotPolicy = Union[str, Sequence[tuple[int, int]], None]


@dataclass(frozen=True)
class QcaSpec:
    """Generator count ``m``, anti-commutation matrix ``chi`` and squares ``k``.

    Instances are validated on construction, see :func:`validate_spec`.
    """

    m: int
    chi: tuple[tuple[int, ...], ...]
    k: tuple[int, ...]
    _rows: tuple[int, ...] = field(init=False, repr=False, compare=False)

    def __post_init__(self) -> None:
        object.__setattr__(self, "chi", tuple(tuple(int(v) for v in row) for row in self.chi))
        object.__setattr__(self, "k", tuple(int(v) for v in self.k))
        validate_spec(self)
        rows = tuple(gf2.bits_to_int(row) for row in self.chi)
        object.__setattr__(self, "_rows", rows)

    @classmethod
    def from_edges(
        cls, m: int, edges: Iterable[tuple[int, int]], k: Sequence[int] | None = None
    ) -> "QcaSpec":
        """Build from 0-based anti-commuting pairs; ``k`` defaults to all ``+1``."""
        chi = [[0] * m for _ in range(m)]
        for i, j in edges:
            if not (0 <= i < m and 0 <= j < m):
                raise ValueError(f"edge ({i}, {j}) out of range for m={m}")
            if i == j:
                raise ValueError("self loops are not allowed")
            chi[i][j] = chi[j][i] = 1
        return cls(m, tuple(map(tuple, chi)), tuple(k) if k is not None else (1,) * m)

    @classmethod
    def from_graph(cls, graph: FrustrationGraph, k: Sequence[int] | None = None) -> "QcaSpec":
        return cls(graph.m, graph.adj, tuple(k) if k is not None else (1,) * graph.m)

    @classmethod
    def complete(cls, m: int, k: Sequence[int] | None = None) -> "QcaSpec":
        return cls.from_edges(m, [(i, j) for i in range(m) for j in range(i + 1, m)], k)

    @property
    def edges(self) -> list[tuple[int, int]]:
        return [(i, j) for i in range(self.m) for j in range(i + 1, self.m) if self.chi[i][j]]

    @property
    def chi_rows(self) -> tuple[int, ...]:
        return self._rows

    def chi_matrix(self) -> np.ndarray:
        return np.array(self.chi, dtype=np.uint8).reshape(self.m, self.m)

    def with_k(self, k: Sequence[int]) -> "QcaSpec":
        return QcaSpec(self.m, self.chi, tuple(k))


def validate_spec(spec: QcaSpec) -> None:
    """Raise ``ValueError`` unless ``spec`` describes a special quasi-Clifford algebra."""
    m = spec.m
    if m < 1:
        raise ValueError("a quasi-Clifford algebra needs at least one generator")
    if len(spec.chi) != m or any(len(row) != m for row in spec.chi):
        raise ValueError(f"chi must be a {m}x{m} matrix")
    if len(spec.k) != m:
        raise ValueError(f"k must have length {m}")
    for i in range(m):
        if spec.chi[i][i] != 0:
            raise ValueError(f"chi[{i}][{i}] must be 0")
        for j in range(m):
            if spec.chi[i][j] not in (0, 1):
                raise ValueError("chi entries must be 0 or 1")
            if spec.chi[i][j] != spec.chi[j][i]:
                raise ValueError(f"chi is not symmetric at ({i}, {j})")
    for i, ki in enumerate(spec.k):
        if ki not in (1, -1):
            raise ValueError(f"k[{i}] = {ki} is not +1 or -1")


@dataclass(frozen=True)
class Monomial:
    """``i**p * x_0**e_0 x_1**e_1 ... x_{m-1}**e_{m-1}`` with ``e`` packed into an int."""

    m: int
    e: int
    p: int = 0

    def __post_init__(self) -> None:
        if self.e >> self.m:
            raise ValueError("exponent vector is longer than m")
        object.__setattr__(self, "p", self.p % 4)

    @classmethod
    def identity(cls, m: int) -> "Monomial":
        return cls(m, 0, 0)

    @classmethod
    def generator(cls, m: int, i: int) -> "Monomial":
        if not 0 <= i < m:
            raise IndexError(f"generator index {i} out of range")
        return cls(m, 1 << i, 0)

    @classmethod
    def from_bits(cls, bits: Sequence[int], p: int = 0) -> "Monomial":
        return cls(len(bits), gf2.bits_to_int(bits), p)

    @property
    def bits(self) -> tuple[int, ...]:
        return tuple(gf2.int_to_bits(self.e, self.m))

    @property
    def support(self) -> list[int]:
        return [i for i in range(self.m) if self.e >> i & 1]

    def same_element_up_to_phase(self, other: "Monomial") -> bool:
        return self.m == other.m and self.e == other.e

    def __str__(self) -> str:
        body = " ".join(f"x{i + 1}" for i in self.support) or "1"
        return {0: "", 1: "i ", 2: "-", 3: "-i "}[self.p] + body


def _check_m(spec: QcaSpec, *monos: Monomial) -> None:
    for mono in monos:
        if mono.m != spec.m:
            raise ValueError(f"monomial has length {mono.m}, algebra has {spec.m} generators")


def monomial_chi(spec: QcaSpec, a: Monomial, b: Monomial) -> int:
    """0 if the monomials commute, 1 if they anti-commute (bilinear form on exponents)."""
    _check_m(spec, a, b)
    acc = 0
    rows = spec.chi_rows
    for i in a.support:
        acc ^= (rows[i] & b.e).bit_count() & 1
    return acc


def monomial_mul(spec: QcaSpec, a: Monomial, b: Monomial) -> Monomial:
    """Exact product ``a b`` brought back to ascending canonical order."""
    _check_m(spec, a, b)
    rows = spec.chi_rows
    swaps = 0
    # each letter j of b passes every letter i > j of a on its way into place
    for j in b.support:
        higher = a.e & ~((1 << (j + 1)) - 1)
        swaps += (rows[j] & higher).bit_count()
    squares = sum(1 for j in range(spec.m) if (a.e & b.e) >> j & 1 and spec.k[j] == -1)
    return Monomial(spec.m, a.e ^ b.e, a.p + b.p + 2 * (swaps + squares))


def monomial_square_sign(spec: QcaSpec, a: Monomial) -> int:
    """Square of the phase-free part of ``a``, which is always ``+1`` or ``-1``."""
    _check_m(spec, a)
    rows = spec.chi_rows
    swaps = 0
    for j in a.support:
        swaps += (rows[j] & a.e & ((1 << j) - 1)).bit_count()
    sign = -1 if swaps % 2 else 1
    for j in a.support:
        sign *= spec.k[j]
    return sign


def split_step(
    spec: QcaSpec, current: Sequence[Monomial], pivot: tuple[int, int]
) -> list[Monomial]:
    """Decouple the anti-commuting pair ``current[u], current[v]`` from all other entries.

    Entries commuting with both pivots are kept; otherwise they are multiplied on the
    left by the pivot(s) they commute with, or by both pivots if they commute with
    neither.
    """
    u, v = pivot
    n = len(current)
    if u == v or not (0 <= u < n and 0 <= v < n):
        raise IndexError(f"invalid pivot pair {pivot}")
    gu, gv = current[u], current[v]
    if monomial_chi(spec, gu, gv) != 1:
        raise ValueError(f"pivot pair {pivot} commutes")
    guv = monomial_mul(spec, gu, gv)
    out = []
    for t, y in enumerate(current):
        if t in (u, v):
            out.append(y)
            continue
        cu = monomial_chi(spec, gu, y)
        cv = monomial_chi(spec, gv, y)
        if cu and cv:
            out.append(monomial_mul(spec, guv, y))
        elif cv:
            out.append(monomial_mul(spec, gu, y))
        elif cu:
            out.append(monomial_mul(spec, gv, y))
        else:
            out.append(y)
    return out


@dataclass(frozen=True)
class PairBlock:
    gamma: Monomial
    delta: Monomial
    c: int
    d: int


@dataclass(frozen=True)
class CentralBlock:
    beta: Monomial
    b: int


@dataclass(frozen=True)
class WedderburnDecomposition:
    """Result of the splitting algorithm.

    ``T`` has the exponent vectors of ``gamma_1, delta_1, ..., gamma_s, delta_s,
    beta_1, ..., beta_r`` as rows. ``pivot_log`` holds the 0-based pivot pairs in the
    order they were used.
    """

    spec: QcaSpec
    pairs: tuple[PairBlock, ...]
    centrals: tuple[CentralBlock, ...]
    T: np.ndarray
    pivot_log: tuple[tuple[int, int], ...]

    @property
    def s(self) -> int:
        return len(self.pairs)

    @property
    def r(self) -> int:
        return len(self.centrals)

    @property
    def generators(self) -> list[Monomial]:
        out: list[Monomial] = []
        for pair in self.pairs:
            out.extend((pair.gamma, pair.delta))
        out.extend(c.beta for c in self.centrals)
        return out

    @property
    def squares(self) -> list[int]:
        out: list[int] = []
        for pair in self.pairs:
            out.extend((pair.c, pair.d))
        out.extend(c.b for c in self.centrals)
        return out


def _lowest_pair(spec: QcaSpec, current: Sequence[Monomial], free: Sequence[int]):
    for a_pos, u in enumerate(free):
        for v in free[a_pos + 1 :]:
            if monomial_chi(spec, current[u], current[v]):
                return u, v
    return None


def run_splitting(spec: QcaSpec, pivot_policy: PivotPolicy = LOWEST_PAIR) -> WedderburnDecomposition:
    """Iterate :func:`split_step` until only isolated vertices and pairs remain.

    ``pivot_policy`` is ``"lowest-pair"`` (lexicographically smallest anti-commuting
    pair among unprocessed entries) or an explicit list of 0-based pivot pairs. Once an
    explicit list is exhausted, any remaining edges are split with the lowest-pair rule.
    """
    validate_spec(spec)
    if pivot_policy is None or (isinstance(pivot_policy, str) and pivot_policy == LOWEST_PAIR):
        explicit: list[tuple[int, int]] = []
    elif isinstance(pivot_policy, str):
        raise ValueError(f"unknown pivot policy {pivot_policy!r}")
    else:
        explicit = [(int(u), int(v)) for u, v in pivot_policy]

    m = spec.m
    current = [Monomial.generator(m, i) for i in range(m)]
    done: set[int] = set()
    log: list[tuple[int, int]] = []
    for u, v in explicit:
        if u in done or v in done:
            raise ValueError(f"pivot ({u}, {v}) uses an already split vertex")
        if u == v or not (0 <= u < m and 0 <= v < m):
            raise ValueError(f"invalid pivot pair ({u}, {v})")
        if not monomial_chi(spec, current[u], current[v]):
            raise ValueError(f"pivot ({u}, {v}) commutes at this stage")
        current = split_step(spec, current, (u, v))
        done.update((u, v))
        log.append((u, v))
    while True:
        free = [i for i in range(m) if i not in done]
        pivot = _lowest_pair(spec, current, free)
        if pivot is None:
            break
        current = split_step(spec, current, pivot)
        done.update(pivot)
        log.append(pivot)

    pairs = tuple(
        PairBlock(
            current[u],
            current[v],
            monomial_square_sign(spec, current[u]),
            monomial_square_sign(spec, current[v]),
        )
        for u, v in log
    )
    centrals = tuple(
        CentralBlock(current[i], monomial_square_sign(spec, current[i]))
        for i in range(m)
        if i not in done
    )
    gens = [g for p in pairs for g in (p.gamma, p.delta)] + [c.beta for c in centrals]
    T = np.array([g.bits for g in gens], dtype=np.uint8).reshape(m, m)
    return WedderburnDecomposition(spec, pairs, centrals, T, tuple(log))
