"""Concrete qubit realizations of quasi-Clifford algebras and Pauli groups."""

from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence

import numpy as np

from . import gf2
from .pauli import PauliString, frustration_graph, identity, mul, product
from .qca import (
    LOWEST_PAIR,
    Monomial,
    PivotPolicy,
    QcaSpec,
    WedderburnDecomposition,
    monomial_mul,
    run_splitting,
)

__all__ = [
    "QubitMapping",
    "StarIsomorphism",
    "assign_irreps",
    "invert_relations",
    "mapping_from_decomposition",
    "qca_to_qubits",
    "pauli_to_pauli",
    "jordan_wigner",
]


@dataclass(frozen=True)
class QubitMapping:
    """Pauli-string images of the generators of a quasi-Clifford algebra.

    ``hermitized`` lists the (0-based) generators whose image was multiplied by ``i``
    to make it Hermitian; for those the realized square is ``-k_i`` instead of ``k_i``.
    """

    spec: QcaSpec
    s: int
    r: int
    independence_mode: bool
    sign_branch: tuple[int, ...]
    images: tuple[PauliString, ...]
    T_inv: np.ndarray
    pivots: tuple[tuple[int, int], ...]
    hermitized: tuple[int, ...]

    @property
    def m(self) -> int:
        return self.spec.m

    @property
    def n_qubits(self) -> int:
        return self.s + (self.r if self.independence_mode else 0)

    def realized_spec(self) -> QcaSpec:
        """The relations the (Hermitian) images actually satisfy."""
        k = list(self.spec.k)
        for i in self.hermitized:
            k[i] = -k[i]
        return self.spec.with_k(k)

    def raw_images(self) -> list[PauliString]:
        """Images before Hermitization; these satisfy ``spec`` exactly."""
        out = list(self.images)
        for i in self.hermitized:
            out[i] = out[i].times_phase(-1)
        return out


def _qubit_letter(n: int, q: int, letter: str, p: int) -> PauliString:
    bit = 1 << q
    x = bit if letter in "XY" else 0
    z = bit if letter in "ZY" else 0
    return PauliString(n, p, x, z)


def assign_irreps(
    dec: WedderburnDecomposition,
    independence_mode: bool,
    sign_branch: Sequence[int] | None = None,
) -> list[PauliString]:
    """Images of the decomposition generators ``gamma_1, delta_1, ..., beta_r``.

    Pair ``j`` goes to ``X`` and ``Z`` on its own qubit, times ``i`` when the generator
    squares to ``-1``. In independence mode each central element becomes a ``Z`` on an
    extra qubit; these extra qubits come first. Otherwise central ``l`` becomes the
    scalar ``sign_branch[l] * i**((1 - b_l) / 2)`` on the ``s`` pair qubits.
    """
    s, r = dec.s, dec.r
    if independence_mode:
        if sign_branch:
            raise ValueError("sign_branch must be empty in independence mode")
        branch: list[int] = []
    else:
        branch = [1] * r if sign_branch is None else [int(b) for b in sign_branch]
        if len(branch) != r:
            raise ValueError(f"sign_branch needs {r} entries, got {len(branch)}")
        if any(b not in (1, -1) for b in branch):
            raise ValueError("sign_branch entries must be +1 or -1")

    offset = r if independence_mode else 0
    n = s + offset
    out: list[PauliString] = []
    for j, pair in enumerate(dec.pairs):
        out.append(_qubit_letter(n, offset + j, "X", (1 - pair.c) // 2))
        out.append(_qubit_letter(n, offset + j, "Z", (1 - pair.d) // 2))
    for ell, central in enumerate(dec.centrals):
        phase = (1 - central.b) // 2
        if independence_mode:
            out.append(_qubit_letter(n, ell, "Z", phase))
        else:
            out.append(identity(n, phase + (2 if branch[ell] == -1 else 0)))
    return out


def invert_relations(T) -> np.ndarray:
    """GF(2) inverse of the change-of-generators matrix.

    Row ``i`` of the result lists which decomposition generators multiply to ``x_i``.
    """
    try:
        return gf2.inverse(T)
    except gf2.SingularMatrixError as exc:
        raise gf2.SingularMatrixError(
            "change-of-generators matrix is singular; the splitting produced a bad basis"
        ) from exc


def mapping_from_decomposition(
    dec: WedderburnDecomposition,
    independence_mode: bool = False,
    sign_branch: Sequence[int] | None = None,
    hermitize: bool = True,
) -> QubitMapping:
    spec = dec.spec
    m = spec.m
    gens = dec.generators
    irreps = assign_irreps(dec, independence_mode, sign_branch)
    n = irreps[0].n
    T_inv = invert_relations(dec.T)

    images: list[PauliString] = []
    flipped: list[int] = []
    for i in range(m):
        factors = [a for a in range(m) if T_inv[i, a]]
        mono = Monomial.identity(m)
        for a in factors:
            mono = monomial_mul(spec, mono, gens[a])
        if mono.e != 1 << i:
            raise AssertionError("inverse relations do not reproduce the generator")
        # mono = i^p x_i, so x_i = i^{-p} * prod(z_a)
        img = product((irreps[a] for a in factors), n=n).times_phase(-mono.p)
        if hermitize and not img.is_hermitian:
            img = img.times_phase(1)
            flipped.append(i)
        images.append(img)

    branch = () if independence_mode else tuple(
        [1] * dec.r if sign_branch is None else [int(b) for b in sign_branch]
    )
    return QubitMapping(
        spec=spec,
        s=dec.s,
        r=dec.r,
        independence_mode=independence_mode,
        sign_branch=branch,
        images=tuple(images),
        T_inv=T_inv,
        pivots=dec.pivot_log,
        hermitized=tuple(flipped),
    )


def qca_to_qubits(
    spec: QcaSpec,
    pivot_policy: PivotPolicy = LOWEST_PAIR,
    independence_mode: bool = False,
    sign_branch: Sequence[int] | None = None,
    hermitize: bool = True,
) -> QubitMapping:
    """Realize the relations of ``spec`` with Pauli strings.

    Splits the algebra, sends every pair to a one-qubit ``[X, Z]`` algebra, expresses
    the original generators back through the inverse change of basis with exact phases,
    and finally multiplies any anti-Hermitian image by ``i``.
    """
    dec = run_splitting(spec, pivot_policy)
    return mapping_from_decomposition(dec, independence_mode, sign_branch, hermitize)


def jordan_wigner(N: int) -> QubitMapping:
    """Majorana operators ``m_0, ..., m_{2N-1}`` via the splitting of the complete graph.

    ``m_{2j}`` maps to ``X_j Y_0 ... Y_{j-1}`` and ``m_{2j+1}`` to ``Z_j Y_0 ... Y_{j-1}``
    up to a sign per image.
    """
    if N < 1:
        raise ValueError("need at least one fermionic mode")
    spec = QcaSpec.complete(2 * N)
    pivots = [(2 * j, 2 * j + 1) for j in range(N)]
    return qca_to_qubits(spec, pivots, independence_mode=False)


@dataclass(frozen=True)
class StarIsomorphism:
    """Generator table of a Pauli-to-Pauli star-isomorphism.

    ``phase_table[t] = (basis_positions, p)`` records ``domain_gens[t] = i**p *
    prod(domain_gens[basis[q]] for q in basis_positions)``, which fixes the signed
    image of dependent generators.
    """

    domain_gens: tuple[PauliString, ...]
    images: tuple[PauliString, ...]
    phase_table: tuple[tuple[tuple[int, ...], int], ...]
    basis: tuple[int, ...]
    mapping: QubitMapping | None = None

    def apply(self, a: PauliString) -> PauliString:
        """Image of any element of the generated group."""
        basis_gens = [self.domain_gens[b] for b in self.basis]
        combo = gf2.express(a.symplectic_row(), [g.symplectic_row() for g in basis_gens])
        if combo is None:
            raise ValueError(f"{a} is not in the group generated by the domain")
        dom = product((basis_gens[q] for q in combo), n=a.n)
        img_n = self.images[0].n
        img = product((self.images[self.basis[q]] for q in combo), n=img_n)
        return img.times_phase(a.p - dom.p)


def pauli_to_pauli(gens: Sequence[PauliString]) -> StarIsomorphism:
    """Star-isomorphism presenting the algebra of ``gens`` in Wedderburn form.

    A greedy GF(2)-independent subset is split (as a quasi-Clifford algebra with the
    actual squares and commutation relations) and realized in independence mode; the
    remaining inputs are mapped through their exact phase-tracked expansion.
    """
    gens = list(gens)
    if not gens:
        raise ValueError("need at least one generator")
    n = gens[0].n
    for g in gens:
        if g.n != n:
            raise ValueError("generators act on different numbers of qubits")
        if not g.is_hermitian:
            raise ValueError(f"generator {g} is not Hermitian")
    rows = [g.symplectic_row() for g in gens]
    basis = gf2.independent_subset(rows)
    if not basis:
        raise ValueError("generators are all proportional to the identity")
    basis_gens = [gens[b] for b in basis]
    graph = frustration_graph(basis_gens)
    spec = QcaSpec.from_graph(graph, [mul(g, g).square_sign() for g in basis_gens])
    mapping = qca_to_qubits(spec, independence_mode=True, hermitize=False)
    basis_rows = [rows[b] for b in basis]

    images: list[PauliString] = []
    table: list[tuple[tuple[int, ...], int]] = []
    for t, g in enumerate(gens):
        combo = gf2.express(rows[t], basis_rows)
        assert combo is not None
        dom = product((basis_gens[q] for q in combo), n=n)
        phase = g.p - dom.p
        img = product((mapping.images[q] for q in combo), n=mapping.n_qubits)
        images.append(img.times_phase(phase))
        table.append((tuple(combo), phase % 4))
    return StarIsomorphism(tuple(gens), tuple(images), tuple(table), tuple(basis), mapping)

