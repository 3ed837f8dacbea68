"""Maximal pairwise anti-commuting subsets of Pauli groups."""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations
from typing import Sequence

import networkx as nx

from . import gf2
from .pauli import PauliString, commutes, frustration_graph, product
from .qca import Monomial, QcaSpec, run_splitting

__all__ = [
    "AnticommutingSet",
    "completion_monomial",
    "max_anticommuting_set",
    "group_elements",
    "extending_elements",
    "largest_anticommuting_size",
]


@dataclass(frozen=True)
class AnticommutingSet:
    elements: tuple[PauliString, ...]
    source_group_gens: tuple[PauliString, ...]
    s: int
    completion: PauliString

    def __len__(self) -> int:
        return len(self.elements)


def _check_anticommuting(elems: Sequence[PauliString]) -> None:
    for a, b in combinations(elems, 2):
        if not commutes(a, b):
            raise ValueError(f"{a} and {b} commute")


def completion_monomial(elems: Sequence[PauliString]) -> PauliString:
    """The (Hermitized) ordered product of an even anti-commuting set.

    It anti-commutes with every element of ``elems``. Odd sets cannot be extended
    inside the group they generate, so they are rejected.
    """
    if not elems:
        raise ValueError("empty anti-commuting set")
    if len(elems) % 2:
        raise ValueError("odd anti-commuting sets admit no completion")
    _check_anticommuting(elems)
    return product(elems).hermitized()


def _check_gens(gens: Sequence[PauliString]) -> int:
    if not gens:
        raise ValueError("need at least one generator")
    n = gens[0].n
    for g in gens:
        if g.n != n:
            raise ValueError("generators act on different numbers of qubits")
        if not g.is_hermitian:
            raise ValueError(f"generator {g} is not Hermitian")
    return n


def _realize(mono: Monomial, basis: Sequence[PauliString], n: int) -> PauliString:
    return product((basis[i] for i in mono.support), n=n).times_phase(mono.p)


def max_anticommuting_set(gens: Sequence[PauliString]) -> AnticommutingSet:
    """A maximal anti-commuting subset of the group generated by ``gens``.

    The group is split into ``s`` anti-commuting pairs plus central elements; the pairs
    are then recombined with prefix products (the inverse Jordan-Wigner pattern) into
    ``2s`` mutually anti-commuting elements, and their product completes the set to
    size ``2s + 1``. With ``s = 0`` the first generator is returned on its own.
    """
    n = _check_gens(gens)
    gens = tuple(gens)
    rows = [g.symplectic_row() for g in gens]
    basis = [gens[i] for i in gf2.independent_subset(rows)]
    if not basis:
        return AnticommutingSet((gens[0],), gens, 0, gens[0])
    spec = QcaSpec.from_graph(
        frustration_graph(basis), [g.square_sign() for g in basis]
    )
    dec = run_splitting(spec)
    if dec.s == 0:
        return AnticommutingSet((gens[0],), gens, 0, gens[0])

    z: list[PauliString] = []
    for pair in dec.pairs:
        z.append(_realize(pair.gamma, basis, n).hermitized())
        z.append(_realize(pair.delta, basis, n).hermitized())

    elems: list[PauliString] = []
    for i in range(1, len(z) + 1):
        if i <= 2:
            elem = z[i - 1]
        elif i % 2:
            elem = product(z[:i])
        else:
            elem = product(z[: i - 2] + [z[i - 1]])
        elems.append(elem.hermitized())
    completion = completion_monomial(elems)
    return AnticommutingSet(tuple(elems) + (completion,), gens, dec.s, completion)


def group_elements(gens: Sequence[PauliString]) -> list[PauliString]:
    """All elements of the generated group up to phase (as phase-free strings)."""
    n = _check_gens(gens)
    rows = [g.symplectic_row() for g in gens]
    basis = [rows[i] for i in gf2.independent_subset(rows)]
    span = {0}
    for b in basis:
        span |= {v ^ b for v in span}
    mask = (1 << n) - 1
    return [PauliString(n, 0, v & mask, v >> n) for v in sorted(span)]


def extending_elements(
    elems: Sequence[PauliString], gens: Sequence[PauliString]
) -> list[PauliString]:
    """Group elements (up to phase) that anti-commute with every member of ``elems``."""
    return [g for g in group_elements(gens) if all(commutes(g, a) for a in elems)]


def largest_anticommuting_size(gens: Sequence[PauliString]) -> int:
    """Brute-force size of the largest anti-commuting subset of the group (small groups only)."""
    elems = [g for g in group_elements(gens) if not g.is_identity_up_to_phase]
    if not elems:
        return 1
    graph = nx.Graph()
    graph.add_nodes_from(range(len(elems)))
    for i, j in combinations(range(len(elems)), 2):
        if commutes(elems[i], elems[j]):
            graph.add_edge(i, j)
    clique, _ = nx.max_weight_clique(graph, weight=None)
    return len(clique)
