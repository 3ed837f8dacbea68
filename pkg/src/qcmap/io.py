"""JSON encodings of specs, decompositions, mappings and results.

Indices of generators, pivots and coordinates are 1-based in every JSON document;
exponent vectors are bitstrings whose first character is the first generator.
"""

from __future__ import annotations

import json
from typing import Any

import numpy as np

from .mapping import QubitMapping, StarIsomorphism
from .maxacomm import AnticommutingSet
from .pauli import format_pauli, parse_pauli
from .qca import CentralBlock, Monomial, PairBlock, QcaSpec, WedderburnDecomposition
from .verify import BlockCertificate


def dumps(doc: Any) -> str:
    return json.dumps(doc, indent=2) + "\n"


def spec_to_json(spec: QcaSpec) -> dict:
    return {
        "m": spec.m,
        "edges": [[i + 1, j + 1] for i, j in spec.edges],
        "k": list(spec.k),
    }


def spec_from_json(doc: dict) -> QcaSpec:
    try:
        m = int(doc["m"])
        edges = [(int(i) - 1, int(j) - 1) for i, j in doc.get("edges", [])]
        k = doc.get("k")
    except (KeyError, TypeError, ValueError) as exc:
        raise ValueError(f"malformed spec document: {exc}") from exc
    return QcaSpec.from_edges(m, edges, None if k is None else [int(v) for v in k])


def _mono_to_json(mono: Monomial) -> dict:
    return {"e": "".join(map(str, mono.bits)), "p": mono.p}


def _mono_from_json(doc: dict, m: int) -> Monomial:
    bits = doc["e"]
    if len(bits) != m or set(bits) - {"0", "1"}:
        raise ValueError(f"bad exponent bitstring {bits!r}")
    return Monomial.from_bits([int(b) for b in bits], int(doc.get("p", 0)))


def decomposition_to_json(dec: WedderburnDecomposition) -> dict:
    return {
        "spec": spec_to_json(dec.spec),
        "r": dec.r,
        "s": dec.s,
        "pairs": [
            {"gamma": _mono_to_json(p.gamma), "delta": _mono_to_json(p.delta), "c": p.c, "d": p.d}
            for p in dec.pairs
        ],
        "centrals": [{"beta": _mono_to_json(c.beta), "b": c.b} for c in dec.centrals],
        "T": ["".join(str(int(v)) for v in row) for row in dec.T],
        "pivot_log": [[u + 1, v + 1] for u, v in dec.pivot_log],
    }


def decomposition_from_json(doc: dict) -> WedderburnDecomposition:
    try:
        spec = spec_from_json(doc["spec"])
        m = spec.m
        pairs = tuple(
            PairBlock(
                _mono_from_json(p["gamma"], m),
                _mono_from_json(p["delta"], m),
                int(p["c"]),
                int(p["d"]),
            )
            for p in doc["pairs"]
        )
        centrals = tuple(
            CentralBlock(_mono_from_json(c["beta"], m), int(c["b"])) for c in doc["centrals"]
        )
        T = np.array([[int(ch) for ch in row] for row in doc["T"]], dtype=np.uint8).reshape(m, m)
        log = tuple((int(u) - 1, int(v) - 1) for u, v in doc["pivot_log"])
    except (KeyError, TypeError) as exc:
        raise ValueError(f"malformed decomposition document: {exc}") from exc
    return WedderburnDecomposition(spec, pairs, centrals, T, log)


def mapping_to_json(mapping: QubitMapping) -> dict:
    return {
        "mode": "independent" if mapping.independence_mode else "scalar",
        "qubits": mapping.n_qubits,
        "centrals": mapping.r,
        "images": [format_pauli(a) for a in mapping.images],
        "pivots": [[u + 1, v + 1] for u, v in mapping.pivots],
        "sign_branch": list(mapping.sign_branch),
        "hermitized": [i + 1 for i in mapping.hermitized],
        "spec": spec_to_json(mapping.spec),
    }


def star_to_json(iso: StarIsomorphism) -> dict:
    return {
        "domain": [format_pauli(a) for a in iso.domain_gens],
        "images": [format_pauli(a) for a in iso.images],
        "basis": [b + 1 for b in iso.basis],
        "phase_table": [
            {"basis_factors": [iso.basis[q] + 1 for q in combo], "p": p}
            for combo, p in iso.phase_table
        ],
    }


def star_from_json(doc: dict) -> StarIsomorphism:
    try:
        domain = tuple(parse_pauli(t) for t in doc["domain"])
        images = tuple(parse_pauli(t) for t in doc["images"])
    except (KeyError, TypeError) as exc:
        raise ValueError(f"malformed star-isomorphism document: {exc}") from exc
    basis = tuple(int(b) - 1 for b in doc.get("basis", []))
    table = tuple(
        (tuple(basis.index(int(f) - 1) for f in row["basis_factors"]), int(row["p"]))
        for row in doc.get("phase_table", [])
    )
    return StarIsomorphism(domain, images, table, basis)


def anticommuting_to_json(result: AnticommutingSet) -> dict:
    return {
        "set": [format_pauli(a) for a in result.elements],
        "s": result.s,
        "completion": format_pauli(result.completion),
        "generators": [format_pauli(a) for a in result.source_group_gens],
    }


def certificate_to_json(cert: BlockCertificate, images) -> dict:
    return {
        "diagonal_coords": [q + 1 for q in cert.diagonal_coords],
        "block_count": cert.block_count,
        "block_size": cert.block_size,
        "images": [format_pauli(a) for a in images],
    }
