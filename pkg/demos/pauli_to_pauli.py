"""Compress a set of Pauli strings onto fewer qubits with a star-isomorphism.

Run with ``python3 demos/pauli_to_pauli.py``. Two groups are remapped: a four-term
example on three qubits that fits on two, and the six edge terms of a triangle.
"""

from __future__ import annotations

from qcmap import check_star_isomorphism, parse_pauli, pauli_to_pauli


def show(texts):
    gens = [parse_pauli(t) for t in texts]
    iso = pauli_to_pauli(gens)
    print(f"{gens[0].n} qubits -> {iso.images[0].n} qubits")
    for g, img in zip(gens, iso.images):
        print(f"  {str(g):>6s} -> {img}")
    for t, (combo, p) in enumerate(iso.phase_table):
        if t not in iso.basis:
            factors = " ".join(str(gens[iso.basis[q]]) for q in combo)
            print(f"  dependent: {gens[t]} = i^{p} * {factors}")
    report = check_star_isomorphism(iso)
    print(f"  star-isomorphism check: {'passed' if report.passed else report.violations}\n")


show(["XXI", "XIX", "ZZI", "ZIZ"])
show(["XZI", "ZXI", "XIZ", "ZIX", "IXZ", "IZX"])
