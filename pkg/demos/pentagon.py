"""Five generators on a cycle, each anti-commuting with its two neighbours.

Run with ``python3 demos/pentagon.py``. The script splits the algebra into two
anti-commuting pairs plus one central element, prints the decomposition, and
realizes it on qubits in both output modes.
"""

from __future__ import annotations

from qcmap import QcaSpec, check_qca_relations, dense_generators, qca_to_qubits, run_splitting

spec = QcaSpec.from_edges(5, [(0, 1), (1, 2), (2, 3), (3, 4), (0, 4)])
print(f"generators: {spec.m}, anti-commuting pairs: {[(u + 1, v + 1) for u, v in spec.edges]}")

dec = run_splitting(spec, [(0, 1), (2, 3)])
print(f"\nsplit into s={dec.s} pair(s) and r={dec.r} central element(s)")
for j, pair in enumerate(dec.pairs, 1):
    print(f"  pair {j}: gamma={pair.gamma}  delta={pair.delta}  squares=({pair.c:+d}, {pair.d:+d})")
for central in dec.centrals:
    print(f"  central: beta={central.beta}  square={central.b:+d}")

# Scalar mode sends the central element to a number; both signs give valid images.
for branch in (+1, -1):
    mapping = qca_to_qubits(spec, [(0, 1), (2, 3)], sign_branch=[branch])
    print(f"\nscalar mode, branch {branch:+d}: {[str(a) for a in mapping.images]}")

# Independence mode spends one more qubit so the images stay linearly independent.
mapping = qca_to_qubits(spec, [(0, 1), (2, 3)], independence_mode=True)
print(f"independence mode:        {[str(a) for a in mapping.images]}")

report = check_qca_relations(mapping.realized_spec(), dense_generators(mapping))
print(f"\nexplicit-matrix check: {'passed' if report.passed else report.violations}"
      f" ({report.checked} relations)")
