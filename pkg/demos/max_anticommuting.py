"""Largest family of mutually anti-commuting elements in a Pauli group.

Run with ``python3 demos/max_anticommuting.py``. The group below has 16 elements
up to phase, all on three qubits. The algorithm returns a set of
odd size 2s + 1 and a brute-force clique search confirms nothing larger exists.
"""

from __future__ import annotations

from qcmap import max_anticommuting_set, parse_pauli
from qcmap.maxacomm import extending_elements, group_elements, largest_anticommuting_size

gens = [parse_pauli(t) for t in ("XXI", "XIX", "ZZI", "ZIZ")]
result = max_anticommuting_set(gens)

print(f"group order (up to phase): {len(group_elements(gens))}")
print(f"anti-commuting set of size {len(result)} (s = {result.s}):")
for a in result.elements:
    print(f"  {a}")
print(f"last element is the product of the others: {result.completion}")

print(f"\nelements that would extend the set: {extending_elements(result.elements, gens)}")
print(f"largest anti-commuting subset by clique search: {largest_anticommuting_size(gens)}")
