"""Realize prescribed (anti-)commutation structures with Pauli strings.

The splitting algorithm brings a special quasi-Clifford algebra into Wedderburn form
(central elements plus anti-commuting pairs); each pair becomes a qubit.
"""

from .mapping import (
    QubitMapping,
    StarIsomorphism,
    assign_irreps,
    invert_relations,
    jordan_wigner,
    mapping_from_decomposition,
    pauli_to_pauli,
    qca_to_qubits,
)
from .maxacomm import AnticommutingSet, completion_monomial, max_anticommuting_set
from .pauli import (
    FrustrationGraph,
    PauliString,
    commutes,
    format_pauli,
    frustration_graph,
    mul,
    parse_pauli,
    product,
)
from .qca import (
    Monomial,
    QcaSpec,
    WedderburnDecomposition,
    monomial_chi,
    monomial_mul,
    monomial_square_sign,
    run_splitting,
    split_step,
    validate_spec,
)
from .verify import (
    BlockCertificate,
    DenseRep,
    block_structure,
    check_block_certificate,
    check_qca_relations,
    check_star_isomorphism,
    dense_generators,
    hamiltonian_terms,
)

__all__ = [
    "AnticommutingSet",
    "assign_irreps",
    "block_structure",
    "BlockCertificate",
    "check_block_certificate",
    "check_qca_relations",
    "check_star_isomorphism",
    "commutes",
    "completion_monomial",
    "dense_generators",
    "DenseRep",
    "format_pauli",
    "frustration_graph",
    "FrustrationGraph",
    "hamiltonian_terms",
    "invert_relations",
    "jordan_wigner",
    "mapping_from_decomposition",
    "max_anticommuting_set",
    "Monomial",
    "monomial_chi",
    "monomial_mul",
    "monomial_square_sign",
    "mul",
    "parse_pauli",
    "pauli_to_pauli",
    "PauliString",
    "product",
    "qca_to_qubits",
    "QcaSpec",
    "QubitMapping",
    "run_splitting",
    "split_step",
    "StarIsomorphism",
    "validate_spec",
    "WedderburnDecomposition",
]

__version__ = "0.1.0"
