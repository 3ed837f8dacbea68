"""Explicit-matrix oracle and certificates.

Matrices are built independently of the symplectic arithmetic in :mod:`qcmap.pauli`:
each Pauli letter is a 2x2 Gaussian-integer matrix and strings are Kronecker products.
Everything is integer arithmetic (real and imaginary parts kept as separate sparse
``int64`` matrices), so all checks are exact.
"""

from __future__ import annotations

import os
import random
from dataclasses import dataclass, field
from itertools import product as iproduct
from typing import Iterable, Sequence

import numpy as np
import scipy.sparse as sp

from .mapping import QubitMapping, StarIsomorphism
from .pauli import PauliString, mul
from .qca import QcaSpec

__all__ = [
    "MAX_RELATION_QUBITS",
    "MAX_CERTIFICATE_QUBITS",
    "GaussianMatrix",
    "DenseRep",
    "Violation",
    "Report",
    "BlockCertificate",
    "pauli_matrix",
    "dense_generators",
    "dense_from_paulis",
    "check_qca_relations",
    "check_star_isomorphism",
    "block_structure",
    "check_block_certificate",
    "hamiltonian_terms",
]

MAX_RELATION_QUBITS = 12
MAX_CERTIFICATE_QUBITS = 6


@dataclass(frozen=True)
class GaussianMatrix:
    """Square matrix with Gaussian-integer entries ``re + i*im``."""

    re: sp.csr_matrix
    im: sp.csr_matrix

    @classmethod
    def from_dense(cls, re, im=None) -> "GaussianMatrix":
        re = np.asarray(re, dtype=np.int64)
        im = np.zeros_like(re) if im is None else np.asarray(im, dtype=np.int64)
        return cls(sp.csr_matrix(re), sp.csr_matrix(im))

    @classmethod
    def identity(cls, dim: int) -> "GaussianMatrix":
        return cls(sp.identity(dim, dtype=np.int64, format="csr"), sp.csr_matrix((dim, dim), dtype=np.int64))

    @property
    def dim(self) -> int:
        return self.re.shape[0]

    def __matmul__(self, other: "GaussianMatrix") -> "GaussianMatrix":
        return GaussianMatrix(
            (self.re @ other.re - self.im @ other.im).tocsr(),
            (self.re @ other.im + self.im @ other.re).tocsr(),
        )

    def kron(self, other: "GaussianMatrix") -> "GaussianMatrix":
        return GaussianMatrix(
            (sp.kron(self.re, other.re) - sp.kron(self.im, other.im)).tocsr(),
            (sp.kron(self.re, other.im) + sp.kron(self.im, other.re)).tocsr(),
        )

    def __add__(self, other: "GaussianMatrix") -> "GaussianMatrix":
        return GaussianMatrix((self.re + other.re).tocsr(), (self.im + other.im).tocsr())

    def scale(self, re: int, im: int = 0) -> "GaussianMatrix":
        """Multiply by the Gaussian integer ``re + i*im``."""
        return GaussianMatrix(
            (self.re * re - self.im * im).tocsr(), (self.re * im + self.im * re).tocsr()
        )

    def times_i_power(self, p: int) -> "GaussianMatrix":
        return self.scale(*[(1, 0), (0, 1), (-1, 0), (0, -1)][p % 4])

    def conj_transpose(self) -> "GaussianMatrix":
        return GaussianMatrix(self.re.T.tocsr(), (-self.im.T).tocsr())

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, GaussianMatrix) or self.re.shape != other.re.shape:
            return NotImplemented
        return (self.re != other.re).nnz == 0 and (self.im != other.im).nnz == 0

    __hash__ = None  # type: ignore[assignment]

    def to_dense(self) -> np.ndarray:
        return self.re.toarray() + 1j * self.im.toarray()

    def int_parts(self) -> tuple[np.ndarray, np.ndarray]:
        return self.re.toarray(), self.im.toarray()


_LETTERS = {
    "I": GaussianMatrix.from_dense([[1, 0], [0, 1]]),
    "X": GaussianMatrix.from_dense([[0, 1], [1, 0]]),
    "Y": GaussianMatrix.from_dense([[0, 0], [0, 0]], [[0, -1], [1, 0]]),
    "Z": GaussianMatrix.from_dense([[1, 0], [0, -1]]),
}


def pauli_matrix(a: PauliString) -> GaussianMatrix:
    """Explicit matrix of ``a`` as a Kronecker product, leftmost letter outermost."""
    out = GaussianMatrix.identity(1)
    for ch in a.letters:
        out = out.kron(_LETTERS[ch])
    return out.times_i_power(a.p)


@dataclass(frozen=True)
class DenseRep:
    dim: int
    mats: tuple[GaussianMatrix, ...]


def dense_from_paulis(images: Sequence[PauliString], max_qubits: int = MAX_RELATION_QUBITS) -> DenseRep:
    if not images:
        raise ValueError("no images")
    n = images[0].n
    if any(a.n != n for a in images):
        raise ValueError("images act on different numbers of qubits")
    if n > max_qubits:
        raise ValueError(f"{n} qubits exceeds the oracle cap of {max_qubits}")
    return DenseRep(2**n, tuple(pauli_matrix(a) for a in images))


def dense_generators(mapping: QubitMapping, restore_phases: bool = False) -> DenseRep:
    """Matrices of the mapping's images.

    With ``restore_phases`` the Hermitization factor ``i`` is divided out again, so the
    matrices satisfy the original relations rather than the realized ones.
    """
    images = mapping.raw_images() if restore_phases else list(mapping.images)
    return dense_from_paulis(images)


@dataclass(frozen=True)
class Violation:
    kind: str
    indices: tuple[int, ...]

    def to_json(self) -> dict:
        return {"kind": self.kind, "indices": list(self.indices)}


@dataclass
class Report:
    violations: list[Violation] = field(default_factory=list)
    checked: int = 0

    @property
    def passed(self) -> bool:
        return not self.violations

    def add(self, kind: str, indices: Iterable[int]) -> None:
        self.violations.append(Violation(kind, tuple(indices)))

    def to_json(self) -> dict:
        return {"passed": self.passed, "violations": [v.to_json() for v in self.violations]}


def check_qca_relations(spec: QcaSpec, rep: DenseRep) -> Report:
    """Check ``M_i**2 = k_i`` and ``M_i M_j = (-1)**chi_ij M_j M_i`` exactly."""
    if len(rep.mats) != spec.m:
        raise ValueError(f"{len(rep.mats)} matrices for {spec.m} generators")
    report = Report()
    eye = GaussianMatrix.identity(rep.dim)
    mats = rep.mats
    for i in range(spec.m):
        report.checked += 1
        if mats[i] @ mats[i] != eye.scale(spec.k[i]):
            report.add("square", (i,))
    for i in range(spec.m):
        for j in range(i + 1, spec.m):
            report.checked += 1
            sign = -1 if spec.chi[i][j] else 1
            if mats[i] @ mats[j] != (mats[j] @ mats[i]).scale(sign):
                report.add("commutation", (i, j))
    return report


def _seed(seed: int | None) -> int:
    if seed is not None:
        return seed
    env = os.environ.get("QCMAP_SEED")
    return int(env) if env is not None else 0


def _words(num_gens: int, cap: int, samples: int, seed: int | None) -> Iterable[tuple[int, ...]]:
    if num_gens <= 4:
        for length in range(cap + 1):
            yield from iproduct(range(num_gens), repeat=length)
        return
    for length in range(min(cap, 2) + 1):
        yield from iproduct(range(num_gens), repeat=length)
    rng = random.Random(_seed(seed))
    for _ in range(samples):
        length = rng.randint(1, cap)
        yield tuple(rng.randrange(num_gens) for _ in range(length))


def check_star_isomorphism(
    iso: StarIsomorphism,
    word_length_cap: int = 6,
    samples: int = 4000,
    seed: int | None = None,
) -> Report:
    """Check that the generator table extends to a dagger-preserving isomorphism.

    Words over the domain generators are grouped by the phase-free element they
    evaluate to. Within a group, the domain products differ by scalars, and the image
    products must differ by exactly the same scalars. The empty word pins the identity
    class, so relations like squares and dependencies are checked with exact phases.
    Injectivity is checked by requiring distinct domain classes to have distinct images.
    Words are exhaustive for up to four generators and sampled otherwise (seeded by
    ``seed`` or the ``QCMAP_SEED`` environment variable).
    """
    dom, img = iso.domain_gens, iso.images
    if len(dom) != len(img):
        raise ValueError("domain and image lists differ in length")
    report = Report()
    if not dom:
        return report
    dn, rn = dom[0].n, img[0].n
    seen: dict[tuple[int, int], tuple[PauliString, PauliString]] = {}
    image_classes: dict[tuple[int, int], tuple[int, int]] = {}
    bad: set[tuple[str, tuple[int, ...]]] = set()
    for word in _words(len(dom), word_length_cap, samples, seed):
        d = PauliString(dn, 0, 0, 0)
        r = PauliString(rn, 0, 0, 0)
        for w in word:
            d = mul(d, dom[w])
            r = mul(r, img[w])
        report.checked += 1
        if (d.p - r.p) % 2:
            bad.add(("dagger", word))
        key = d.symplectic()
        if key not in seen:
            seen[key] = (d, r)
            other = image_classes.setdefault(r.symplectic(), key)
            if other != key:
                bad.add(("star", word))
            continue
        d0, r0 = seen[key]
        if not r.equal_up_to_phase(r0) or (r.p - r0.p - d.p + d0.p) % 4:
            bad.add(("star", word))
    for kind, word in sorted(bad, key=lambda kv: (len(kv[1]), kv)):
        report.add(kind, word)
    return report


@dataclass(frozen=True)
class BlockCertificate:
    """Coordinates (0-based) on which every image acts by ``I`` or ``Z``."""

    n: int
    diagonal_coords: tuple[int, ...]

    @property
    def block_count(self) -> int:
        return 2 ** len(self.diagonal_coords)

    @property
    def block_size(self) -> int:
        return 2 ** (self.n - len(self.diagonal_coords))


def block_structure(images: Sequence[PauliString]) -> BlockCertificate:
    if not images:
        raise ValueError("no images")
    n = images[0].n
    if any(a.n != n for a in images):
        raise ValueError("images act on different numbers of qubits")
    xs = 0
    for a in images:
        xs |= a.x
    return BlockCertificate(n, tuple(q for q in range(n) if not xs >> q & 1))


def _front_permutation(n: int, coords: Sequence[int]) -> list[int]:
    rest = [q for q in range(n) if q not in coords]
    return list(coords) + rest


def check_block_certificate(
    images: Sequence[PauliString],
    cert: BlockCertificate,
    trials: int = 3,
    seed: int | None = None,
) -> Report:
    """Verify the certificate on explicit matrices.

    Random integer combinations of the images and of their pairwise products are
    permuted so that the certified coordinates become the leading tensor factors; the
    result must vanish outside ``block_count`` diagonal blocks of size ``block_size``.
    """
    n = cert.n
    if n > MAX_CERTIFICATE_QUBITS:
        raise ValueError(f"{n} qubits exceeds the certificate cap of {MAX_CERTIFICATE_QUBITS}")
    report = Report()
    for t, a in enumerate(images):
        for q in cert.diagonal_coords:
            if a.x >> q & 1:
                report.add("block", (t, q))
    if not report.passed:
        return report

    terms = list(images) + [mul(a, b) for a in images for b in images]
    mats = [pauli_matrix(a) for a in terms]
    perm = _front_permutation(n, cert.diagonal_coords)
    dim, size = 2**n, cert.block_size
    block_id = np.arange(dim) // size
    outside = block_id[:, None] != block_id[None, :]
    rng = np.random.default_rng(_seed(seed))
    for trial in range(trials):
        acc = GaussianMatrix.from_dense(np.zeros((dim, dim)))
        for mat in mats:
            acc = acc + mat.scale(int(rng.integers(-5, 6)), int(rng.integers(-5, 6)))
        parts = []
        for part in acc.int_parts():
            t = part.reshape([2] * (2 * n))
            t = t.transpose(perm + [n + q for q in perm])
            parts.append(t.reshape(dim, dim))
        report.checked += 1
        if any(np.any(part[outside]) for part in parts):
            report.add("block", (trial,))
    return report


def hamiltonian_terms(
    edges: Iterable[tuple[int, int]], n: int, with_weights: bool = False
):
    """Pauli terms ``X_i Z_j`` and ``Z_i X_j`` for each edge of the graph.

    Every term carries weight ``-1`` in the Hamiltonian; ``with_weights=True`` returns
    ``(weight, term)`` pairs instead of bare strings.
    """
    out = []
    for i, j in edges:
        if not (0 <= i < n and 0 <= j < n) or i == j:
            raise ValueError(f"edge ({i}, {j}) is invalid for {n} vertices")
        for li, lj in (("X", "Z"), ("Z", "X")):
            letters = ["I"] * n
            letters[i], letters[j] = li, lj
            out.append(PauliString.from_letters("".join(letters)))
    if with_weights:
        return [(-1, t) for t in out]
    return out
