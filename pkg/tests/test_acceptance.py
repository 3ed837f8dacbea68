"""Acceptance suite; each test carries a ``criterion`` marker and the summary prints one line per criterion."""

import itertools
import time
from contextlib import contextmanager

import numpy as np
import pytest

from conftest import (
    PENTAGON_EDGES,
    STAY,
    split_table_verdict,
    dense_of,
    jw_reference,
    random_hermitian_paulis,
    random_spec,
)
from qcmap import gf2
from qcmap.mapping import StarIsomorphism, jordan_wigner, pauli_to_pauli, qca_to_qubits
from qcmap.maxacomm import max_anticommuting_set
from qcmap.pauli import commutes, mul, parse_pauli
from qcmap.qca import Monomial, QcaSpec, monomial_chi, run_splitting, split_step
from qcmap.verify import (
    block_structure,
    check_block_certificate,
    check_qca_relations,
    check_star_isomorphism,
    dense_generators,
)

criterion = pytest.mark.criterion


@contextmanager
def within(seconds):
    start = time.perf_counter()
    yield
    elapsed = time.perf_counter() - start
    assert elapsed < seconds, f"took {elapsed:.2f}s, budget {seconds}s"


def unsigned(images):
    """Sign-normalized strings: Hermitian Pauli images carry only a +/- prefix."""
    out = []
    for a in images:
        assert a.p in (0, 2), f"{a} is not Hermitian"
        out.append(a.letters)
    return out


def pentagon():
    return QcaSpec.from_edges(5, PENTAGON_EDGES)


@criterion(1, "pentagon reproduction")
def test_pentagon_reproduction():
    with within(1.0):
        scalar = qca_to_qubits(pentagon(), [(0, 1), (2, 3)], sign_branch=[1])
        indep = qca_to_qubits(pentagon(), [(0, 1), (2, 3)], independence_mode=True)
    assert unsigned(scalar.images) == ["XI", "ZI", "XX", "IZ", "ZY"]
    assert unsigned(indep.images) == ["IXI", "IZI", "IXX", "IIZ", "ZZY"]


@criterion(2, "pentagon central element")
def test_pentagon_central():
    with within(1.0):
        dec = run_splitting(pentagon(), [(0, 1), (2, 3)])
    assert len(dec.centrals) == 1
    central = dec.centrals[0]
    assert central.beta.bits == (1, 1, 1, 1, 1)
    assert central.b == -1


@criterion(3, "Jordan-Wigner images")
def test_jordan_wigner():
    with within(10.0):
        for N in range(1, 7):
            mapping = jordan_wigner(N)
            assert len(mapping.images) == 2 * N
            assert unsigned(mapping.images) == jw_reference(N)
            if N > 5:
                continue
            mats = [dense_of(a) for a in mapping.images]
            eye = np.eye(2**N)
            for i, a in enumerate(mats):
                np.testing.assert_array_equal(a @ a, eye)
                for b in mats[i + 1 :]:
                    np.testing.assert_array_equal(a @ b, -(b @ a))


def phase_free_span(gens):
    """Every group element up to phase, built by brute-force products of generator subsets."""
    n = gens[0].n
    seen = {}
    for mask in range(1 << len(gens)):
        acc = parse_pauli("I" * n)
        for i, g in enumerate(gens):
            if mask >> i & 1:
                acc = mul(acc, g)
        seen.setdefault((acc.x, acc.z), acc)
    return list(seen.values())


def assert_maximal(elems, gens):
    keys = {(e.x, e.z) for e in elems}
    for g in phase_free_span(gens):
        if (g.x, g.z) in keys:
            continue
        assert not all(commutes(g, e) for e in elems), f"{g} extends the set"


@criterion(4, "maximal anti-commuting example")
def test_maxacomm_example():
    gens = [parse_pauli(t) for t in ("XXI", "XIX", "ZZI", "ZIZ")]
    with within(5.0):
        result = max_anticommuting_set(gens)
        assert len(result.elements) == 5
        assert {a.letters for a in result.elements} == {"XXI", "ZIZ", "ZXY", "XYZ", "IYY"}
        assert_maximal(result.elements, gens)


@criterion(5, "odd size over random groups")
def test_odd_size_random_groups():
    rng = np.random.default_rng(20240605)
    with within(60.0):
        for _ in range(200):
            n = int(rng.integers(1, 7))
            gens = random_hermitian_paulis(rng, n, int(rng.integers(1, 7)))
            elems = max_anticommuting_set(gens).elements
            assert len(elems) % 2 == 1
            mats = [dense_of(a) for a in elems]
            for i, a in enumerate(mats):
                for b in mats[i + 1 :]:
                    np.testing.assert_array_equal(a @ b, -(b @ a))
            if n <= 4:
                assert_maximal(elems, gens)


SDP = ["XZI", "ZXI", "XIZ", "ZIX", "IXZ", "IZX"]
REFERENCE_PHI = ["IXI", "IIX", "IIZ", "IZI", "ZXZ", "-ZXZ"]


def matches_up_to_sign_and_relabel(images, table):
    for perm in itertools.permutations(range(table[0].n)):
        relabeled = ["".join(t.letters[q] for q in perm) for t in table]
        if [a.letters for a in images] == relabeled:
            return True
    return False


@criterion(6, "SDP example")
def test_sdp_matches_reference_table():
    # Expected to fail: the reference table does not preserve the commutation
    # relations of S (see the README).
    gens = [parse_pauli(t) for t in SDP]
    phi = [parse_pauli(t) for t in REFERENCE_PHI]
    with within(2.0):
        iso = pauli_to_pauli(gens)
        reference = StarIsomorphism(tuple(gens), tuple(phi), (), ())
        reference_is_star = check_star_isomorphism(reference).passed
    assert iso.images[5] == -iso.images[4], "dependent generator is not minus the image of IXZ"
    assert matches_up_to_sign_and_relabel(iso.images, phi)
    assert reference_is_star


@criterion(6, "SDP example")
def test_sdp_star_isomorphism_and_blocks():
    gens = [parse_pauli(t) for t in SDP]
    with within(2.0):
        iso = pauli_to_pauli(gens)
        report = check_star_isomorphism(iso)
        cert = block_structure(iso.images)
        blocks = check_block_certificate(iso.images, cert)
    assert report.passed
    assert unsigned(iso.images[:4]) == ["IXI", "IIX", "IIZ", "IZI"]
    assert len(cert.diagonal_coords) == 1
    assert (cert.block_count, cert.block_size) == (2, 4)
    assert blocks.passed


@criterion(7, "split-table conformance")
def test_split_table_conformance():
    def gen(i):
        return Monomial(4, 1 << i, 0)

    with within(1.0):
        cases = 0
        for pi, pj, prior in itertools.product(
            itertools.product((0, 1), repeat=2), itertools.product((0, 1), repeat=2), (0, 1)
        ):
            # vertices 0, 1 are the pivot pair; 2 and 3 are the vertices under test
            edges = [(0, 1)]
            edges += [(p, 2) for p, bit in zip((0, 1), pi) if bit]
            edges += [(p, 3) for p, bit in zip((0, 1), pj) if bit]
            if prior:
                edges.append((2, 3))
            spec = QcaSpec.from_edges(4, edges)
            out = split_step(spec, [gen(i) for i in range(4)], (0, 1))
            verdict = split_table_verdict(pi, pj) or STAY
            expected = prior if verdict == STAY else 1 - prior
            assert monomial_chi(spec, out[2], out[3]) == expected, (pi, pj, prior)
            # the bilinear form: the flip is a_i b_j + b_i a_j (mod 2)
            flip = (pi[0] * pj[1] + pi[1] * pj[0]) % 2
            assert expected == prior ^ flip
            cases += 1
    assert cases == 32


@criterion(8, "random-instance soundness")
def test_random_instance_soundness():
    rng = np.random.default_rng(8)
    with within(120.0):
        for _ in range(500):
            spec = random_spec(rng, 10)
            dec = run_splitting(spec)
            assert dec.r + 2 * dec.s == spec.m
            gf2.inverse(dec.T)
            for independent in (False, True):
                mapping = qca_to_qubits(spec, independence_mode=independent)
                real = check_qca_relations(mapping.realized_spec(), dense_generators(mapping))
                assert real.passed, real.to_json()
                raw = dense_generators(mapping, restore_phases=True)
                restored = check_qca_relations(spec, raw)
                assert restored.passed, restored.to_json()
