from itertools import combinations

import numpy as np
import pytest

from conftest import random_hermitian_paulis
from qcmap import gf2
from qcmap.maxacomm import (
    completion_monomial,
    extending_elements,
    group_elements,
    largest_anticommuting_size,
    max_anticommuting_set,
)
from qcmap.pauli import commutes, mul, parse_pauli

TWO_PAIR_GROUP = ["XXI", "XIX", "ZZI", "ZIZ"]


def ps(*texts):
    return [parse_pauli(t) for t in texts]


class TestCompletion:
    def test_single_qubit(self):
        out = completion_monomial(ps("X", "Z"))
        assert out.letters == "Y" and out.is_hermitian

    def test_three_qubit_example(self):
        out = completion_monomial(ps("XXI", "ZIZ", "ZXY", "XYZ"))
        assert out.letters == "IYY"

    def test_jw_two_modes(self):
        elems = ps("XI", "ZI", "YX", "YZ")
        out = completion_monomial(elems)
        # oracle: multiply the four strings by hand and check each commutator
        manual = mul(mul(mul(elems[0], elems[1]), elems[2]), elems[3])
        assert out.equal_up_to_phase(manual)
        assert out.letters == "YY"
        assert all(commutes(out, e) for e in elems)

    def test_odd_rejected(self):
        with pytest.raises(ValueError):
            completion_monomial(ps("X", "Z", "Y"))

    def test_empty_rejected(self):
        with pytest.raises(ValueError):
            completion_monomial([])

    def test_commuting_rejected(self):
        with pytest.raises(ValueError):
            completion_monomial(ps("XI", "IX"))


class TestMaxAnticommuting:
    def test_three_qubit_example(self):
        result = max_anticommuting_set(ps(*TWO_PAIR_GROUP))
        assert [a.letters for a in result.elements] == ["XXI", "ZIZ", "ZXY", "XYZ", "IYY"]
        assert result.s == 2

    def test_commuting_group(self):
        result = max_anticommuting_set(ps("ZI", "IZ"))
        assert len(result) == 1 and result.s == 0
        assert result.elements[0] == parse_pauli("ZI")

    def test_full_two_qubit_group(self):
        gens = ps("XI", "ZI", "IX", "IZ")
        result = max_anticommuting_set(gens)
        assert len(result) == 5
        # exhaustive oracle over the 16 phase-free elements: no 6-element anti-commuting set
        elems = group_elements(gens)
        assert len(elems) == 16
        non_id = [e for e in elems if not e.is_identity_up_to_phase]
        for combo in combinations(non_id, 6):
            assert not all(commutes(a, b) for a, b in combinations(combo, 2))
        assert largest_anticommuting_size(gens) == 5

    def test_rejects_non_hermitian(self):
        with pytest.raises(ValueError):
            max_anticommuting_set(ps("iX"))

    def test_rejects_empty(self):
        with pytest.raises(ValueError):
            max_anticommuting_set([])

    def test_identity_only(self):
        result = max_anticommuting_set(ps("II"))
        assert len(result) == 1

    @pytest.mark.parametrize("seed", range(40))
    def test_random_groups(self, seed):
        rng = np.random.default_rng(seed)
        n = int(rng.integers(1, 4))
        gens = random_hermitian_paulis(rng, n, int(rng.integers(1, 6)))
        result = max_anticommuting_set(gens)
        elems = result.elements
        assert len(elems) % 2 == 1
        assert len(elems) == 2 * result.s + 1
        for a, b in combinations(elems, 2):
            assert commutes(a, b)
        rows = [g.symplectic_row() for g in gens]
        for e in elems:
            assert e.is_hermitian
            assert gf2.in_span(e.symplectic_row(), rows)
        assert extending_elements(elems, gens) == []
        assert largest_anticommuting_size(gens) == len(elems)
