import numpy as np
import pytest
from hypothesis import strategies as st

from qcmap import PauliString, QcaSpec

PENTAGON_EDGES = [(0, 1), (1, 2), (2, 3), (3, 4), (0, 4)]

_ACCEPTANCE: dict[int, tuple[str, list[str]]] = {}

_MATS = {
    "I": np.eye(2, dtype=complex),
    "X": np.array([[0, 1], [1, 0]], dtype=complex),
    "Y": np.array([[0, -1j], [1j, 0]], dtype=complex),
    "Z": np.array([[1, 0], [0, -1]], dtype=complex),
}


def pytest_configure(config):
    config.addinivalue_line("markers", "criterion(num, title): acceptance criterion")


@pytest.hookimpl(hookwrapper=True)
def pytest_runtest_makereport(item, call):
    outcome = yield
    rep = outcome.get_result()
    marker = item.get_closest_marker("criterion")
    if marker is None or rep.when != "call" and not (rep.when == "setup" and rep.failed):
        return
    num, title = marker.args
    _, outcomes = _ACCEPTANCE.setdefault(num, (title, []))
    outcomes.append(rep.outcome)


def pytest_terminal_summary(terminalreporter):
    if not _ACCEPTANCE:
        return
    terminalreporter.section("acceptance criteria")
    for num in sorted(_ACCEPTANCE):
        title, outcomes = _ACCEPTANCE[num]
        verdict = "PASS" if all(o == "passed" for o in outcomes) else "FAIL"
        terminalreporter.write_line(f"criterion {num}: {verdict}  {title}")


def dense(letters: str, phase: int = 0) -> np.ndarray:
    """Kronecker-product oracle for a Pauli string given by its letters."""
    out = np.ones((1, 1), dtype=complex)
    for ch in letters:
        out = np.kron(out, _MATS[ch])
    return (1j**phase) * out


def dense_of(a: PauliString) -> np.ndarray:
    return dense(a.letters, a.p)


def jw_reference(N: int) -> list[str]:
    """Majorana images X_j Y_0...Y_{j-1} and Z_j Y_0...Y_{j-1}, written out letter by letter."""
    out = []
    for j in range(N):
        for last in "XZ":
            out.append("Y" * j + last + "I" * (N - j - 1))
    return out


def faithful_rep(spec: QcaSpec) -> list[np.ndarray]:
    """Independent faithful representation on m qubits.

    x_i = i^{(1-k_i)/2} (prod_{j<i, chi_ij=1} Z_j) X_i: the Z-string makes x_i
    anti-commute with exactly the earlier generators it should.
    """
    m = spec.m
    mats = []
    for i in range(m):
        letters = ["I"] * m
        for j in range(i):
            if spec.chi[i][j]:
                letters[j] = "Z"
        letters[i] = "X"
        mats.append(dense("".join(letters), (1 - spec.k[i]) // 2))
    return mats


@pytest.fixture
def pentagon():
    return QcaSpec.from_edges(5, PENTAGON_EDGES)


@st.composite
def pauli_strings(draw, n=None, max_n=6):
    n = draw(st.integers(1, max_n)) if n is None else n
    x = draw(st.integers(0, 2**n - 1))
    z = draw(st.integers(0, 2**n - 1))
    p = draw(st.integers(0, 3))
    return PauliString(n, p, x, z)


@st.composite
def qca_specs(draw, max_m=10):
    m = draw(st.integers(1, max_m))
    pairs = [(i, j) for i in range(m) for j in range(i + 1, m)]
    mask = draw(st.lists(st.booleans(), min_size=len(pairs), max_size=len(pairs)))
    k = draw(st.lists(st.sampled_from([1, -1]), min_size=m, max_size=m))
    return QcaSpec.from_edges(m, [pq for pq, keep in zip(pairs, mask) if keep], k)


def random_spec(rng: np.random.Generator, max_m: int = 10) -> QcaSpec:
    m = int(rng.integers(1, max_m + 1))
    edges = [(i, j) for i in range(m) for j in range(i + 1, m) if rng.random() < 0.5]
    k = [int(v) for v in rng.choice([1, -1], size=m)]
    return QcaSpec.from_edges(m, edges, k)


def random_hermitian_paulis(rng: np.random.Generator, n: int, count: int) -> list[PauliString]:
    out = []
    for _ in range(count):
        x = int(rng.integers(0, 2**n))
        z = int(rng.integers(0, 2**n))
        out.append(PauliString(n, 2 * int(rng.integers(0, 2)), x, z))
    return out


# Verdicts of the reference split tables, keyed by the (anti-commutes with x_1,
# anti-commutes with x_2) patterns of x_i and x_j. Anything not listed is None.
STAY = "stay"
INVERT = "invert"


def split_table_verdict(pi, pj):
    if pi == (0, 0) or pj == (0, 0) or (pi == (1, 1) and pj == (1, 1)):
        return STAY
    invert_cases = {
        ((0, 1), (1, 1)),
        ((1, 1), (0, 1)),
        ((1, 0), (1, 1)),
        ((1, 1), (1, 0)),
        ((1, 0), (0, 1)),
        ((0, 1), (1, 0)),
    }
    if (pi, pj) in invert_cases:
        return INVERT
    return None
