from pathlib import Path

import numpy as np
import pytest
from hypothesis import strategies as st

from bcn_analysis import check_projection_autonomy, projection
from bcn_model import BCN, blocks, simulate, transform
from stp_core import LogicalMatrix, RationalMatrix, mul_transpose

MODELS_DIR = Path(__file__).parent.parent / 'data' / 'models'

# fixed seed so the randomised checks are reproducible
SEED = 20240601


def make_random_bcn(rng: np.random.Generator, n: int, m: int, p: int) -> BCN:
    states = 2 ** n
    L = LogicalMatrix(states, rng.integers(1, states + 1, size=2 ** (m + n)))
    H = LogicalMatrix(2 ** p, rng.integers(1, 2 ** p + 1, size=states))
    return BCN(n=n, m=m, p=p, L=L, H=H)


def assert_decomposition_identities(bcn: BCN, result, sequences: int = 20, length: int = 10) -> None:
    """Algebraic identities of a decomposition, then output agreement along random input runs."""
    Q, s = result.Q, result.s
    scale = 2 ** (bcn.n - s)
    assert projection(bcn.n, s) @ result.T == Q
    assert mul_transpose(Q, Q) == RationalMatrix(scale * np.eye(2 ** s, dtype=np.int64))
    decomposed = result.decomposed
    for Li, G1i in zip(blocks(bcn), decomposed.G1_blocks):
        assert Q @ Li == G1i @ Q
    assert bcn.H == decomposed.M @ Q
    assert check_projection_autonomy(bcn, result.T, s, decomposed.G1_blocks, decomposed.M)

    moved = transform(bcn, result.T)
    assert decomposed.to_bcn().same_dynamics(moved)
    rng = np.random.default_rng(SEED)
    for x0 in range(1, bcn.state_count + 1):
        for _ in range(sequences):
            inputs = rng.integers(1, bcn.input_count + 1, size=length).tolist()
            original = simulate(bcn, x0, inputs)
            image = simulate(moved, result.T.column(x0), inputs)
            assert image.outputs == original.outputs
            retained = [(z - 1) // scale + 1 for z in image.states]
            assert tuple(decomposed.M.column(z) for z in retained) == original.outputs


@st.composite
def logical_matrices(draw, max_rows: int = 6, max_cols: int = 6):
    rows = draw(st.integers(1, max_rows))
    cols = draw(st.integers(1, max_cols))
    delta = draw(st.lists(st.integers(1, rows), min_size=cols, max_size=cols))
    return LogicalMatrix(rows, delta)


@st.composite
def permutations(draw, size: int):
    return LogicalMatrix(size, [v + 1 for v in draw(st.permutations(range(size)))])


@pytest.fixture
def rng() -> np.random.Generator:
    return np.random.default_rng(SEED)


@pytest.fixture
def random_bcn(rng):
    def factory(n: int, m: int = 1, p: int = 1) -> BCN:
        return make_random_bcn(rng, n, m, p)
    return factory


@pytest.fixture
def models_dir() -> Path:
    return MODELS_DIR
