import sys
from pathlib import Path

import numpy as np
import pytest
from hypothesis import HealthCheck, settings
from hypothesis import strategies as st
from hypothesis.extra.numpy import arrays

sys.path.insert(0, str(Path(__file__).parent))

settings.register_profile(
    "default",
    max_examples=60,
    deadline=None,
    derandomize=True,
    suppress_health_check=[HealthCheck.too_slow],
)
settings.load_profile("default")

ENTRY = st.floats(min_value=-10, max_value=10, allow_nan=False, allow_infinity=False)


@st.composite
def complex_matrices(draw, min_dim=2, max_dim=6, square=True, max_rank=None):
    """Dense complex matrices of controlled rank.

    Rank deficiency comes from a product of thin factors, which keeps the
    nonzero singular values well away from the rank cutoff.
    """
    n = draw(st.integers(min_dim, max_dim))
    m = n if square else draw(st.integers(min_dim, max_dim))
    r = draw(st.integers(0, min(n, m) if max_rank is None else min(n, m, max_rank)))
    seed = draw(st.integers(0, 2**32 - 1))
    rng = np.random.default_rng(seed)
    if r == 0:
        return np.zeros((n, m), complex)
    left = rng.standard_normal((n, r)) + 1j * rng.standard_normal((n, r))
    right = rng.standard_normal((r, m)) + 1j * rng.standard_normal((r, m))
    return left @ right


def real_arrays(n):
    return arrays(np.float64, (n, n), elements=ENTRY)


@pytest.fixture
def rng():
    return np.random.default_rng(20240601)
