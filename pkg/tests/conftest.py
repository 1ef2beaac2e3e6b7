import sys
import numpy as np
import pytest
from hypothesis import settings, strategies as st

settings.register_profile("default", max_examples=200, deadline=None)
settings.load_profile("default")

finite = st.floats(min_value=-10.0, max_value=10.0, allow_nan=False, allow_infinity=False)
times = st.floats(min_value=-5.0, max_value=5.0, allow_nan=False, allow_infinity=False)
angles = st.floats(min_value=-2 * np.pi, max_value=2 * np.pi, allow_nan=False)


@st.composite
def complex_matrices(draw, scale=finite):
    vals = [complex(draw(scale), draw(scale)) for _ in range(4)]
    return np.array(vals, dtype=np.complex128).reshape(2, 2)


@st.composite
def hermitian_matrices(draw, scale=finite):
    a, d, re, im = (draw(scale) for _ in range(4))
    return np.array([[a, re - 1j * im], [re + 1j * im, d]], dtype=np.complex128)


@pytest.fixture
def rng():
    return np.random.default_rng(20261018)


def pytest_terminal_summary(terminalreporter):
    mod = sys.modules.get("test_acceptance")
    if mod is None or not mod.RESULTS:
        return
    terminalreporter.section("acceptance criteria")
    for n in sorted(mod.RESULTS):
        terminalreporter.write_line(mod.RESULTS[n])
