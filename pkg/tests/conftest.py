import sys
from pathlib import Path

import pytest
from hypothesis import strategies as st

sys.path.insert(0, str(Path(__file__).parent))

from braidalex.laurent import LaurentPoly, PolyMatrix  # noqa: E402

VARS = (0, 1, 2, 3)

exponent_maps = st.dictionaries(st.sampled_from(VARS), st.integers(-5, 5), max_size=4)
polys = st.lists(
    st.tuples(exponent_maps, st.integers(-9, 9)), max_size=8
).map(LaurentPoly.from_terms)
nonzero_polys = polys.filter(bool)
small_polys = st.lists(
    st.tuples(st.dictionaries(st.sampled_from(VARS), st.integers(-2, 2), max_size=2), st.integers(-3, 3)),
    max_size=3,
).map(LaurentPoly.from_terms)


def matrices(n, elements=polys):
    return st.lists(elements, min_size=n * n, max_size=n * n).map(lambda es: PolyMatrix(n, n, es))


ACCEPTANCE_LINES = []


@pytest.fixture
def acceptance_log():
    return ACCEPTANCE_LINES


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in ACCEPTANCE_LINES:
            terminalreporter.write_line(line)
