from fractions import Fraction

import sys

import pytest
from hypothesis import HealthCheck, settings
from hypothesis import strategies as st

from wcore.inverses import Weight
from wcore.linalg import Matrix, inverse, is_invertible

settings.register_profile("default", max_examples=40, deadline=None, suppress_health_check=[HealthCheck.too_slow])
settings.load_profile("default")


def M(*rows):
    return Matrix.from_rows(rows)


small_ints = st.integers(min_value=-4, max_value=4)
rationals = st.fractions(min_value=-5, max_value=5, max_denominator=4)


@st.composite
def matrices(draw, rows=None, cols=None, elements=small_ints, max_dim=4):
    r = rows or draw(st.integers(1, max_dim))
    c = cols or draw(st.integers(1, max_dim))
    return Matrix(r, c, draw(st.lists(elements, min_size=r * c, max_size=r * c)))


@st.composite
def square(draw, k=None, max_dim=4, elements=small_ints):
    k = k or draw(st.integers(1, max_dim))
    return draw(matrices(k, k, elements))


@st.composite
def pd_weights(draw, k):
    p = draw(matrices(k, k, st.integers(-2, 2)))
    return Weight(p.T @ p + Matrix.identity(k))


@st.composite
def invertibles(draw, k):
    s = draw(matrices(k, k, st.integers(-2, 2)))
    if not is_invertible(s):
        s = s + Matrix.identity(k) * 7
    if not is_invertible(s):
        s = Matrix.identity(k)
    return s


@st.composite
def index_one(draw, max_dim=4):
    """``S diag(C, 0) S^-1`` with ``C`` invertible: index at most one by construction."""
    k = draw(st.integers(1, max_dim))
    r = draw(st.integers(0, k))
    s = draw(invertibles(k))
    c = draw(invertibles(r)) if r else None
    core = Matrix.zeros(k)
    if c is not None:
        rows = [[c[i, j] if i < r and j < r else 0 for j in range(k)] for i in range(k)]
        core = Matrix.from_rows(rows)
    return s @ core @ inverse(s)


@st.composite
def core_instances(draw, max_dim=4):
    a = draw(index_one(max_dim))
    return a, draw(pd_weights(a.rows))


@pytest.fixture
def rank_one_pair():
    """Rank-one ``a`` with a non-diagonal positive definite weight."""
    return M([1, 0], [-1, 0]), Weight(M([2, 1], [1, 2]))


half = Fraction(1, 2)


def pytest_terminal_summary(terminalreporter):
    mod = sys.modules.get("tests.test_acceptance")
    if mod is not None and mod.LINES:
        terminalreporter.section("acceptance criteria")
        for line in mod.LINES:
            terminalreporter.write_line(line)
