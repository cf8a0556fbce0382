import random
from fractions import Fraction

import pytest
from hypothesis import strategies as st

from loopcell.exactalg import Laurent, LaurentMatrix

small_fractions = st.fractions(min_value=-5, max_value=5, max_denominator=4)

laurents = st.builds(
    lambda cs, v: Laurent(cs, v),
    st.lists(small_fractions, max_size=4),
    st.integers(min_value=-3, max_value=3),
)

nonzero_laurents = laurents.filter(lambda x: not x.is_zero())


def laurent_matrices(n: int):
    return st.lists(laurents, min_size=n * n, max_size=n * n).map(
        lambda xs: LaurentMatrix([xs[i * n:(i + 1) * n] for i in range(n)]))


def random_iwahori(n: int, rng: random.Random, spread: int = 2) -> LaurentMatrix:
    """Upper triangular at t = 0 with unit diagonal constants and det 1 when possible."""
    rows = []
    for i in range(n):
        row = []
        for j in range(n):
            lo = 0 if j >= i else 1
            cs = [Fraction(rng.randint(-2, 2)) for _ in range(spread)]
            x = Laurent(cs, lo)
            if i == j:
                x = Laurent((1,)) + Laurent.t(1) * x
            row.append(x)
        rows.append(row)
    return LaurentMatrix(rows)


@pytest.fixture
def rng():
    return random.Random(12345)


def pytest_terminal_summary(terminalreporter):
    from test_acceptance import RESULTS
    if RESULTS:
        terminalreporter.section("acceptance criteria")
        for line in RESULTS:
            terminalreporter.write_line(line)
