import numpy as np
import pytest
from hypothesis import strategies as st

from hyperps import build

FIG1 = [[1, 2], [1, 2, 3, 4], [1, 4, 5], [3, 4]]

ACCEPTANCE_LINES: list[str] = []


@pytest.fixture
def fig1():
    return build(FIG1)


def random_hypergraph(rng, max_vertices=12, max_hyperedges=10, max_card=5, weighted=False):
    n_e = int(rng.integers(1, max_hyperedges + 1))
    items = []
    for _ in range(n_e):
        c = int(rng.integers(1, min(max_card, max_vertices) + 1))
        members = rng.choice(max_vertices, size=c, replace=False).tolist()
        if weighted:
            items.append((members, float(rng.uniform(0.5, 2.0))))
        else:
            items.append(members)
    return build(items)


def corpus(n, seed, **kw):
    rng = np.random.default_rng(seed)
    return [random_hypergraph(rng, **kw) for _ in range(n)]


member_lists = st.lists(
    st.lists(st.integers(0, 11), min_size=1, max_size=6, unique=True),
    min_size=1,
    max_size=10,
)


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in ACCEPTANCE_LINES:
            terminalreporter.write_line(line)
