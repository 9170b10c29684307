import itertools

import pytest
from hypothesis import strategies as st

from berge_k3t.hypergraph import build_linear


def greedy_linear(n, r, candidates):
    covered, edges = set(), []
    for e in candidates:
        e = tuple(sorted(set(e)))
        if len(e) != r:
            continue
        pairs = set(itertools.combinations(e, 2))
        if pairs & covered:
            continue
        covered |= pairs
        edges.append(e)
    return build_linear(n, r, edges)


@st.composite
def linear_hypergraphs(draw, r_values=(2, 3, 4), max_n=11, min_edges=0):
    r = draw(st.sampled_from(r_values))
    n = draw(st.integers(min_value=r, max_value=max_n))
    cands = draw(
        st.lists(
            st.lists(st.integers(0, n - 1), min_size=r, max_size=r, unique=True),
            min_size=min_edges,
            max_size=3 * n,
        )
    )
    return greedy_linear(n, r, cands)


@pytest.fixture
def star_pair():
    """Two 3-edges meeting at vertex 0."""
    return build_linear(5, 3, [(0, 1, 2), (0, 3, 4)])


@pytest.fixture
def three_edges():
    return build_linear(6, 3, [(0, 1, 2), (0, 3, 4), (1, 3, 5)])


def pytest_terminal_summary(terminalreporter):
    import sys

    mod = sys.modules.get("tests.test_acceptance")
    if mod is None or not mod.RESULTS:
        return
    terminalreporter.section("acceptance criteria")
    for num in sorted(mod.RESULTS):
        terminalreporter.write_line(mod.RESULTS[num])
