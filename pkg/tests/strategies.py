"""Hypothesis strategies for random graphs."""

from itertools import combinations

from hypothesis import strategies as st

from shadowplanar.graph import Graph


@st.composite
def graphs(draw, min_n=1, max_n=9):
    n = draw(st.integers(min_n, max_n))
    pairs = list(combinations(range(n), 2))
    chosen = draw(st.lists(st.sampled_from(pairs), unique=True)) if pairs else []
    return Graph(n, chosen)


@st.composite
def connected_graphs(draw, min_n=1, max_n=9):
    n = draw(st.integers(min_n, max_n))
    tree = [(draw(st.integers(0, i - 1)), i) for i in range(1, n)]
    pairs = list(combinations(range(n), 2))
    extra = draw(st.lists(st.sampled_from(pairs), unique=True, max_size=n)) if pairs else []
    return Graph(n, set(tree) | {tuple(e) for e in extra})
