from __future__ import annotations

from hypothesis import settings, strategies as st

from semitotal.enumeration import prufer_decode
from semitotal.graph_core import Tree, from_edges

settings.register_profile("default", max_examples=60, deadline=None)
settings.load_profile("default")


@st.composite
def trees(draw, min_n: int = 2, max_n: int = 12) -> Tree:
    """Uniform labeled trees via random Prüfer sequences."""
    n = draw(st.integers(min_n, max_n))
    if n == 1:
        return from_edges(1, [])
    if n == 2:
        return from_edges(2, [(0, 1)])
    seq = draw(st.lists(st.integers(0, n - 1), min_size=n - 2, max_size=n - 2))
    return prufer_decode(seq, n)


@st.composite
def trees_with_permutation(draw, min_n: int = 2, max_n: int = 12) -> tuple[Tree, list[int]]:
    t = draw(trees(min_n, max_n))
    perm = draw(st.permutations(range(t.n)))
    return t, list(perm)


def double_star(a: int, b: int) -> Tree:
    """Centers 0 and 1 with a and b leaves respectively."""
    edges = [(0, 1)] + [(0, 2 + i) for i in range(a)] + [(1, 2 + a + j) for j in range(b)]
    return from_edges(2 + a + b, edges)


ACCEPTANCE_LINES: list[str] = []


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance")
        for line in ACCEPTANCE_LINES:
            terminalreporter.write_line(line)
