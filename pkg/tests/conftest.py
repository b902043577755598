import pytest
from hypothesis import strategies as st

from graphideals.graph import Edge, Graph

ACCEPTANCE_LINES = []


def make_graph(vertices, edges):
    """``edges`` as (id, source, range) triples."""
    return Graph(tuple(vertices), tuple(Edge(*e) for e in edges))


@pytest.fixture
def fork():
    return make_graph(["v1", "v2", "w"], [("a", "v1", "w"), ("b", "v2", "w")])


@pytest.fixture
def vloop():
    """v -> w with a loop at w."""
    return make_graph(["v", "w"], [("e", "v", "w"), ("f", "w", "w")])


@pytest.fixture
def single_loop():
    return make_graph(["v"], [("f", "v", "v")])


@st.composite
def graphs(draw, max_vertices=6, max_edges=12):
    n = draw(st.integers(0, max_vertices))
    names = [f"x{i}" for i in range(n)]
    if not n:
        return Graph(())
    pairs = draw(st.lists(st.tuples(st.integers(0, n - 1), st.integers(0, n - 1)), max_size=max_edges))
    return Graph(tuple(names), tuple(Edge(f"e{k}", names[s], names[r]) for k, (s, r) in enumerate(pairs)))


@st.composite
def graph_and_subset(draw, **kw):
    g = draw(graphs(**kw))
    members = draw(st.sets(st.sampled_from(g.vertices))) if g.vertices else set()
    return g, g.vertex_set(members)


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in ACCEPTANCE_LINES:
            terminalreporter.write_line(line)
