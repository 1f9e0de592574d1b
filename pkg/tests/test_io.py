import pytest
from hypothesis import given, settings, strategies as st

from lkstools.errors import InputError
from lkstools.graphs import build_graph
from lkstools.io import (
    format_tree,
    format_tree_line,
    graph6_decode,
    graph6_encode,
    parse_graph,
    parse_partition,
    parse_tree,
    parse_tree_line,
    parse_weights,
)


def test_graph6_known_value():
    # D?{ : 5 vertices, edges 0-4, 1-4, 2-3 per the standard encoding
    g = graph6_decode("D?{")
    assert g.n == 5
    assert graph6_encode(g) == "D?{"


def test_graph6_rejects_garbage():
    with pytest.raises(InputError):
        graph6_decode("D?")  # truncated body
    with pytest.raises(InputError):
        graph6_decode("D?\x05")


@st.composite
def graphs(draw, max_n=14):
    n = draw(st.integers(0, max_n))
    pairs = [(i, j) for i in range(n) for j in range(i + 1, n)]
    mask = draw(st.integers(0, 2 ** len(pairs) - 1)) if pairs else 0
    return build_graph(n, [p for idx, p in enumerate(pairs) if (mask >> idx) & 1])


@given(graphs())
@settings(max_examples=300, deadline=None)
def test_graph6_round_trip(G):
    assert graph6_decode(graph6_encode(G)) == G


def test_parse_edgelist_triangle():
    g = parse_graph("3 3\n0 1\n1 2\n2 0\n")
    assert g.num_edges() == 3 and g.n == 3


def test_parse_graph_auto_detects():
    assert parse_graph("D?{").n == 5
    assert parse_graph("2 1\n0 1\n").n == 2


def test_tree_round_trip():
    from lkstools.trees import RootedTree
    T = RootedTree.from_edges(5, [(0, 1), (1, 2), (1, 3), (3, 4)], 2)
    assert parse_tree(format_tree(T)).parent == T.parent
    assert parse_tree_line(format_tree_line(T)).parent == T.parent
    T2 = parse_tree("5 4\n0 1\n1 2\n1 3\n3 4\n", root=2)  # edge list form
    assert T2.root == 2 and T2.parent == T.parent


def test_parse_weights_and_partition():
    w = parse_weights("0 1 0.5\n2 1 1\n")
    assert w[(0, 1)] == 0.5 and w[(1, 2)] == 1
    clusters, residue = parse_partition("0 1 2\n3 4 5\n~ 6 7\n")
    assert clusters == [{0, 1, 2}, {3, 4, 5}] and residue == {6, 7}
