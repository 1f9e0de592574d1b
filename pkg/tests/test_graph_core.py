from fractions import Fraction

import pytest
from hypothesis import given, settings, strategies as st

from lkstools.errors import InputError, PreconditionError
from lkstools.graphs import (
    avg_deg,
    build_graph,
    ci,
    classify_lks,
    edge_count,
    min_degree_core,
    normalize_host,
)


def triangle():
    return build_graph(3, [(0, 1), (1, 2), (2, 0)])


def path4():
    return build_graph(4, [(0, 1), (1, 2), (2, 3)])


def star(m):
    return build_graph(m + 1, [(0, i) for i in range(1, m + 1)])


def complete(n):
    return build_graph(n, [(i, j) for i in range(n) for j in range(i + 1, n)])


def test_build_graph_examples():
    t = triangle()
    assert t.degrees() == [2, 2, 2]
    p = path4()
    assert p.degrees() == [1, 2, 2, 1]
    g = build_graph(2, [(0, 1), (0, 1), (1, 0)])
    assert g.num_edges() == 1


def test_build_graph_errors():
    with pytest.raises(InputError):
        build_graph(3, [(0, 3)])
    with pytest.raises(InputError):
        build_graph(3, [(1, 1)])


def test_avg_deg_examples():
    assert avg_deg(triangle(), {0}, {1, 2}) == 2
    k23 = build_graph(5, [(i, j) for i in (0, 1) for j in (2, 3, 4)])
    assert avg_deg(k23, {0, 1}, {2, 3, 4}) == 3
    assert avg_deg(path4(), {1, 2}, {0, 3}) == 1


def test_avg_deg_errors():
    with pytest.raises(InputError):
        avg_deg(triangle(), set(), {1})
    with pytest.raises(InputError):
        avg_deg(triangle(), {0, 1}, {1, 2})


@st.composite
def graphs(draw, max_n=8):
    n = draw(st.integers(2, max_n))
    edges = draw(st.lists(st.tuples(st.integers(0, n - 1), st.integers(0, n - 1)), max_size=20))
    return build_graph(n, [(u, v) for u, v in edges if u != v])


@given(graphs())
@settings(max_examples=200, deadline=None)
def test_avg_deg_exact_identity(G):
    X = set(range(G.n // 2)) or {0}
    Y = set(range(G.n // 2, G.n))
    d = avg_deg(G, X, Y)
    assert d * len(X) == edge_count(G, X, Y)
    assert isinstance(d, Fraction)


def test_classify_lks_examples():
    assert classify_lks(complete(4), 2).holds
    c = classify_lks(path4(), 2)
    assert c.L == {1, 2} and c.holds
    s = classify_lks(star(3), 2)
    assert s.L == {0} and not s.holds


def test_classify_lks_range():
    with pytest.raises(InputError):
        classify_lks(path4(), 0)
    with pytest.raises(InputError):
        classify_lks(path4(), 4)


def test_normalize_host_examples():
    assert normalize_host(triangle(), 2).edges() == triangle().edges()
    # |L| <= |S| + 1 already: nothing to delete
    p3 = build_graph(3, [(0, 1), (1, 2)])
    assert normalize_host(p3, 1).edges() == p3.edges()
    with pytest.raises(PreconditionError):
        normalize_host(p3, 2)  # fails the degree-profile precondition
    # clique plus pendant: the single L-S edge goes, then no S-S edges remain
    g = build_graph(5, [(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3), (0, 4)])
    h = normalize_host(g, 3)
    assert h.degree(4) == 0
    assert sorted(h.edges()) == sorted(complete(4).edges())


def test_normalize_host_precondition():
    with pytest.raises(PreconditionError):
        normalize_host(star(3), 2)


@given(graphs())
@settings(max_examples=200, deadline=None)
def test_normalize_host_postconditions(G):
    ks = [k for k in range(1, G.n) if classify_lks(G, k).holds]
    for k in ks:
        H = normalize_host(G, k)
        cls = classify_lks(H, k)
        assert 2 * len(cls.L) >= H.n
        assert not any(u in cls.S and v in cls.S for u, v in H.edges())


def test_min_degree_core_examples():
    assert min_degree_core(star(3), Fraction(3, 4)).n == 4
    tri_pendant = build_graph(4, [(0, 1), (1, 2), (2, 0), (0, 3)])
    core = min_degree_core(tri_pendant, 2)
    assert core.n == 3 and core.num_edges() == 3
    assert min_degree_core(path4(), 2) is None


@given(graphs())
@settings(max_examples=200, deadline=None)
def test_min_degree_core_nonempty_at_half_average(G):
    if G.num_edges() == 0:
        return
    d = Fraction(G.num_edges(), G.n)  # half the classical average degree
    core = min_degree_core(G, d)
    assert core is not None
    assert all(core.degree(v) >= d for v in range(core.n))


def test_ci():
    assert ci(1.4) == 1
    assert ci(Fraction(3, 2)) == 2
    assert ci(3.0) == 3
    assert ci(Fraction(-1, 2)) == 0
    assert ci(-0.6) == -1
