"""Host-graph representation, degree bookkeeping and host preprocessing.

Vertices are 0..n-1.  Graphs are immutable after construction; adjacency
is kept both as sorted neighbor tuples and as bitmasks (one int per
vertex) for the hot paths.  All degree/average comparisons that feed
threshold decisions use exact integer or Fraction arithmetic.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Iterable, Sequence

from .errors import InputError, PreconditionError


class Graph:
    """Finite simple graph: symmetric, irreflexive adjacency over [n]."""

    __slots__ = ("n", "adj", "adj_mask", "_edges")

    def __init__(self, n: int, adj: Sequence[Sequence[int]]):
        self.n = n
        self.adj = tuple(tuple(sorted(a)) for a in adj)
        self.adj_mask = tuple(_mask(a) for a in self.adj)
        self._edges = None

    def degree(self, v: int) -> int:
        return len(self.adj[v])

    def degrees(self) -> list[int]:
        return [len(a) for a in self.adj]

    def has_edge(self, u: int, v: int) -> bool:
        return (self.adj_mask[u] >> v) & 1 == 1

    def edges(self) -> list[tuple[int, int]]:
        if self._edges is None:
            self._edges = [(u, v) for u in range(self.n) for v in self.adj[u] if u < v]
        return self._edges

    def num_edges(self) -> int:
        return len(self.edges())

    def neighbors_in(self, v: int, mask: int) -> int:
        """Bitmask of N(v) restricted to `mask`."""
        return self.adj_mask[v] & mask

    def deg_in(self, v: int, mask: int) -> int:
        return (self.adj_mask[v] & mask).bit_count()

    def subgraph(self, vertices: Iterable[int]) -> tuple["Graph", list[int]]:
        """Induced subgraph plus the old-id list (new id i -> old id list[i])."""
        keep = sorted(set(vertices))
        index = {v: i for i, v in enumerate(keep)}
        adj = [[index[u] for u in self.adj[v] if u in index] for v in keep]
        return Graph(len(keep), adj), keep

    def without_edges(self, gone: Iterable[tuple[int, int]]) -> "Graph":
        gone_set = {(min(u, v), max(u, v)) for u, v in gone}
        adj = [[u for u in self.adj[v] if (min(u, v), max(u, v)) not in gone_set]
               for v in range(self.n)]
        return Graph(self.n, adj)

    def __eq__(self, other):
        return isinstance(other, Graph) and self.n == other.n and self.adj == other.adj

    def __hash__(self):
        return hash((self.n, self.adj))

    def __repr__(self):
        return f"Graph(n={self.n}, m={self.num_edges()})"


def _mask(vertices: Iterable[int]) -> int:
    m = 0
    for v in vertices:
        m |= 1 << v
    return m


def mask_of(vertices: Iterable[int]) -> int:
    return _mask(vertices)


def bits(mask: int) -> list[int]:
    out = []
    while mask:
        low = mask & -mask
        out.append(low.bit_length() - 1)
        mask ^= low
    return out


class WeightedGraph:
    """Graph plus positive edge weights bounded by the cap `s`."""

    __slots__ = ("base", "omega", "s")

    def __init__(self, base: Graph, omega: dict, s):
        self.base = base
        self.s = Fraction(s)
        if self.s <= 0:
            raise InputError("weight cap s must be positive")
        norm = {}
        for (u, v), w in omega.items():
            if not base.has_edge(u, v):
                raise InputError(f"weight given for non-edge ({u},{v})")
            w = Fraction(w)
            if not (0 < w <= self.s):
                raise InputError(f"weight of ({u},{v}) outside (0, s]")
            norm[(min(u, v), max(u, v))] = w
        for (u, v) in base.edges():
            if (u, v) not in norm:
                raise InputError(f"edge ({u},{v}) has no weight")
        self.omega = norm

    def weight(self, u: int, v: int) -> Fraction:
        return self.omega[(min(u, v), max(u, v))]

    def wdeg(self, v: int, restrict: int | None = None) -> Fraction:
        """Weighted degree of v, optionally restricted to a vertex bitmask."""
        adj = self.base.adj_mask[v]
        if restrict is not None:
            adj &= restrict
        total = Fraction(0)
        for u in bits(adj):
            total += self.weight(v, u)
        return total


class LksClassification:
    """Degree-threshold split of the vertex set: L = {deg >= k}, S = rest."""

    __slots__ = ("k", "L", "S", "holds")

    def __init__(self, k: int, L: frozenset, S: frozenset, holds: bool):
        self.k = k
        self.L = L
        self.S = S
        self.holds = holds

    def __repr__(self):
        return f"LksClassification(k={self.k}, |L|={len(self.L)}, holds={self.holds})"


def build_graph(n: int, edges: Iterable[tuple[int, int]]) -> Graph:
    """Graph from an (unordered, possibly repeated) pair list."""
    if n < 0:
        raise InputError("vertex count must be nonnegative")
    adj = [set() for _ in range(n)]
    for u, v in edges:
        if not (0 <= u < n and 0 <= v < n):
            raise InputError(f"edge endpoint out of range: ({u},{v})")
        if u == v:
            raise InputError(f"loop at vertex {u}")
        adj[u].add(v)
        adj[v].add(u)
    return Graph(n, adj)


def avg_deg(G: Graph, X: Iterable[int], Y: Iterable[int]) -> Fraction:
    """e(X,Y)/|X| with e counting edges that have one end in X, other in Y.

    X must be nonempty; X and Y must be disjoint unless Y is the whole
    vertex set (the shorthand for the average degree of X).  Edges are
    counted as a set, so with Y = V an edge inside X contributes once.
    """
    Xs, Ys = set(X), set(Y)
    if not Xs:
        raise InputError("X must be nonempty")
    if Ys != set(range(G.n)) and Xs & Ys:
        raise InputError("X and Y must be disjoint (or Y the full vertex set)")
    return Fraction(edge_count(G, Xs, Ys), len(Xs))


def edge_count(G: Graph, X: Iterable[int], Y: Iterable[int]) -> int:
    """|E(X,Y)| as a set of edges (internal X-and-Y edges counted once)."""
    xm, ym = _mask(X), _mask(Y)
    e = 0
    both = xm & ym
    for v in bits(xm):
        e += (G.adj_mask[v] & ym).bit_count()
    dup = 0
    for v in bits(both):
        dup += (G.adj_mask[v] & both).bit_count()
    return e - dup // 2


def classify_lks(G: Graph, k: int) -> LksClassification:
    """Split V into L = {deg >= k} and S; holds iff 2|L| >= n."""
    if not (1 <= k < G.n):
        raise InputError(f"k={k} out of range [1, n)")
    L = frozenset(v for v in range(G.n) if G.degree(v) >= k)
    S = frozenset(range(G.n)) - L
    return LksClassification(k, L, S, 2 * len(L) >= G.n)


def normalize_host(G: Graph, k: int) -> Graph:
    """Thin the host so few-large-vertices and independent-small-set hold.

    While |L| >= |S| + 2 and an L-S edge exists, delete one such edge
    (recomputing L/S each time), then drop every S-S edge.  The result
    still has at least half of its vertices of degree >= k, and any tree
    embeddable in the result embeds in G.
    """
    cls = classify_lks(G, k)
    if not cls.holds:
        raise PreconditionError("host does not have the required degree profile")
    H = G
    while True:
        cls = classify_lks(H, k)
        if len(cls.L) < len(cls.S) + 2:
            break
        edge = None
        for u in sorted(cls.L):
            cand = [v for v in H.adj[u] if v in cls.S]
            if cand:
                edge = (u, min(cand))
                break
        if edge is None:
            break
        H = H.without_edges([edge])
    cls = classify_lks(H, k)
    ss_edges = [(u, v) for (u, v) in H.edges() if u in cls.S and v in cls.S]
    if ss_edges:
        H = H.without_edges(ss_edges)
    final = classify_lks(H, k)
    assert 2 * len(final.L) >= H.n
    assert not any(u in final.S and v in final.S for (u, v) in H.edges())
    return H


def min_degree_core(G: Graph, d) -> Graph | None:
    """Iteratively peel vertices of degree < d; None when nothing survives.

    With d at most half the classical average degree (e(G)/v(G)) and at
    least one edge present, the survivor set is nonempty.
    """
    d = Fraction(d)
    if d < 0:
        raise InputError("threshold d must be nonnegative")
    alive = set(range(G.n))
    deg = {v: G.degree(v) for v in alive}
    changed = True
    while changed:
        changed = False
        for v in sorted(alive):
            if deg[v] < d:
                alive.discard(v)
                for u in G.adj[v]:
                    if u in alive:
                        deg[u] -= 1
                changed = True
    if not alive:
        return None
    sub, _ = G.subgraph(alive)
    return sub


def ci(x) -> int:
    """Closest integer: floor when the fractional part is below one half."""
    x = Fraction(x)
    fl = x.numerator // x.denominator
    if x - fl < Fraction(1, 2):
        return fl
    return fl + 1
