"""Rooted trees: the below/above order, color classes, balance notions,
full-subtree extraction and tree generation for the exhaustive suites."""

from __future__ import annotations

from fractions import Fraction
from itertools import product
from typing import Iterable, Iterator, NamedTuple

from .errors import InputError, PreconditionError


class RootedTree:
    """Tree on vertices 0..n-1 with a designated root.

    `parent[root] == -1`.  `a below b` means b lies on the a-to-root path.
    Degrees and leaves are in the plain (unrooted) sense.
    """

    __slots__ = ("n", "root", "parent", "children", "order", "depth", "adj")

    def __init__(self, parent: Iterable[int], root: int):
        parent = tuple(parent)
        n = len(parent)
        if not (0 <= root < n) or parent[root] != -1:
            raise InputError("root must have parent entry -1")
        children: list[list[int]] = [[] for _ in range(n)]
        for v, p in enumerate(parent):
            if v == root:
                continue
            if not (0 <= p < n) or p == v:
                raise InputError(f"bad parent entry for vertex {v}")
            children[p].append(v)
        # BFS from the root both orders the vertices and checks connectivity
        order = [root]
        depth = [-1] * n
        depth[root] = 0
        for v in order:
            for c in children[v]:
                if depth[c] != -1:
                    raise InputError("parent links do not form a tree")
                depth[c] = depth[v] + 1
                order.append(c)
        if len(order) != n:
            raise InputError("parent links do not form a single tree")
        self.n = n
        self.root = root
        self.parent = parent
        self.children = tuple(tuple(sorted(c)) for c in children)
        self.order = tuple(order)
        self.depth = tuple(depth)
        adj: list[list[int]] = [[] for _ in range(n)]
        for v, p in enumerate(parent):
            if p != -1:
                adj[v].append(p)
                adj[p].append(v)
        self.adj = tuple(tuple(sorted(a)) for a in adj)

    @classmethod
    def from_edges(cls, n: int, edges: Iterable[tuple[int, int]], root: int = 0) -> "RootedTree":
        adj: list[list[int]] = [[] for _ in range(n)]
        cnt = 0
        for u, v in edges:
            if not (0 <= u < n and 0 <= v < n) or u == v:
                raise InputError(f"bad edge ({u},{v})")
            adj[u].append(v)
            adj[v].append(u)
            cnt += 1
        if cnt != n - 1:
            raise InputError("a tree on n vertices has exactly n-1 edges")
        parent = [-2] * n
        parent[root] = -1
        stack = [root]
        seen = 1
        while stack:
            v = stack.pop()
            for u in adj[v]:
                if parent[u] == -2:
                    parent[u] = v
                    seen += 1
                    stack.append(u)
        if seen != n:
            raise InputError("edge list is not connected")
        return cls(parent, root)

    def degree(self, v: int) -> int:
        return len(self.adj[v])

    def leaves(self) -> frozenset:
        if self.n == 1:
            return frozenset({self.root})
        return frozenset(v for v in range(self.n) if len(self.adj[v]) == 1)

    def edges(self) -> list[tuple[int, int]]:
        return [(min(v, p), max(v, p)) for v, p in enumerate(self.parent) if p != -1]

    def rerooted(self, r: int) -> "RootedTree":
        if r == self.root:
            return self
        return RootedTree.from_edges(self.n, self.edges(), r)

    def subtree_sizes(self) -> list[int]:
        size = [1] * self.n
        for v in reversed(self.order):
            p = self.parent[v]
            if p != -1:
                size[p] += size[v]
        return size

    def subtree_vertices(self, v: int) -> set[int]:
        out = {v}
        stack = [v]
        while stack:
            x = stack.pop()
            for c in self.children[x]:
                out.add(c)
                stack.append(c)
        return out

    def dist(self, u: int, v: int) -> int:
        d = 0
        du, dv = self.depth[u], self.depth[v]
        while du > dv:
            u = self.parent[u]
            du -= 1
            d += 1
        while dv > du:
            v = self.parent[v]
            dv -= 1
            d += 1
        while u != v:
            u, v = self.parent[u], self.parent[v]
            d += 2
        return d

    def __repr__(self):
        return f"RootedTree(n={self.n}, root={self.root})"


class RootedForest:
    """Vertex-disjoint union of rooted trees on 0..n-1; parent entry -1
    marks each component's root."""

    __slots__ = ("n", "parent", "roots", "children", "adj", "depth", "order")

    def __init__(self, parent):
        parent = tuple(parent)
        n = len(parent)
        roots = tuple(v for v, p in enumerate(parent) if p == -1)
        if not roots:
            raise InputError("forest needs at least one root")
        children: list[list[int]] = [[] for _ in range(n)]
        for v, p in enumerate(parent):
            if p == -1:
                continue
            if not (0 <= p < n) or p == v:
                raise InputError(f"bad parent entry for vertex {v}")
            children[p].append(v)
        order = list(roots)
        depth = [-1] * n
        for r in roots:
            depth[r] = 0
        for v in order:
            for c in children[v]:
                if depth[c] != -1:
                    raise InputError("parent links contain a cycle")
                depth[c] = depth[v] + 1
                order.append(c)
        if len(order) != n:
            raise InputError("parent links contain a cycle")
        self.n = n
        self.parent = parent
        self.roots = roots
        self.children = tuple(tuple(sorted(c)) for c in children)
        self.order = tuple(order)
        self.depth = tuple(depth)
        adj: list[list[int]] = [[] for _ in range(n)]
        for v, p in enumerate(parent):
            if p != -1:
                adj[v].append(p)
                adj[p].append(v)
        self.adj = tuple(tuple(sorted(a)) for a in adj)

    @classmethod
    def from_tree(cls, T: "RootedTree") -> "RootedForest":
        return cls(T.parent)

    def degree(self, v: int) -> int:
        return len(self.adj[v])

    def leaves(self) -> frozenset:
        return frozenset(v for v in range(self.n) if len(self.adj[v]) <= 1)

    def edges(self) -> list[tuple[int, int]]:
        return [(min(v, p), max(v, p)) for v, p in enumerate(self.parent) if p != -1]

    def component_of(self, v: int) -> frozenset:
        while self.parent[v] != -1:
            v = self.parent[v]
        out = {v}
        stack = [v]
        while stack:
            x = stack.pop()
            for c in self.children[x]:
                out.add(c)
                stack.append(c)
        return frozenset(out)


class ColorStats(NamedTuple):
    Te: frozenset
    To: frozenset
    gap: int


class SemiPartition(NamedTuple):
    U1: frozenset
    U2: frozenset
    disc: int


class SemiCheck(NamedTuple):
    ok: bool
    leaves_in_u1: int
    leaves_in_u2: int


class FullSubtree(NamedTuple):
    root: int
    vertices: frozenset
    order: int
    leaf_count: int  # leaves of the subtree, never counting its root


def color_stats(T: RootedTree) -> ColorStats:
    """Bipartition by depth parity; ties broken toward the root's class."""
    even = frozenset(v for v in range(T.n) if T.depth[v] % 2 == 0)
    odd = frozenset(range(T.n)) - even
    if len(even) >= len(odd):
        return ColorStats(even, odd, len(even) - len(odd))
    return ColorStats(odd, even, len(odd) - len(even))


def _max_independent(T: RootedTree, forced_in: set[int] | None = None) -> int:
    """Max independent set size, with an optional set of must-include vertices.

    Returns -1 when the forced set is itself dependent.
    """
    forced_in = forced_in or set()
    NEG = -(10 ** 9)
    dp_in = [0] * T.n
    dp_out = [0] * T.n
    for v in reversed(T.order):
        best_in = 1
        best_out = 0
        for c in T.children[v]:
            best_in += dp_out[c]
            best_out += max(dp_in[c], dp_out[c])
        dp_in[v] = best_in
        dp_out[v] = best_out if v not in forced_in else NEG
        p = T.parent[v]
        if v in forced_in and p in forced_in:
            return -1
    r = T.root
    best = max(dp_in[r], dp_out[r])
    return best if best > NEG // 2 else -1


def discrepancy(T: RootedTree) -> SemiPartition:
    """A maximizing semiindependent partition (U1, U2).

    U2 is independent with |U1| <= |U2|; disc = |U2| - |U1| is maximal.
    Since U1 is forced to be the complement of U2, the optimum equals
    2*alpha(T) - n, computed by tree DP; the witness U2 is the
    lexicographically smallest maximum independent set.
    """
    if T.n < 2:
        raise PreconditionError("discrepancy needs at least two vertices")
    alpha = _max_independent(T)
    chosen: set[int] = set()
    for v in range(T.n):
        if _max_independent(T, chosen | {v}) == alpha:
            chosen.add(v)
    assert len(chosen) == alpha
    U2 = frozenset(chosen)
    U1 = frozenset(range(T.n)) - U2
    return SemiPartition(U1, U2, len(U2) - len(U1))


def check_semiindependent(T: RootedTree, U1: Iterable[int], U2: Iterable[int]) -> SemiCheck:
    """True iff U2 is independent and |U1| <= |U2|, plus per-side leaf counts."""
    s1, s2 = set(U1), set(U2)
    if s1 & s2 or s1 | s2 != set(range(T.n)):
        raise InputError("U1, U2 must partition the vertex set")
    independent = all(T.parent[v] not in s2 for v in s2)
    lv = T.leaves()
    return SemiCheck(independent and len(s1) <= len(s2),
                     len(s1 & lv), len(s2 & lv))


def _rooted_leafcounts(T: RootedTree) -> tuple[list[int], list[int]]:
    """Per-vertex (lam_excl, lam_incl): leaves strictly below v, and leaves
    of the subtree at v counting v itself when v is childless."""
    lam_incl = [0] * T.n
    for v in reversed(T.order):
        if not T.children[v]:
            lam_incl[v] = 1
        else:
            lam_incl[v] = sum(lam_incl[c] for c in T.children[v])
    lam_excl = [lam_incl[v] if T.children[v] else 0 for v in range(T.n)]
    return lam_excl, lam_incl


def full_subtree(T: RootedTree, r: int, mode: str, bound: int) -> FullSubtree:
    """Root-descent extraction of a full-subtree.

    mode "order": result order lands in [bound/2, bound]; needs bound >= 2
    (an order-1 full-subtree would need an empty child set, which the
    definition forbids).  mode "leaves": result leaf count (root never
    counted as a leaf) lands in [bound/2, bound].
    """
    T = T.rerooted(r)
    size = T.subtree_sizes()
    lam_excl, lam_incl = _rooted_leafcounts(T)
    if mode == "order":
        if bound < 2:
            raise PreconditionError("order bound below 2 admits no full-subtree")
        if bound > T.n:
            raise PreconditionError("order bound exceeds the tree order")
        if bound == T.n:
            verts = frozenset(range(T.n))
            return FullSubtree(T.root, verts, T.n, lam_excl[T.root])
        r0 = T.root
        while True:
            cand = [c for c in T.children[r0] if 2 * size[c] >= bound and size[c] >= 2]
            if not cand:
                break
            r0 = min(cand)
        total = 1
        C = []
        for c in T.children[r0]:
            if C and 2 * total >= bound:
                break
            if total + size[c] <= bound:
                C.append(c)
                total += size[c]
        assert C and 2 * total >= bound and total <= bound
    elif mode == "leaves":
        if not (1 <= bound <= lam_excl[T.root]):
            raise PreconditionError("leaf bound out of range")
        if bound == lam_excl[T.root]:
            verts = frozenset(range(T.n))
            return FullSubtree(T.root, verts, T.n, lam_excl[T.root])
        r0 = T.root
        while True:
            cand = [c for c in T.children[r0] if 2 * lam_excl[c] >= bound]
            if not cand:
                break
            r0 = min(cand)
        total = 0
        C = []
        for c in T.children[r0]:
            if C and 2 * total >= bound:
                break
            if total + lam_incl[c] <= bound:
                C.append(c)
                total += lam_incl[c]
        assert C and 2 * total >= bound and total <= bound
    else:
        raise InputError(f"unknown mode {mode!r}")
    verts = {r0}
    for c in C:
        verts |= T.subtree_vertices(c)
    leafs = sum(lam_incl[c] for c in C)
    return FullSubtree(r0, frozenset(verts), len(verts), leafs)


def _member_color_sizes(T: RootedTree, member: set[int]) -> tuple[int, int]:
    """Bipartition sizes of the subtree induced by `member` (must be connected)."""
    start = min(member)
    color = {start: 0}
    stack = [start]
    while stack:
        v = stack.pop()
        for u in T.adj[v]:
            if u in member and u not in color:
                color[u] = color[v] ^ 1
                stack.append(u)
    if len(color) != len(member):
        raise InputError("family member does not induce a subtree")
    ones = sum(color.values())
    zeros = len(member) - ones
    return (max(zeros, ones), min(zeros, ones))


def c_balanced(T: RootedTree, members: Iterable[Iterable[int]], c, k: int) -> bool:
    """True iff the members whose smaller color class exceeds c*v(t)
    carry total order at least c*k."""
    c = Fraction(c)
    if not (0 < c < Fraction(1, 2)):
        raise InputError("c must lie strictly between 0 and 1/2")
    seen: set[int] = set()
    total = 0
    for m in members:
        ms = set(m)
        if not ms or ms & seen:
            raise InputError("family members must be nonempty and vertex-disjoint")
        seen |= ms
        _, small = _member_color_sizes(T, ms)
        if small > c * len(ms):
            total += len(ms)
    return total >= c * k


def _chains(T: RootedTree) -> list[tuple[list[int], int | None, int | None]]:
    """Maximal paths of degree<=2 vertices, each with its end anchors
    (the adjacent degree>=3 vertices, None at a leaf end)."""
    deg = [T.degree(v) for v in range(T.n)]
    low = [v for v in range(T.n) if deg[v] <= 2]
    in_low = set(low)
    seen: set[int] = set()
    chains = []
    for v in sorted(low):
        if v in seen:
            continue
        # walk to one end of the chain containing v
        prev, cur = None, v
        while True:
            nxt = [u for u in T.adj[cur] if u in in_low and u != prev]
            if not nxt:
                break
            prev, cur = cur, nxt[0]
            if cur == v:  # cannot happen in a tree
                break
        # build the chain from this end
        path = [cur]
        seen.add(cur)
        prev = None
        while True:
            nxt = [u for u in T.adj[path[-1]] if u in in_low and u != prev and u not in seen]
            if not nxt:
                break
            prev = path[-1]
            path.append(nxt[0])
            seen.add(nxt[0])
        if path[-1] < path[0]:
            path.reverse()
        if len(path) == 1:
            a = [u for u in T.adj[path[0]] if u not in in_low]
            la = a[0] if a else None
            ra = a[1] if len(a) > 1 else None
        else:
            la = next((u for u in T.adj[path[0]] if u not in in_low), None)
            ra = next((u for u in T.adj[path[-1]] if u not in in_low), None)
        chains.append((path, la, ra))
    return chains


def induced_path_family(T: RootedTree, c: int) -> list[tuple[int, ...]]:
    """Maximal family of vertex-disjoint paths on c+1 vertices whose
    internal vertices have degree exactly two in T."""
    if c < 2:
        raise InputError("path parameter must be at least 2")
    deg = [T.degree(v) for v in range(T.n)]
    chains = _chains(T)
    used: set[int] = set()
    family: list[tuple[int, ...]] = []

    def try_add(seq: list[int]) -> bool:
        if len(seq) != c + 1 or len(set(seq)) != c + 1 or any(v in used for v in seq):
            return False
        if any(deg[v] != 2 for v in seq[1:-1]):
            return False
        family.append(tuple(seq))
        used.update(seq)
        return True

    changed = True
    while changed:
        changed = False
        for path, la, ra in chains:
            i = 0
            while i < len(path):
                if path[i] in used:
                    i += 1
                    continue
                j = i
                while j + 1 < len(path) and path[j + 1] not in used:
                    j += 1
                run = path[i:j + 1]
                lext = la if (i == 0 and la is not None and la not in used) else None
                rext = ra if (j == len(path) - 1 and ra is not None and ra not in used) else None
                pos = 0
                while len(run) - pos >= c + 1:
                    if try_add(run[pos:pos + c + 1]):
                        changed = True
                    pos += c + 1
                rest = run[pos:]
                if rest and rext is not None and len(rest) >= c:
                    if try_add(rest[-c:] + [rext]):
                        changed = True
                        rest = rest[:-c]
                if rest and lext is not None and pos == 0:
                    if len(rest) >= c and try_add([lext] + rest[:c]):
                        changed = True
                    elif len(rest) == c - 1 and rext is not None:
                        if try_add([lext] + rest + [rext]):
                            changed = True
                i = j + 1
    return family


def _prufer_edges(seq: tuple[int, ...], n: int) -> list[tuple[int, int]]:
    deg = [1] * n
    for x in seq:
        deg[x] += 1
    edges = []
    ptr = 0
    while deg[ptr] != 1:
        ptr += 1
    leaf = ptr
    for x in seq:
        edges.append((leaf, x))
        deg[x] -= 1
        if deg[x] == 1 and x < ptr:
            leaf = x
        else:
            ptr += 1
            while deg[ptr] != 1:
                ptr += 1
            leaf = ptr
    edges.append((leaf, n - 1))
    return edges


def _level_sequences(n: int) -> Iterator[list[int]]:
    """Beyer-Hedetniemi: level sequences of all rooted trees on n vertices."""
    L = list(range(1, n + 1))
    yield L[:]
    if n <= 2:
        return
    while True:
        p = max((i for i in range(n) if L[i] > 2), default=-1)
        if p == -1:
            return
        q = max(i for i in range(p) if L[i] == L[p] - 1)
        for i in range(p, n):
            L[i] = L[i - (p - q)]
        yield L[:]


def _levels_to_parents(L: list[int]) -> list[int]:
    parent = [-1] * len(L)
    for i in range(1, len(L)):
        for j in range(i - 1, -1, -1):
            if L[j] == L[i] - 1:
                parent[i] = j
                break
    return parent


def _ahu(T: RootedTree, root: int, banned: int | None = None) -> str:
    """Canonical string of the subtree at `root` avoiding the banned neighbor."""
    def code(v: int, p: int | None) -> str:
        subs = sorted(code(u, v) for u in T.adj[v] if u != p and u != banned)
        return "(" + "".join(subs) + ")"
    return code(root, None)


def canonical_key(T: RootedTree) -> str:
    """Isomorphism key: AHU encoding rooted at the centroid(s)."""
    size = [1] * T.n
    for v in reversed(T.order):
        p = T.parent[v]
        if p != -1:
            size[p] += size[v]
    centroids = []
    for v in range(T.n):
        heaviest = T.n - size[v]
        for cdd in T.children[v]:
            heaviest = max(heaviest, size[cdd])
        if heaviest <= T.n // 2:
            centroids.append(v)
    if len(centroids) == 1:
        return _ahu(T, centroids[0])
    a, b = centroids
    ka = _ahu(T, a, banned=b)
    kb = _ahu(T, b, banned=a)
    return "|".join(sorted([ka, kb]))


def generate_trees(order: int, mode: str) -> Iterator[RootedTree]:
    """Stream trees of the given order.

    labeled: all order**(order-2) trees via their sequence encodings,
    capped at order 10.  canonical: one representative per isomorphism
    class (centroid-AHU dedup over all rooted shapes), capped at 16.
    """
    if mode == "labeled":
        if not (1 <= order <= 10):
            raise InputError("labeled generation capped at order 10")
        if order == 1:
            yield RootedTree([-1], 0)
            return
        if order == 2:
            yield RootedTree.from_edges(2, [(0, 1)], 0)
            return
        for seq in product(range(order), repeat=order - 2):
            yield RootedTree.from_edges(order, _prufer_edges(seq, order), 0)
    elif mode == "canonical":
        if not (1 <= order <= 16):
            raise InputError("canonical generation capped at order 16")
        if order == 1:
            yield RootedTree([-1], 0)
            return
        seen: set[str] = set()
        for L in _level_sequences(order):
            T = RootedTree(_levels_to_parents(L), 0)
            key = canonical_key(T)
            if key not in seen:
                seen.add(key)
                yield T
    else:
        raise InputError(f"unknown generation mode {mode!r}")
