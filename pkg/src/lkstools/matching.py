"""Matching machinery: maximum matching (blossom algorithm), Hall-type
cover matchings, factor-criticality, separator decompositions and the
weighted two-case matching structure, plus the index-split helper."""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations

from .errors import InputError, InternalContradictionError, PreconditionError
from .graphs import Graph, WeightedGraph, bits, mask_of


# ---------------------------------------------------------------------------
# cardinality matching (Edmonds' blossom algorithm) + the outer-vertex labels

def _greedy_matching(n, adj, match):
    for v in range(n):
        if match[v] == -1:
            for u in adj[v]:
                if match[u] == -1:
                    match[v] = u
                    match[u] = v
                    break


def _find_path(n, adj, match, root, collect_outer=None):
    """One alternating-forest phase from `root`; returns an exposed vertex
    ending an augmenting path, or -1.  When collect_outer is a set, every
    outer (evenly reachable) vertex is added to it."""
    used = [False] * n
    p = [-1] * n
    base = list(range(n))
    used[root] = True
    q = deque([root])

    def lca(a, b):
        seen = [False] * n
        while True:
            a = base[a]
            seen[a] = True
            if match[a] == -1:
                break
            a = p[match[a]]
        while True:
            b = base[b]
            if seen[b]:
                return b
            b = p[match[b]]

    def mark_path(v, b, child, blossom):
        while base[v] != b:
            blossom[base[v]] = True
            blossom[base[match[v]]] = True
            p[v] = child
            child = match[v]
            v = p[match[v]]

    while q:
        v = q.popleft()
        for to in adj[v]:
            if base[v] == base[to] or match[v] == to:
                continue
            if to == root or (match[to] != -1 and p[match[to]] != -1):
                curbase = lca(v, to)
                blossom = [False] * n
                mark_path(v, curbase, to, blossom)
                mark_path(to, curbase, v, blossom)
                for i in range(n):
                    if blossom[base[i]]:
                        base[i] = curbase
                        if not used[i]:
                            used[i] = True
                            q.append(i)
            elif p[to] == -1:
                p[to] = v
                if match[to] == -1:
                    # augment along parent links
                    u = to
                    while u != -1:
                        pv = p[u]
                        ppv = match[pv]
                        match[u] = pv
                        match[pv] = u
                        u = ppv
                    return to
                used[match[to]] = True
                q.append(match[to])
    if collect_outer is not None:
        collect_outer.update(i for i in range(n) if used[i])
    return -1


def _matching_arrays(n, adj):
    """Maximum matching as a match[] array."""
    match = [-1] * n
    _greedy_matching(n, adj, match)
    for v in range(n):
        if match[v] == -1:
            _find_path(n, adj, match, v)
    return match


def _outer_set(n, adj, match):
    """Vertices exposed by some maximum matching (search from each exposed root)."""
    outer: set[int] = set()
    for v in range(n):
        if match[v] == -1 and v not in outer:
            res = _find_path(n, adj, match, v, collect_outer=outer)
            assert res == -1, "matching passed to _outer_set was not maximum"
    return outer


def max_matching(G: Graph) -> set[tuple[int, int]]:
    """Maximum-cardinality matching, certified by exhausted augmenting search."""
    match = _matching_arrays(G.n, G.adj)
    return {(v, match[v]) for v in range(G.n) if match[v] > v}


def is_matching(G: Graph, M) -> bool:
    seen: set[int] = set()
    for u, v in M:
        if u == v or not G.has_edge(u, v) or u in seen or v in seen:
            return False
        seen.update((u, v))
    return True


# ---------------------------------------------------------------------------
# bipartite cover matching

def _hopcroft_karp(left, right, adj):
    """Maximum matching in a bipartite graph given as left -> iterable(right).

    Returns dict left->right for matched pairs."""
    INF = float("inf")
    match_l = {u: None for u in left}
    match_r = {v: None for v in right}

    def bfs():
        dist = {}
        q = deque()
        for u in left:
            if match_l[u] is None:
                dist[u] = 0
                q.append(u)
            else:
                dist[u] = INF
        found = False
        while q:
            u = q.popleft()
            for v in adj[u]:
                w = match_r[v]
                if w is None:
                    found = True
                elif dist[w] == INF:
                    dist[w] = dist[u] + 1
                    q.append(w)
        return found, dist

    def dfs(u, dist):
        for v in adj[u]:
            w = match_r[v]
            if w is None or (dist[w] == dist[u] + 1 and dfs(w, dist)):
                match_l[u] = v
                match_r[v] = u
                return True
        dist[u] = INF
        return False

    while True:
        found, dist = bfs()
        if not found:
            break
        for u in left:
            if match_l[u] is None:
                dfs(u, dist)
    return {u: v for u, v in match_l.items() if v is not None}


def hall_cover_matching(G: Graph, W1, W2) -> set[tuple[int, int]]:
    """A matching covering W1 in the bipartite graph G[W1, W2].

    Requires min degree (in the bipartite restriction) at least |W1|/2 on
    both sides and |W1| <= |W2|; under these the cover always exists.
    """
    W1, W2 = sorted(set(W1)), sorted(set(W2))
    if set(W1) & set(W2):
        raise InputError("W1 and W2 must be disjoint")
    if len(W1) > len(W2):
        raise PreconditionError("|W1| <= |W2| required")
    w2mask = mask_of(W2)
    w1mask = mask_of(W1)
    adj = {u: [v for v in bits(G.adj_mask[u] & w2mask)] for u in W1}
    half = Fraction(len(W1), 2)
    for u in W1:
        if len(adj[u]) < half:
            raise PreconditionError(f"degree of {u} below |W1|/2")
    for v in W2:
        if G.deg_in(v, w1mask) < half:
            raise PreconditionError(f"degree of {v} below |W1|/2")
    m = _hopcroft_karp(W1, W2, adj)
    if len(m) != len(W1):
        raise InternalContradictionError("cover matching must exist here")
    return {(u, v) for u, v in m.items()}


# ---------------------------------------------------------------------------
# factor criticality and the separator decomposition

def _sub_adj(G: Graph, keep: set[int]):
    """Adjacency lists of the induced subgraph, relabeled 0..len(keep)-1."""
    order = sorted(keep)
    index = {v: i for i, v in enumerate(order)}
    adj = [[index[u] for u in G.adj[v] if u in keep] for v in order]
    return adj, order


def is_factor_critical(G: Graph) -> bool:
    """True iff removing any single vertex leaves a perfect matching.

    One near-perfect matching is computed once; for every covered vertex v
    the test "G - v has a perfect matching" reduces to a single augmenting
    search from v's exposed partner.
    """
    if G.n == 0:
        return True
    if G.n % 2 == 0:
        return False
    match = _matching_arrays(G.n, G.adj)
    if sum(1 for x in match if x != -1) != G.n - 1:
        return False
    for v in range(G.n):
        if match[v] == -1:
            continue
        adj2 = [[] if w == v else [u for u in G.adj[w] if u != v]
                for w in range(G.n)]
        m2 = match[:]
        y = m2[v]
        m2[v] = -1
        m2[y] = -1
        if _find_path(G.n, adj2, m2, y) == -1:
            return False
    return True


def _components_of(G: Graph, removed: set[int]) -> list[frozenset]:
    comps = []
    seen = set(removed)
    for v in range(G.n):
        if v in seen:
            continue
        comp = {v}
        stack = [v]
        seen.add(v)
        while stack:
            x = stack.pop()
            for u in G.adj[x]:
                if u not in seen:
                    seen.add(u)
                    comp.add(u)
                    stack.append(u)
        comps.append(frozenset(comp))
    return comps


@dataclass
class GEDecomposition:
    Q: frozenset
    M: frozenset          # frozenset of (q, y) pairs, q in Q
    components: tuple[frozenset, ...]
    factor_critical: tuple[bool, ...]


def _ge_dfs(G: Graph, work: set[int], acc: set[int], budget: list[int]) -> set[int] | None:
    """Grow the accumulated separator `acc` until every component of
    G[work] is factor-critical, then demand a full component-cover matching.

    Inessential vertices never need removing; a perfectly matched leftover
    component is peeled one endpoint of a matched edge at a time, and the
    endpoint choice is backtracked when the final cover cannot be built.
    """
    work = set(work)
    Q = set(acc)
    while True:
        if budget[0] <= 0:
            return None
        budget[0] -= 1
        if not work:
            return Q if _ge_cover(G, Q) is not None else None
        adj, order = _sub_adj(G, work)
        n = len(order)
        match = _matching_arrays(n, adj)
        outer = _outer_set(n, adj, match)
        D = {order[i] for i in outer}
        A = set()
        for d in D:
            for u in G.adj[d]:
                if u in work and u not in D:
                    A.add(u)
        if A:
            Q |= A
            work -= A
            continue
        C = work - D
        if not C:
            return Q if _ge_cover(G, Q) is not None else None
        # C is a union of perfectly matched components; peel one vertex
        comp = min((c for c in _components_of(G, set(range(G.n)) - work) if c & C),
                   key=min)
        index = {v: i for i, v in enumerate(order)}
        inner = sorted((min(v, order[match[index[v]]]), max(v, order[match[index[v]]]))
                       for v in comp if match[index[v]] != -1)
        for x0, y0 in inner:
            deg_x = sum(1 for u in G.adj[x0] if u in work)
            deg_y = sum(1 for u in G.adj[y0] if u in work)
            first, second = (x0, y0) if (deg_x, -x0) >= (deg_y, -y0) else (y0, x0)
            for choice in (first, second):
                res = _ge_dfs(G, work - {choice}, Q | {choice}, budget)
                if res is not None:
                    return res
        return None


def _ge_cover(G: Graph, Q: set[int]):
    """Matching of Q into pairwise distinct components of G - Q, or None."""
    comps = _components_of(G, Q)
    comp_id = {}
    for i, comp in enumerate(comps):
        for v in comp:
            comp_id[v] = i
    adj = {q: sorted({comp_id[u] for u in G.adj[q] if u not in Q}) for q in sorted(Q)}
    m = _hopcroft_karp(sorted(Q), list(range(len(comps))), adj)
    if len(m) != len(Q):
        return None
    out = set()
    for q, cid in m.items():
        y = min(u for u in G.adj[q] if u not in Q and comp_id[u] == cid)
        out.add((q, y))
    return out


def gallai_edmonds(G: Graph) -> GEDecomposition:
    """Separator Q plus a matching of Q into distinct factor-critical
    components of G - Q; verified from scratch before returning."""
    budget = [4096]
    Q = _ge_dfs(G, set(range(G.n)), set(), budget)
    if Q is None:
        raise InternalContradictionError("separator construction exhausted its budget")
    M = _ge_cover(G, Q)
    if M is None:
        raise InternalContradictionError("separator found but no component cover")
    comps = tuple(_components_of(G, Q))
    flags = []
    for comp in comps:
        adj, _ = _sub_adj(G, set(comp))
        sub = Graph(len(comp), adj)
        flags.append(is_factor_critical(sub))
    dec = GEDecomposition(frozenset(Q), frozenset(M), comps, tuple(flags))
    errs = verify_ge(G, dec)
    if errs:
        raise InternalContradictionError(f"decomposition failed checks: {errs}")
    return dec


def verify_ge(G: Graph, dec: GEDecomposition) -> list[str]:
    errs = []
    if not all(dec.factor_critical):
        errs.append("non-factor-critical component")
    comps = _components_of(G, set(dec.Q))
    if set(comps) != set(dec.components):
        errs.append("component list mismatch")
    if len(dec.M) != len(dec.Q):
        errs.append("matching size differs from separator size")
    comp_of = {}
    for i, comp in enumerate(comps):
        for v in comp:
            comp_of[v] = i
    seen_q, seen_c = set(), set()
    for q, y in dec.M:
        if q not in dec.Q or y in dec.Q or not G.has_edge(q, y):
            errs.append(f"bad matching edge ({q},{y})")
            continue
        if q in seen_q or comp_of[y] in seen_c:
            errs.append(f"matching reuses a vertex or component at ({q},{y})")
        seen_q.add(q)
        seen_c.add(comp_of[y])
    return errs


# ---------------------------------------------------------------------------
# the weighted two-case structure

@dataclass
class TutteStructure:
    case: str                     # "I" | "II"
    M: frozenset                  # matching edges (u, v), u < v
    A: int
    B: int
    Lstar: frozenset
    Xprime: frozenset | None      # case II only


def _check_preconditions(H: WeightedGraph, Lset: set[int], sigma: Fraction, K: Fraction):
    G = H.base
    N = G.n
    S = set(range(N)) - Lset
    if any(G.has_edge(u, v) for u, v in combinations(sorted(S), 2)):
        raise PreconditionError("complement of the marked set must be independent")
    if not (len(Lset) > Fraction(N, 2) - sigma * N):
        raise PreconditionError("marked set too small")
    wd = {v: H.wdeg(v) for v in range(N)}
    if any(wd[u] < K for u in Lset):
        raise PreconditionError("every marked vertex needs weighted degree >= K")
    if not any(G.has_edge(u, v) for u, v in combinations(sorted(Lset), 2)):
        raise PreconditionError("marked set must induce an edge")
    if any(wd[u] >= (1 + sigma) * K for u in S):
        raise PreconditionError("unmarked weighted degrees must stay below (1+sigma)K")
    if not (Fraction(1, 2 * N) < sigma < min(K / (32 * N * H.s), Fraction(1, 10))):
        raise PreconditionError("sigma outside its required window")
    return wd


def _maximize_off_star_coverage(G: Graph, Q: set[int], M: set[tuple[int, int]],
                                Lstar: frozenset) -> set[tuple[int, int]]:
    """Swap matching edges toward covering more vertices outside Lstar while
    keeping the separator certificate (distinct components per edge)."""
    comps = _components_of(G, Q)
    comp_of = {}
    for i, comp in enumerate(comps):
        for v in comp:
            comp_of[v] = i
    M = set(M)
    improved = True
    while improved:
        improved = False
        matched = {v for e in M for v in e}
        used_comp = {comp_of[y] for q, y in M}
        for (q, y) in sorted(M):
            if y not in Lstar:
                continue
            for y2 in G.adj[q]:
                if (y2 not in Lstar and y2 not in Q and y2 not in matched
                        and (comp_of[y2] == comp_of[y]
                             or comp_of[y2] not in used_comp)):
                    M.remove((q, y))
                    M.add((q, y2))
                    improved = True
                    break
            if improved:
                break
    return M


def verify_tutte(H: WeightedGraph, Lset: set[int], sigma, K,
                 st: TutteStructure) -> list[str]:
    """Re-check every bullet of the returned structure from scratch."""
    sigma, K = Fraction(sigma), Fraction(K)
    G = H.base
    N = G.n
    errs = []
    if not is_matching(G, st.M):
        errs.append("M is not a matching of H")
    if not G.has_edge(st.A, st.B):
        errs.append("A and B must be adjacent")
    if any(u not in Lset and v not in Lset for u, v in st.M):
        errs.append("a matching edge avoids the marked set")
    lstar_expect = frozenset(v for v in range(N)
                             if H.wdeg(v) >= (1 + sigma) * K / 2)
    if st.Lstar != lstar_expect:
        errs.append("Lstar mismatch")
    vm = mask_of(v for e in st.M for v in e)
    if st.case == "I":
        if H.wdeg(st.A, vm) < K:
            errs.append("case I: weighted degree of A into V(M) below K")
        amask = G.adj_mask[st.A]
        for u, v in st.M:
            if ((amask >> u) & 1) + ((amask >> v) & 1) > 1:
                errs.append(f"case I: edge ({u},{v}) doubly hit by N(A)")
        bm = vm | mask_of(st.Lstar)
        if H.wdeg(st.B, bm) < (1 + sigma) * K / 2:
            errs.append("case I: B lacks weight into V(M) plus Lstar")
    elif st.case == "II":
        X = st.Xprime
        if X is None:
            errs.append("case II needs the X' set")
            return errs
        if st.A not in X & Lset or st.B not in X & Lset:
            errs.append("case II: A, B must lie in X' within the marked set")
        bound = 2 * sigma * N * H.s
        for x in sorted(X):
            if H.wdeg(x, vm) < H.wdeg(x) - bound:
                errs.append(f"case II: vertex {x} poorly matched")
                break
        nx = 0
        for v in X:
            nx |= G.adj_mask[v]
        mprime_v = set()
        for u, v in st.M:
            if ((nx >> u) & 1) and ((nx >> v) & 1):
                mprime_v.update((u, v))
        if len(mprime_v - set(X)) > 1:
            errs.append("case II: too much of M' escapes X'")
    else:
        errs.append(f"unknown case {st.case!r}")
    return errs


def tutte_structure(H: WeightedGraph, Lset, sigma, K) -> TutteStructure:
    """Matching plus adjacent pivot pair (A, B) in one of the two shapes.

    Follows the separator construction: a maximum-coverage decomposition
    matching, then the three-way split on the unmarked part of the
    leftover marked vertices.
    """
    Lset = set(Lset)
    sigma, K = Fraction(sigma), Fraction(K)
    G = H.base
    N = G.n
    _check_preconditions(H, Lset, sigma, K)
    Lstar = frozenset(v for v in range(N) if H.wdeg(v) >= (1 + sigma) * K / 2)
    dec = gallai_edmonds(G)
    Q = set(dec.Q)
    M0 = _maximize_off_star_coverage(G, Q, set(dec.M), Lstar)
    L0 = Lset - Q
    comps = _components_of(G, Q)

    ll_edges = sorted((min(u, v), max(u, v)) for u, v in combinations(sorted(L0), 2)
                      if G.has_edge(u, v))
    if ll_edges:
        A, B = ll_edges[0]
        comp = next(c for c in comps if A in c)
        assert B in comp
        covered = {v for e in M0 for v in e}
        inside = sorted(comp & covered)
        x = inside[0] if inside else min(comp)
        keep = set(comp) - {x}
        M1 = set()
        if keep:
            adj, order = _sub_adj(G, keep)
            match = _matching_arrays(len(order), adj)
            if any(m == -1 for m in match):
                raise InternalContradictionError("factor-critical component lost its matching")
            M1 = {(order[i], order[match[i]]) for i in range(len(order)) if match[i] > i}
        M = frozenset((min(u, v), max(u, v)) for u, v in M0 | M1)
        for xprime in (frozenset(L0 | ({u for v in sorted(L0) for u in G.adj[v]} - Q)),
                       frozenset(comp)):
            st = TutteStructure("II", M, A, B, Lstar, xprime)
            if not verify_tutte(H, Lset, sigma, K, st):
                return st
        raise InternalContradictionError("case II structure failed verification")

    M = frozenset((min(u, v), max(u, v)) for u, v in M0)
    if not L0:
        A, B = next((u, v) for u, v in combinations(sorted(Lset), 2) if G.has_edge(u, v))
        st = TutteStructure("II", M, A, B, Lstar, frozenset(range(N)))
        errs = verify_tutte(H, Lset, sigma, K, st)
        if errs:
            raise InternalContradictionError(f"case II (all vertices) failed: {errs}")
        return st

    # L0 independent and nonempty: every leftover component is a singleton
    assert all(len(c) == 1 for c in comps), "independent leftover forces singletons"
    vm = mask_of(v for e in M for v in e)
    target = (1 + sigma) * K / 2
    nbrs_of_l0 = sorted({u for v in sorted(L0) for u in G.adj[v]})
    for B in nbrs_of_l0:
        if H.wdeg(B, vm | mask_of(Lstar)) < target:
            continue
        cand_A = sorted(set(G.adj[B]) & L0)
        for A in cand_A:
            st = TutteStructure("I", M, A, B, Lstar, None)
            if not verify_tutte(H, Lset, sigma, K, st):
                return st
    raise InternalContradictionError("no valid case I pivot pair found")


# ---------------------------------------------------------------------------
# the two-sided index split

def weight_split(I, alpha, beta, a, b, Delta):
    """Split the index set so the a-side keeps alpha-mass above a-Delta and
    the b-side reaches beta-mass b.  Greedy by beta/alpha ratio with runtime
    verification; exhaustive fallback for small index sets."""
    I = list(I)
    if not I:
        raise PreconditionError("index set must be nonempty")
    a, b, Delta = Fraction(a), Fraction(b), Fraction(Delta)
    al = {i: Fraction(alpha[i]) for i in I}
    be = {i: Fraction(beta[i]) for i in I}
    if Delta <= 0:
        raise PreconditionError("Delta must be positive")
    if any(not (0 < al[i] <= Delta) for i in I) or any(not (0 < be[i] <= Delta) for i in I):
        raise PreconditionError("alpha and beta values must lie in (0, Delta]")
    ta, tb = sum(al.values()), sum(be.values())
    if a / ta + b / tb > 1:
        raise PreconditionError("mass budget exceeds 1")

    def verify(Ia, Ib):
        return (sum(al[i] for i in Ia) > a - Delta
                and sum(be[i] for i in Ib) >= b)

    order = sorted(I, key=lambda i: (-(be[i] / al[i]), i))
    Ib: list = []
    acc = Fraction(0)
    for i in order:
        if acc >= b:
            break
        Ib.append(i)
        acc += be[i]
    Ia = [i for i in I if i not in set(Ib)]
    if verify(Ia, Ib):
        return sorted(Ia), sorted(Ib)
    if len(I) <= 25:
        for r in range(len(I) + 1):
            for comb in combinations(I, r):
                Ibs = set(comb)
                Ias = [i for i in I if i not in Ibs]
                if verify(Ias, comb):
                    return sorted(Ias), sorted(comb)
    raise InternalContradictionError("feasible split must exist under the precondition")
