"""Seed/shrublet decompositions of a tree: the plain and switched variants.

A tree is cut at a small set of seed vertices chosen root-downwards so
that every remaining component (shrublet) has at most `ell` vertices.
Seeds split by distance parity from the root into the two sides W_A/W_B;
shrublets attach to exactly one side.  The switched variant additionally
empties interior shrublets from the B side.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from math import ceil

from .errors import PreconditionError
from .trees import RootedTree


@dataclass
class FinePartition:
    WA: frozenset
    WB: frozenset
    DA: tuple[frozenset, ...]
    DB: tuple[frozenset, ...]
    variant: str            # "plain" | "switched"
    ell: int
    root: int
    root_side: str          # "A" | "B"


@dataclass
class FineReport:
    checks: dict[str, bool] = field(default_factory=dict)

    @property
    def ok(self) -> bool:
        return all(self.checks.values())

    def failed(self) -> list[str]:
        return [k for k, v in self.checks.items() if not v]


def _components(T: RootedTree, removed: set[int]) -> list[frozenset]:
    comps = []
    seen = set(removed)
    for v in range(T.n):
        if v in seen:
            continue
        comp = {v}
        stack = [v]
        seen.add(v)
        while stack:
            x = stack.pop()
            for u in T.adj[x]:
                if u not in seen:
                    seen.add(u)
                    comp.add(u)
                    stack.append(u)
        comps.append(frozenset(comp))
    return comps


def _seed(T: RootedTree, comp: frozenset) -> int:
    """Parent of the component's highest vertex (the cut vertex just above)."""
    top = min(comp, key=lambda v: T.depth[v])
    return T.parent[top]


def _is_end_subtree(T: RootedTree, comp: frozenset) -> bool:
    """comp equals everything below its own top vertex."""
    top = min(comp, key=lambda v: T.depth[v])
    return len(T.subtree_vertices(top)) == len(comp)


def fine_partition(T: RootedTree, R: int, ell: int) -> FinePartition:
    """Cut the tree rooted at R into seeds and shrublets of order <= ell.

    Cut vertices are picked lowest-first: while some vertex still has more
    than ell alive vertices below it, the deepest such vertex (lowest id on
    ties) becomes a cut and everything strictly below it is stripped.
    """
    if not (1 <= ell <= T.n - 1):
        raise PreconditionError(f"ell={ell} out of range [1, n-1]")
    T = T.rerooted(R)
    R = T.root
    alive = [True] * T.n
    cuts: list[int] = []
    max_rounds = ceil(T.n / ell) + 1
    while True:
        size = [1] * T.n
        for v in reversed(T.order):
            if not alive[v]:
                size[v] = 0
                continue
            for c in T.children[v]:
                size[v] += size[c]
        if not any(alive[v] and size[v] > ell for v in range(T.n)):
            cuts.append(R)
            break
        # a candidate is minimal iff no candidate sits strictly below it
        minimal = []
        has_cand_below = [False] * T.n
        for v in reversed(T.order):
            below = any(has_cand_below[c] or (alive[c] and size[c] > ell)
                        for c in T.children[v])
            has_cand_below[v] = below
            if alive[v] and size[v] > ell and not below:
                minimal.append(v)
        x = min(minimal)
        cuts.append(x)
        for v in T.subtree_vertices(x):
            if v != x:
                alive[v] = False
        assert len(cuts) <= max_rounds, "cut loop exceeded its bound"
    cut_set = set(cuts)
    A1 = {x for x in cut_set if T.depth[x] % 2 == 0}
    B1 = cut_set - A1
    comps = _components(T, cut_set)
    WA, WB = set(A1), set(B1)
    for comp in comps:
        s = _seed(T, comp)
        if s in A1:
            WA |= {v for v in comp if any(u in B1 for u in T.adj[v])}
        else:
            WB |= {v for v in comp if any(u in A1 for u in T.adj[v])}
    DA, DB = [], []
    for comp in _components(T, WA | WB):
        if _seed(T, comp) in WA:
            DA.append(comp)
        else:
            DB.append(comp)
    DA.sort(key=min)
    DB.sort(key=min)
    return FinePartition(frozenset(WA), frozenset(WB), tuple(DA), tuple(DB),
                         "plain", ell, R, "A")


def switched_fine_partition(T: RootedTree, R: int, ell: int) -> FinePartition:
    """Refine the plain partition so the B side keeps only end shrublets
    and the A side carries at least as much end-shrublet mass."""
    fp = fine_partition(T, R, ell)
    T = T.rerooted(R)
    WA, WB, DA, DB = set(fp.WA), set(fp.WB), list(fp.DA), list(fp.DB)
    root_side = "A"
    end_mass_A = sum(len(c) for c in DA if _is_end_subtree(T, c))
    end_mass_B = sum(len(c) for c in DB if _is_end_subtree(T, c))
    if end_mass_A < end_mass_B:
        WA, WB = WB, WA
        DA, DB = DB, DA
        root_side = "B"
    moved = set()
    for comp in DB:
        if not _is_end_subtree(T, comp):
            moved |= {v for v in comp if any(u in WB for u in T.adj[v])}
    WA |= moved
    DA2, DB2 = [], []
    for comp in _components(T, WA | WB):
        if _seed(T, comp) in WA:
            DA2.append(comp)
        else:
            DB2.append(comp)
    DA2.sort(key=min)
    DB2.sort(key=min)
    out = FinePartition(frozenset(WA), frozenset(WB), tuple(DA2), tuple(DB2),
                        "switched", ell, R, root_side)
    assert not any(not _is_end_subtree(T, c) for c in out.DB)
    return out


def validate_fine_partition(T: RootedTree, fp: FinePartition, k: int) -> FineReport:
    """Check every structural bullet of the claimed variant from scratch."""
    T = T.rerooted(fp.root)
    rep = FineReport()
    ch = rep.checks
    ell = fp.ell
    all_v = frozenset(range(T.n))
    da_verts = set().union(*fp.DA) if fp.DA else set()
    db_verts = set().union(*fp.DB) if fp.DB else set()
    parts = [fp.WA, fp.WB, da_verts, db_verts]
    ch["partition"] = (
        set().union(*parts) == all_v
        and sum(len(p) for p in parts) == T.n
    )
    if fp.variant == "plain":
        ch["root_in_WA"] = fp.root in fp.WA
    else:
        ch["root_in_WA_or_WB"] = fp.root in fp.WA | fp.WB
    ch["WA_even_WB_odd_distances"] = (
        len({T.depth[v] % 2 for v in fp.WA}) <= 1
        and len({T.depth[v] % 2 for v in fp.WB}) <= 1
        and (not fp.WA or not fp.WB
             or (min(T.depth[v] % 2 for v in fp.WA)
                 != min(T.depth[v] % 2 for v in fp.WB)))
    )
    comps = {frozenset(c) for c in _components(T, set(fp.WA | fp.WB))}
    ch["shrublets_are_components"] = set(fp.DA) | set(fp.DB) == comps and \
        not (set(fp.DA) & set(fp.DB))
    ch["DA_not_adjacent_WB"] = all(
        all(u not in fp.WB for v in comp for u in T.adj[v]) for comp in fp.DA)
    ch["DB_not_adjacent_WA"] = all(
        all(u not in fp.WA for v in comp for u in T.adj[v]) for comp in fp.DB)
    bound = Fraction(4 if fp.variant == "plain" else 12, 1) * k / ell
    ch["seed_size_bound"] = max(len(fp.WA), len(fp.WB)) <= bound
    ch["shrublet_order_bound"] = all(len(c) <= ell for c in fp.DA + fp.DB)
    ch["seeds_attach_by_side"] = all(_seed(T, c) in fp.WA for c in fp.DA) and \
        all(_seed(T, c) in fp.WB for c in fp.DB)
    if fp.variant == "switched":
        ch["DB_no_interior_tree"] = all(_is_end_subtree(T, c) for c in fp.DB)
        end_mass_A = sum(len(c) for c in fp.DA if _is_end_subtree(T, c))
        ch["end_mass_inequality"] = end_mass_A >= sum(len(c) for c in fp.DB)
    return rep
