"""Pair densities, regularity testing, typical vertices, cluster graphs
and the packedness predicate.  All densities are exact rationals; the
exact tester is complete because for a fixed side-subset the extremal
densities over the other side are attained by taking the highest- or
lowest-degree vertices."""

from __future__ import annotations

import random
from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations
from typing import Iterable, Sequence

from .errors import InputError
from .graphs import Graph, bits, edge_count, mask_of


@dataclass
class RegularPairReport:
    density: Fraction
    verdict: str                     # "regular" | "irregular" | "sampled-likely-regular"
    witness: tuple[tuple[int, ...], tuple[int, ...]] | None
    eps: Fraction
    mode: str


@dataclass
class ClusterGraph:
    clusters: list[frozenset]
    exceptional: frozenset
    edges: dict[tuple[int, int], Fraction]   # (i, j) -> average degree weight
    large_flags: list[bool]


@dataclass
class PackednessParams:
    lam: Fraction
    tau: Fraction
    i: int
    mu: Fraction | None = None
    nu: Fraction | None = None


def pair_density(G: Graph, A: Iterable[int], B: Iterable[int]) -> Fraction:
    A, B = set(A), set(B)
    if not A or not B:
        raise InputError("density needs nonempty sides")
    if A & B:
        raise InputError("density sides must be disjoint")
    return Fraction(edge_count(G, A, B), len(A) * len(B))


def _min_significant(eps: Fraction, size: int) -> int:
    """Smallest integer strictly above eps*size."""
    t = eps * size
    fl = t.numerator // t.denominator
    return fl + 1


def regular_pair_test(G: Graph, A: Sequence[int], B: Sequence[int], eps,
                      mode: str = "exact", trials: int = 1000,
                      seed: int = 0) -> RegularPairReport:
    """Check whether all significant sub-pair densities stay within eps.

    exact mode (sides capped at 16): enumerate subsets X of A; for each
    size of Y the extremal densities use the most/least X-adjacent
    vertices of B, which covers every possible witness.  sampled mode
    draws subset pairs at the minimal significant sizes; any reported
    witness is re-verified exactly.
    """
    A, B = sorted(set(A)), sorted(set(B))
    eps = Fraction(eps)
    if set(A) & set(B) or not A or not B:
        raise InputError("sides must be disjoint and nonempty")
    na, nb = len(A), len(B)
    bmask = mask_of(B)
    dens = pair_density(G, A, B)
    E_num = dens.numerator
    E_den = dens.denominator
    min_x = _min_significant(eps, na)
    min_y = _min_significant(eps, nb)
    if min_x > na or min_y > nb:
        # no significant subsets at all: vacuously regular
        return RegularPairReport(dens, "regular", None, eps, mode)

    def deviates(e, x, y):
        # |e/(x*y) - dens| >= eps, all integers
        lhs = abs(e * E_den - E_num * x * y) * eps.denominator
        return lhs >= eps.numerator * E_den * x * y

    if mode == "exact":
        if na > 16 or nb > 16:
            raise InputError("exact regularity testing capped at side size 16")
        for x in range(min_x, na + 1):
            for X in combinations(A, x):
                degs = sorted(((G.adj_mask[b] & mask_of(X)).bit_count(), b) for b in B)
                pref = [0]
                for d, _ in degs:
                    pref.append(pref[-1] + d)
                tot = pref[-1]
                for y in range(min_y, nb + 1):
                    lo = pref[y]
                    hi = tot - pref[nb - y]
                    for e, pick in ((lo, degs[:y]), (hi, degs[-y:])):
                        if deviates(e, x, y):
                            Y = tuple(sorted(b for _, b in pick))
                            return RegularPairReport(dens, "irregular",
                                                     (tuple(X), Y), eps, "exact")
        return RegularPairReport(dens, "regular", None, eps, "exact")
    if mode == "sampled":
        rng = random.Random(seed)
        for _ in range(trials):
            X = tuple(sorted(rng.sample(A, min_x)))
            Y = tuple(sorted(rng.sample(B, min_y)))
            e = 0
            ym = mask_of(Y)
            for v in X:
                e += (G.adj_mask[v] & ym).bit_count()
            if deviates(e, min_x, min_y):
                return RegularPairReport(dens, "irregular", (X, Y), eps, "sampled")
        return RegularPairReport(dens, "sampled-likely-regular", None, eps, "sampled")
    raise InputError(f"unknown mode {mode!r}")


def typical_vertices(G: Graph, X: Iterable[int], W: Iterable[int], eps, d) -> set[int]:
    """Vertices of X with degree into W at least (d - 2 eps)|W|."""
    W = set(W)
    eps, d = Fraction(eps), Fraction(d)
    wm = mask_of(W)
    thresh = (d - 2 * eps) * len(W)
    return {v for v in set(X) if G.deg_in(v, wm) >= thresh}


def build_cluster_graph(G: Graph, clusters: Sequence[Iterable[int]],
                        eps, density_threshold, degree_threshold,
                        exceptional: Iterable[int] = (),
                        large_vertices: Iterable[int] | None = None,
                        mode: str = "exact", trials: int = 1000,
                        seed: int = 0) -> ClusterGraph:
    """Weighted cluster graph over a supplied partition.

    Edges inside clusters, incident to the exceptional set, or between
    pairs that test irregular or below the density threshold are dropped;
    surviving pairs carry their average degree e(C,D)/|C| as weight.
    A cluster is flagged large when it consists of designated vertices
    and its cleaned average degree reaches the degree threshold.
    """
    clusters = [frozenset(c) for c in clusters]
    exceptional = frozenset(exceptional)
    eps = Fraction(eps)
    density_threshold = Fraction(density_threshold)
    degree_threshold = Fraction(degree_threshold)
    cover: set[int] = set(exceptional)
    for c in clusters:
        if c & cover:
            raise InputError("clusters must be disjoint")
        cover |= c
    if cover != set(range(G.n)):
        raise InputError("partition must cover the vertex set")
    sizes = {len(c) for c in clusters}
    if len(sizes) > 1:
        raise InputError("clusters must have equal sizes")
    edges: dict[tuple[int, int], Fraction] = {}
    kept: dict[int, list[int]] = {i: [] for i in range(len(clusters))}
    for i, j in combinations(range(len(clusters)), 2):
        Ci, Cj = clusters[i], clusters[j]
        rep = regular_pair_test(G, sorted(Ci), sorted(Cj), eps, mode=mode,
                                trials=trials, seed=seed + 7919 * (i * len(clusters) + j))
        if rep.verdict == "irregular" or rep.density < density_threshold:
            continue
        edges[(i, j)] = Fraction(edge_count(G, Ci, Cj), len(Ci))
        kept[i].append(j)
        kept[j].append(i)
    flags = []
    large = set(large_vertices) if large_vertices is not None else None
    covered = set().union(*clusters) if clusters else set()
    for i, c in enumerate(clusters):
        if large is not None and not c <= large:
            flags.append(False)
            continue
        wdeg = sum(edges[(min(i, j), max(i, j))] for j in kept[i])
        flags.append(wdeg >= degree_threshold)
    _ = covered
    return ClusterGraph(list(clusters), exceptional, edges, flags)


def packedness_params(G: Graph, Z: Iterable[int], X: Iterable[int], Y: Iterable[int],
                      lam, tau, i: int) -> PackednessParams:
    Z, X, Y = set(Z), set(X), set(Y)
    degZX = Fraction(edge_count(G, Z, X), len(Z))
    degZY = Fraction(edge_count(G, Z, Y), len(Z))
    return PackednessParams(Fraction(lam), Fraction(tau), i,
                            min(degZX, degZY), max(degZX, degZY))


def is_packed(U: Iterable[int], X: Iterable[int], Y: Iterable[int],
              Z: Iterable[int], params: PackednessParams, G: Graph) -> bool:
    """min{|X∩U|, |Y∩U|} >= min{i*mu, nu} - lam, or the two sides of U
    are balanced within tau; mu/nu recomputed from G."""
    U, X, Y, Z = set(U), set(X), set(Y), set(Z)
    if X & Y or X & Z or Y & Z:
        raise InputError("X, Y, Z must be disjoint")
    if not U <= X | Y:
        raise InputError("U must live inside the embedding sets")
    p = packedness_params(G, Z, X, Y, params.lam, params.tau, params.i)
    ux, uy = len(X & U), len(Y & U)
    if min(ux, uy) >= min(p.i * p.mu, p.nu) - p.lam:
        return True
    return abs(ux - uy) <= p.tau
