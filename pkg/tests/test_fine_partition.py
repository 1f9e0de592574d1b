import pytest

from lkstools.errors import PreconditionError
from lkstools.fine_partition import (
    FinePartition,
    fine_partition,
    switched_fine_partition,
    validate_fine_partition,
)
from lkstools.trees import RootedTree, generate_trees


def path(n, root=0):
    return RootedTree.from_edges(n, [(i, i + 1) for i in range(n - 1)], root)


def star(m, root=0):
    return RootedTree.from_edges(m + 1, [(0, i) for i in range(1, m + 1)], root)


def test_path13_trace():
    # vertices 0..12 along the path, rooted at the end 0
    fp = fine_partition(path(13), 0, 4)
    assert fp.WA == {0, 4, 8}
    assert fp.WB == frozenset()
    assert set(fp.DA) == {frozenset({1, 2, 3}), frozenset({5, 6, 7}),
                          frozenset({9, 10, 11, 12})}
    assert fp.DB == ()
    assert validate_fine_partition(path(13), fp, 12).ok


def test_star_trace():
    fp = fine_partition(star(5), 0, 5)
    assert fp.WA == {0}
    assert len(fp.DA) == 5 and all(len(c) == 1 for c in fp.DA)
    assert validate_fine_partition(star(5), fp, 5).ok


def test_max_ell_puts_everything_below_root():
    for T in (path(7), star(4), path(6, root=3)):
        fp = fine_partition(T, T.root, T.n - 1)
        assert fp.WA == {T.root}
        assert set().union(*fp.DA) == set(range(T.n)) - {T.root}


def test_ell_out_of_range():
    with pytest.raises(PreconditionError):
        fine_partition(path(5), 0, 0)
    with pytest.raises(PreconditionError):
        fine_partition(path(5), 0, 5)


def test_switched_path13_unchanged():
    fp = switched_fine_partition(path(13), 0, 4)
    assert fp.variant == "switched"
    assert fp.WA == {0, 4, 8} and fp.WB == frozenset()
    assert validate_fine_partition(path(13), fp, 12).ok


def test_switched_star_unchanged():
    fp = switched_fine_partition(star(5), 0, 5)
    assert fp.WA == {0}
    assert validate_fine_partition(star(5), fp, 5).ok


def test_switched_swaps_when_B_carries_more_end_mass():
    # doubled broom: the plain partition hangs heavy end shrublets under B
    edges = [(0, 1), (1, 2), (2, 3), (3, 4), (3, 5), (3, 6), (3, 7)]
    T = RootedTree.from_edges(8, edges, 0)
    fp = switched_fine_partition(T, 0, 2)
    rep = validate_fine_partition(T, fp, 7)
    assert rep.ok, rep.failed()
    end_mass_A = sum(len(c) for c in fp.DA)
    assert end_mass_A >= sum(len(c) for c in fp.DB)


def test_validator_catches_corruption():
    T = path(13)
    fp = fine_partition(T, 0, 4)
    bad = FinePartition(fp.WA | {1}, fp.WB,
                        tuple(c - {1} for c in fp.DA), fp.DB,
                        fp.variant, fp.ell, fp.root, fp.root_side)
    rep = validate_fine_partition(T, bad, 12)
    assert not rep.ok


def exhaustive_suite(max_n):
    for n in range(2, max_n + 1):
        for T in generate_trees(n, "canonical"):
            for root in range(n):
                for ell in range(1, n):
                    for variant in (fine_partition, switched_fine_partition):
                        fp = variant(T, root, ell)
                        rep = validate_fine_partition(T, fp, n - 1)
                        assert rep.ok, (n, root, ell, fp.variant, rep.failed())


def test_exhaustive_small_trees():
    exhaustive_suite(7)
