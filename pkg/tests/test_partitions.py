import warnings

import pytest
from hypothesis import given, strategies as hs

from setclass.core import Partition, PreconditionError, ResourceError, SetClass, SetClassError, Universe
from setclass import partitions as pt
from setclass.structures import is_algebra
import oracles as orc

X3 = Universe("X", 3)
X4 = Universe("X", 4)


def cls(u, *sets):
    return SetClass(u, tuple(u.subset(s).bits for s in sets))


def part(u, *blocks):
    return pt.partition_of(u, blocks)


@hs.composite
def partitions_on(draw, u: Universe):
    # a random restricted-growth string
    labels = [0]
    for _ in range(1, u.size):
        labels.append(draw(hs.integers(0, max(labels) + 1)))
    blocks = [0] * (max(labels) + 1)
    for i, v in enumerate(labels):
        blocks[v] |= 1 << i
    return Partition(u, tuple(blocks))


partition_pairs = hs.integers(1, 7).map(lambda n: Universe("X", n)).flatmap(
    lambda u: hs.tuples(partitions_on(u), partitions_on(u), partitions_on(u)))


def test_refines_examples():
    singles = part(X3, [1], [2], [3])
    whole = part(X3, [1, 2, 3])
    a, b = part(X3, [1, 2], [3]), part(X3, [1], [2, 3])
    for p in pt.enumerate_partitions(X3):
        assert pt.refines(singles, p)
        assert pt.refines(p, whole)
    assert not pt.refines(a, b) and not pt.refines(b, a)


def test_meet_join_examples():
    assert pt.meet(part(X3, [1, 2], [3]), part(X3, [1], [2, 3])) == part(X3, [1], [2], [3])
    assert pt.join(part(X4, [1, 2], [3, 4]), part(X4, [2, 3], [1], [4])) == part(X4, [1, 2, 3, 4])
    p = part(X4, [1, 3], [2], [4])
    assert pt.meet(p, p) == p and pt.join(p, p) == p


def test_bell_examples_and_caps():
    assert [pt.bell(n) for n in (1, 3, 4)] == [1, 5, 15]
    assert pt.bell(200) > 0
    with pytest.raises(ResourceError):
        pt.bell(201)
    with pytest.raises(SetClassError):
        pt.bell(0)
    with pytest.raises(ResourceError):
        list(pt.enumerate_partitions(Universe("X", 13)))


@pytest.mark.parametrize("n", range(1, 9))
def test_enumeration_matches_brute_force(n):
    u = Universe("X", n)
    got = [tuple(sorted(p.blocks)) for p in pt.enumerate_partitions(u)]
    assert len(got) == len(set(got)) == pt.bell(n)
    brute = {tuple(sorted(orc.to_mask(b) for b in p)) for p in orc.set_partitions(list(range(n)))}
    assert set(got) == brute


def test_partition_from_class_examples():
    assert pt.partition_from_class(cls(X3, [1, 2], [2, 3])) == part(X3, [1], [2], [3])
    assert pt.partition_from_class(cls(X3, [1, 2, 3])) == part(X3, [1, 2, 3])
    assert pt.partition_from_class(cls(X3, [1], [2, 3])) == part(X3, [1], [2, 3])
    # cells outside the union form their own block
    assert pt.partition_from_class(cls(X3, [1])) == part(X3, [1], [2, 3])


def test_complete_algebra_examples():
    assert pt.complete_algebra(part(X3, [1], [2, 3])) == cls(X3, [], [1], [2, 3], [1, 2, 3])
    assert pt.complete_algebra(part(X3, [1], [2], [3])) == X3.powerset()
    for p in pt.enumerate_partitions(X4):
        alg = pt.complete_algebra(p)
        assert is_algebra(alg)
        assert pt.partition_of_complete_algebra(alg) == p
    with pytest.raises(PreconditionError):
        pt.partition_of_complete_algebra(cls(X3, [], [1]))


def test_s_partitions_examples():
    t = cls(X3, [], [1], [2], [3], [1, 2, 3])
    whole = X3.subset([1, 2, 3])
    assert sorted(pt.s_partitions(t, whole)) == [(1, 2, 4), (7,)]
    first = cls(X3, [], [1], [2, 3], [1, 2, 3])
    assert sorted(pt.s_partitions(first, whole)) == [(1, 6), (7,)]
    only = cls(X3, [1, 2])
    assert list(pt.s_partitions(only, X3.subset([1, 2]))) == [(3,)]
    assert pt.components(t, whole) == cls(X3, [1], [2], [3], [1, 2, 3])
    with pytest.raises(PreconditionError):
        list(pt.s_partitions(t, X3.subset([1, 2])))


def test_s_partitions_warns_when_not_multiplicative():
    c = cls(X3, [1, 2], [2, 3], [1, 2, 3], [1], [3])
    with pytest.warns(UserWarning):
        list(pt.s_partitions(c, X3.subset([1, 2, 3])))


@given(hs.integers(1, 4).map(lambda n: Universe("X", n)).flatmap(
    lambda u: hs.lists(hs.integers(0, u.full), min_size=1, max_size=5).map(lambda ms: SetClass(u, tuple(ms)))))
def test_s_partitions_match_tilings(c):
    with warnings.catch_warnings():
        warnings.simplefilter("ignore")
        for s in c.masks:
            got = {frozenset(cov) for cov in pt.s_partitions(c, c.members[c.masks.index(s)])}
            brute = {frozenset(orc.to_mask(x) for x in sel) for sel in orc.tilings(orc.to_set(s), orc.to_sets(c.masks))}
            assert got == brute


@given(partition_pairs)
def test_meet_and_join_are_bounds(triple):
    p, q, r = triple
    m, j = pt.meet(p, q), pt.join(p, q)
    assert pt.refines(m, p) and pt.refines(m, q)
    assert pt.refines(p, j) and pt.refines(q, j)
    if pt.refines(r, p) and pt.refines(r, q):
        assert pt.refines(r, m)
    if pt.refines(p, r) and pt.refines(q, r):
        assert pt.refines(j, r)
    # absorption and idempotence
    assert pt.meet(p, pt.join(p, q)) == p
    assert pt.join(p, pt.meet(p, q)) == p
    assert pt.meet(p, p) == p and pt.join(p, p) == p


@pytest.mark.parametrize("n", [1, 2, 3, 4])
def test_lattice_laws_exhaustive(n):
    u = Universe("X", n)
    ps = list(pt.enumerate_partitions(u))
    for p in ps:
        for q in ps:
            m, j = pt.meet(p, q), pt.join(p, q)
            assert pt.meet(p, j) == p and pt.join(p, m) == p
            assert m == pt.meet(q, p) and j == pt.join(q, p)
            # meet is the greatest common refinement, join the least common coarsening
            commons = [r for r in ps if pt.refines(r, p) and pt.refines(r, q)]
            assert all(pt.refines(r, m) for r in commons) and m in commons
            uppers = [r for r in ps if pt.refines(p, r) and pt.refines(q, r)]
            assert all(pt.refines(j, r) for r in uppers) and j in uppers


@given(hs.integers(1, 4).map(lambda n: Universe("X", n)).flatmap(
    lambda u: hs.lists(hs.integers(1, u.full), min_size=1, max_size=4).map(lambda ms: SetClass(u, tuple(ms)))))
def test_partition_from_class_is_coarsest(cover):
    p = pt.partition_from_class(cover)
    # each member is a union of blocks
    for m in cover.masks:
        assert all(b & m == 0 or b & ~m == 0 for b in p.blocks)
    # any partition splitting every member the same way refines it
    for q in pt.enumerate_partitions(cover.universe):
        if all(all(b & m == 0 or b & ~m == 0 for b in q.blocks) for m in cover.masks):
            assert pt.refines(q, p)


def test_partition_lattice_of_three_points():
    nodes = pt.partition_lattice(X3)
    assert len(nodes) == 5
    assert sum(len(n.covers) for n in nodes) == 6


def test_representatives():
    assert pt.representatives(part(X4, [2, 4], [1, 3])) == X4.subset([1, 2])
