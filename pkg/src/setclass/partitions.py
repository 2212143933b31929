"""Partitions: refinement, meet and join, enumeration, Bell numbers, and
the correspondence between partitions and complete algebras."""

from __future__ import annotations

import warnings
from dataclasses import dataclass
from functools import lru_cache
from math import comb
from typing import Iterator

from .core import (
    Partition,
    PreconditionError,
    ResourceError,
    SetClass,
    SetClassError,
    Subset,
    Universe,
    _check_same,
)
from .cover import exact_covers

MAX_ENUMERATE = 12
MAX_BELL = 200


def refines(q: Partition, p: Partition) -> bool:
    """True iff every block of ``q`` lies inside a block of ``p``."""
    _check_same(q.universe, p.universe)
    return all(any(b & ~c == 0 for c in p.blocks) for b in q.blocks)


def meet(p1: Partition, p2: Partition) -> Partition:
    _check_same(p1.universe, p2.universe)
    return Partition(p1.universe, tuple(a & b for a in p1.blocks for b in p2.blocks if a & b))


def join(p1: Partition, p2: Partition) -> Partition:
    """Connected components of the relation 'lie in a common block'."""
    _check_same(p1.universe, p2.universe)
    pending = list(p1.blocks) + list(p2.blocks)
    out = []
    while pending:
        comp = pending.pop()
        grew = True
        while grew:
            grew = False
            rest = []
            for b in pending:
                if b & comp:
                    comp |= b
                    grew = True
                else:
                    rest.append(b)
            pending = rest
        out.append(comp)
    return Partition(p1.universe, tuple(out))


def _restricted_growth(n: int) -> Iterator[list[int]]:
    a = [0] * n

    def rec(i: int, top: int):
        if i == n:
            yield a
            return
        for v in range(top + 2):
            a[i] = v
            yield from rec(i + 1, max(top, v))

    if n:
        yield from rec(1, 0)


def enumerate_partitions(universe: Universe) -> Iterator[Partition]:
    """Every partition of the universe, once each, in restricted-growth order."""
    n = universe.size
    if n > MAX_ENUMERATE:
        raise ResourceError(f"partition enumeration on {n} points exceeds cap {MAX_ENUMERATE}")
    for rg in _restricted_growth(n):
        blocks = [0] * (max(rg) + 1)
        for i, v in enumerate(rg):
            blocks[v] |= 1 << i
        yield Partition(universe, tuple(blocks))


@lru_cache(maxsize=None)
def _bell_table(n: int) -> tuple[int, ...]:
    p = [0, 1]
    for m in range(1, n):
        p.append(1 + sum(comb(m, k) * p[k] for k in range(1, m + 1)))
    return tuple(p)


def bell(n: int) -> int:
    """Number of partitions of an n-point set, from p_{n+1} = 1 + sum_k C(n,k) p_k."""
    if not isinstance(n, int) or n < 1:
        raise SetClassError(f"bell: n must be a positive integer, got {n!r}")
    if n > MAX_BELL:
        raise ResourceError(f"bell: n={n} exceeds cap {MAX_BELL}")
    return _bell_table(MAX_BELL)[n]


def partition_from_class(cover: SetClass) -> Partition:
    """Nonempty Venn cells of the members, including the cell outside all of them."""
    cells = {cover.universe.full}
    for m in cover.masks:
        cells = {c & m for c in cells} | {c & ~m for c in cells}
        cells.discard(0)
    return Partition(cover.universe, tuple(cells))


def complete_algebra(partition: Partition) -> SetClass:
    """All unions of blocks, the empty union included."""
    out = [0]
    for b in partition.blocks:
        out += [x | b for x in out]
    return SetClass(partition.universe, tuple(out))


def partition_of_complete_algebra(algebra: SetClass) -> Partition:
    from .structures import atoms_masks, is_algebra

    if not is_algebra(algebra):
        raise PreconditionError("partition_of_complete_algebra: class is not an algebra containing X")
    return Partition(algebra.universe, tuple(atoms_masks(algebra.masks)))


def representatives(partition: Partition) -> Subset:
    """One point per block: the least."""
    return Subset(partition.universe, sum(b & -b for b in partition.blocks))


def s_partitions(cls: SetClass, s: Subset) -> Iterator[tuple[int, ...]]:
    """Every partition of ``s`` into members of the class, blocks ordered by least element.

    Results come in lexicographic order of the block tuples.
    """
    _check_same(cls.universe, s.universe)
    if s.bits not in cls.maskset:
        raise PreconditionError(f"s_partitions: {s} is not a member of the class")
    from .structures import multiplicative_witness

    if multiplicative_witness(cls) is not None:
        warnings.warn("class is not multiplicative; meets of its partitions may leave it", stacklevel=2)
    if s.bits == 0:
        yield ()
        return
    yield from exact_covers(s.bits, cls.masks)


def components(cls: SetClass, s: Subset) -> SetClass:
    """All members that occur as a block of some partition of ``s`` by the class."""
    seen: set[int] = set()
    for cov in s_partitions(cls, s):
        seen.update(cov)
    return SetClass(cls.universe, tuple(seen))


@dataclass
class PartitionLatticeNode:
    partition: Partition
    covers: list[int]


def partition_lattice(universe: Universe) -> list[PartitionLatticeNode]:
    """All partitions with the indices of their immediate refinements."""
    parts = list(enumerate_partitions(universe))
    below = [{j for j, q in enumerate(parts) if j != i and refines(q, p)} for i, p in enumerate(parts)]
    nodes = []
    for i, p in enumerate(parts):
        # q is covered by p when nothing lies strictly between them
        covers = sorted(j for j in below[i] if not any(j in below[k] for k in below[i]))
        nodes.append(PartitionLatticeNode(p, covers))
    return nodes


def partition_of(universe: Universe, blocks) -> Partition:
    """Build a partition from iterables of labels or 1-based indices."""
    return Partition(universe, tuple(universe.subset(b).bits for b in blocks))

