"""Constructive semiring procedures: extending disjoint families to partitions,
disjoint refinement of finite families, and the ring of disjoint unions."""

from __future__ import annotations

from dataclasses import dataclass

from .core import PreconditionError, SetClass, Subset, _check_same
from .cover import first_cover, has_cover
from .setops import disjoint_union_closure
from . import structures as st


def _require_semiring(semiring: SetClass):
    w = st.semiring_witness(semiring)
    if w is not None:
        raise PreconditionError(f"not a semiring (witness {w})")


def _fmt(u, m):
    return str(Subset(u, m))


def _complete(semiring_masks, outer: int, inner: int) -> tuple[int, ...]:
    """Least partition of ``outer - inner`` by members (``outer`` contains ``inner``)."""
    rest = outer & ~inner
    if rest == 0:
        return ()
    cov = first_cover(rest, semiring_masks)
    if cov is None:
        raise PreconditionError("semiring partition condition fails")
    return cov


def extend_to_partition_masks(semiring: SetClass, s: int, family) -> tuple[int, ...]:
    family = list(family)
    if not family:
        return (s,)
    masks = semiring.masks
    # stage 1: s split around the first family member
    pieces = [family[0]] + list(_complete(masks, s, family[0]))
    for t in family[1:]:
        nxt = []
        for p in pieces:
            if p & t == 0:
                nxt.append(p)
                continue
            # only complement pieces meet t; keep a tiling of the part outside t
            nxt.extend(_complete(masks, p, p & t))
        nxt.append(t)
        pieces = nxt
    return tuple(sorted(pieces, key=lambda b: b & -b))


def extend_to_partition(semiring: SetClass, s: Subset, family: SetClass) -> SetClass:
    """A partition of ``s`` by semiring members having every family member as a block."""
    u = semiring.universe
    _check_same(u, s.universe)
    _check_same(u, family.universe)
    _require_semiring(semiring)
    if s.bits not in semiring.maskset:
        raise PreconditionError(f"{s} is not a semiring member")
    fam = list(family.masks)
    for i, a in enumerate(fam):
        if a == 0:
            raise PreconditionError("family members must be nonempty")
        if a not in semiring.maskset:
            raise PreconditionError(f"family member {_fmt(u, a)} is not a semiring member")
        if a & ~s.bits:
            raise PreconditionError(f"family member {_fmt(u, a)} is not contained in {s}")
        for b in fam[i + 1:]:
            if a & b:
                raise PreconditionError(f"family members {_fmt(u, a)} and {_fmt(u, b)} overlap")
    return SetClass(u, extend_to_partition_masks(semiring, s.bits, fam))


@dataclass
class DisjointDecomposition:
    inputs: tuple[int, ...]
    parts: list[tuple[int, SetClass]]

    def all_pieces(self) -> list[int]:
        return [m for _, cls in self.parts for m in cls.masks]

    def to_dict(self) -> dict:
        from .export import class_json

        return {str(i): class_json(cls) for i, cls in self.parts}


def disjoint_refinement(semiring: SetClass, inputs: SetClass) -> DisjointDecomposition:
    """Split inputs (in canonical order) into pairwise disjoint semiring members.

    Each new input is partitioned around its overlaps with earlier pieces;
    the blocks outside those overlaps become its own pieces.
    """
    u = semiring.universe
    _check_same(u, inputs.universe)
    _require_semiring(semiring)
    for m in inputs.masks:
        if m == 0:
            raise PreconditionError("inputs must be nonempty")
        if m not in semiring.maskset:
            raise PreconditionError(f"input {_fmt(u, m)} is not a semiring member")
    pieces: list[int] = []
    parts = []
    for idx, s in enumerate(inputs.masks):
        overlaps = sorted(s & p for p in pieces if s & p)
        blocks = extend_to_partition_masks(semiring, s, overlaps)
        own = [b for b in blocks if b not in overlaps]
        pieces.extend(own)
        parts.append((idx, SetClass(u, tuple(own))))
    return DisjointDecomposition(inputs.masks, parts)


def kol_ring(semiring: SetClass) -> SetClass:
    """All finite disjoint unions of members, the empty union included."""
    _require_semiring(semiring)
    out = SetClass(semiring.universe, tuple(disjoint_union_closure(semiring.masks) | {0}))
    w = st.ring_witness(out)
    if w is not None:
        raise AssertionError(f"disjoint unions of a semiring failed the ring test: {w}")
    return out


@dataclass
class EquivalenceReport:
    semiring: bool
    disjoint_unions_ring: bool
    common_refinement: bool

    @property
    def agree(self) -> bool:
        return self.semiring == self.disjoint_unions_ring == self.common_refinement


def semiring_equivalences(cls: SetClass) -> EquivalenceReport:
    """Three characterizations of a semiring among multiplicative classes with the empty set."""
    if 0 not in cls.maskset:
        raise PreconditionError("semiring_equivalences: class must contain the empty set")
    w = st.multiplicative_witness(cls)
    if w is not None:
        raise PreconditionError(f"semiring_equivalences: class not multiplicative (witness {w})")
    u = cls.universe
    sem = st.semiring_witness(cls) is None
    ring = st.is_ring(SetClass(u, tuple(disjoint_union_closure(cls.masks) | {0})))
    # a common disjoint refinement of the whole class serves every selection; its
    # blocks sit inside the Venn cells, so each cell must be tiled by members
    cells = {cls.union_of_members()}
    for m in cls.masks:
        cells = {c & m for c in cells} | {c & ~m for c in cells}
        cells.discard(0)
    refinement = all(has_cover(c, cls.masks) for c in cells)
    return EquivalenceReport(sem, ring, refinement)
