"""Product universes, rectangles and sections, product classes, rectangle
partitions and networks, projections, and direct sums.

A product X x Y is an ordinary :class:`Universe` whose point ``i*|Y| + j``
is the pair (x_i, y_j), labelled ``"(x,y)"``.  Everything else in the
package then works on product subsets unchanged.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property
from itertools import product as cartesian
from typing import Optional, Sequence

from .core import (
    MAX_UNIVERSE,
    PreconditionError,
    ResourceError,
    SetClass,
    Subset,
    Universe,
    _check_same,
    bits_of,
)
from .setops import union_closure

MAX_DIRECT_SUM = 1 << 20


@dataclass(frozen=True)
class ProductSpace:
    x: Universe
    y: Universe

    def __post_init__(self):
        if self.x.size * self.y.size > MAX_UNIVERSE:
            raise ResourceError(
                f"product {self.x.size}x{self.y.size} exceeds size cap {MAX_UNIVERSE}"
            )

    @cached_property
    def universe(self) -> Universe:
        labels = tuple(f"({self.x.label(i)},{self.y.label(j)})"
                       for i in range(self.x.size) for j in range(self.y.size))
        return Universe(f"{self.x.name}x{self.y.name}", self.x.size * self.y.size, labels)

    def point(self, i: int, j: int) -> int:
        return i * self.y.size + j

    def rect_mask(self, sx: int, sy: int) -> int:
        ny = self.y.size
        out = 0
        for i in bits_of(sx):
            out |= sy << (i * ny)
        return out

    def rect(self, r: "Rectangle") -> Subset:
        _check_same(self.x, r.side_x.universe)
        _check_same(self.y, r.side_y.universe)
        return Subset(self.universe, self.rect_mask(r.side_x.bits, r.side_y.bits))

    def vertical_section(self, e: int, i: int) -> int:
        """E_x for the i-th point of X, as a mask over Y."""
        ny = self.y.size
        return (e >> (i * ny)) & ((1 << ny) - 1)

    def horizontal_section(self, e: int, j: int) -> int:
        """E^y for the j-th point of Y, as a mask over X."""
        ny = self.y.size
        out = 0
        for i in range(self.x.size):
            if e >> (i * ny + j) & 1:
                out |= 1 << i
        return out

    def sections(self, e: Subset) -> tuple[dict[int, Subset], dict[int, Subset]]:
        _check_same(self.universe, e.universe)
        vert = {i: Subset(self.y, self.vertical_section(e.bits, i)) for i in range(self.x.size)}
        horiz = {j: Subset(self.x, self.horizontal_section(e.bits, j)) for j in range(self.y.size)}
        return vert, horiz

    def project_x(self, e: int) -> int:
        return sum(1 << i for i in range(self.x.size) if self.vertical_section(e, i))

    def project_y(self, e: int) -> int:
        return sum(1 << j for j in range(self.y.size) if self.horizontal_section(e, j))

    def project(self, e: Subset) -> Subset:
        """Points x of X whose section E_x is nonempty."""
        _check_same(self.universe, e.universe)
        return Subset(self.x, self.project_x(e.bits))


@dataclass(frozen=True)
class Rectangle:
    side_x: Subset
    side_y: Subset

    @property
    def empty(self) -> bool:
        return self.side_x.bits == 0 or self.side_y.bits == 0

    def __eq__(self, other):
        if not isinstance(other, Rectangle):
            return NotImplemented
        if self.empty or other.empty:
            return self.empty and other.empty
        return self.side_x == other.side_x and self.side_y == other.side_y

    def __hash__(self):
        if self.empty:
            return hash(("empty-rect", self.side_x.universe, self.side_y.universe))
        return hash((self.side_x, self.side_y))

    def __and__(self, other: "Rectangle") -> "Rectangle":
        return Rectangle(self.side_x & other.side_x, self.side_y & other.side_y)

    def to_dict(self) -> dict:
        return {"x": self.side_x.labels(), "y": self.side_y.labels()}

    def __str__(self):
        return f"{self.side_x}x{self.side_y}"


def rect_difference(r1: Rectangle, r2: Rectangle) -> tuple[tuple[Rectangle, Rectangle], tuple[Rectangle, Rectangle]]:
    """The two ways of writing r1 - r2 as a disjoint union of two rectangles."""
    s1, t1, s2, t2 = r1.side_x, r1.side_y, r2.side_x, r2.side_y
    first = (Rectangle(s1 - s2, t1 & t2), Rectangle(s1, t1 - t2))
    second = (Rectangle(s1 - s2, t1), Rectangle(s1 & s2, t1 - t2))
    return first, second


def box_product(space: ProductSpace, s: SetClass, t: SetClass) -> SetClass:
    """All rectangles with sides in ``s`` and ``t``."""
    _check_same(space.x, s.universe)
    _check_same(space.y, t.universe)
    if not s.masks or not t.masks:
        raise PreconditionError("box_product: both classes must be nonempty")
    return SetClass(space.universe, tuple(space.rect_mask(a, b) for a in s.masks for b in t.masks))


def tensor_product(space: ProductSpace, s: SetClass, t: SetClass) -> SetClass:
    """Finite unions of rectangles; disjoint unions suffice when both sides are rings."""
    from .semiring_tools import kol_ring
    from .structures import is_ring

    box = box_product(space, s, t)
    if is_ring(s) and is_ring(t):
        return kol_ring(box)
    return SetClass(space.universe, tuple(union_closure(box.masks)))


@dataclass
class RectPartitionReport:
    direct: bool
    criterion: bool
    covers: bool
    sides_cover: bool
    overlap_witness: Optional[tuple[int, int]]

    @property
    def agree(self) -> bool:
        return self.direct == self.criterion

    def __bool__(self):
        return self.direct


def is_rect_partition(space: ProductSpace, r: Rectangle, pieces: Sequence[Rectangle]) -> RectPartitionReport:
    """Check a rectangle partition directly and by the side-wise criterion, independently."""
    if r.empty:
        raise PreconditionError("is_rect_partition: rectangle must be nonempty")
    if any(p.empty for p in pieces):
        raise PreconditionError("is_rect_partition: pieces must be nonempty rectangles")
    target = space.rect(r).bits
    masks = [space.rect(p).bits for p in pieces]

    # direct: pairwise disjoint point sets whose union is the rectangle
    seen = 0
    disjoint = True
    for m in masks:
        if m & seen:
            disjoint = False
        seen |= m
    direct = disjoint and seen == target

    union = 0
    ux = uy = 0
    for m, p in zip(masks, pieces):
        union |= m
        ux |= p.side_x.bits
        uy |= p.side_y.bits
    covers = union == target
    sides_cover = ux == r.side_x.bits and uy == r.side_y.bits
    witness = None
    for k in range(len(pieces)):
        for l in range(k + 1, len(pieces)):
            a, b = pieces[k], pieces[l]
            if a.side_x.bits & b.side_x.bits and a.side_y.bits & b.side_y.bits:
                witness = (k, l)
                break
        if witness:
            break
    criterion = covers and sides_cover and witness is None
    return RectPartitionReport(direct, criterion, covers, sides_cover, witness)


def is_network(space: ProductSpace, r: Rectangle, pieces: Sequence[Rectangle]) -> bool:
    """Projections of the pieces partition the projections of ``r`` (repeats allowed)."""
    def partitions(side: int, parts: list[int]) -> bool:
        distinct = sorted(set(parts))
        acc = 0
        for p in distinct:
            if p & acc:
                return False
            acc |= p
        return acc == side

    return (partitions(r.side_x.bits, [p.side_x.bits for p in pieces])
            and partitions(r.side_y.bits, [p.side_y.bits for p in pieces]))


def _side_classes(points: int, other_points: int, piece_at) -> list[int]:
    """Group points of one side: two points are equivalent when every point
    of the other side sends them to the same piece."""
    groups: dict[tuple, int] = {}
    for i in bits_of(points):
        key = tuple(piece_at(i, j) for j in bits_of(other_points))
        groups[key] = groups.get(key, 0) | (1 << i)
    return sorted(groups.values())


def network_refine(space: ProductSpace, r: Rectangle, partition: Sequence[Rectangle]) -> list[Rectangle]:
    """Grid refinement of a rectangle partition built from the side equivalences."""
    rep = is_rect_partition(space, r, partition)
    if not rep.direct:
        raise PreconditionError("network_refine: pieces do not partition the rectangle")
    masks = [space.rect(p).bits for p in partition]

    def piece_at(i, j):
        pt = 1 << space.point(i, j)
        return next(k for k, m in enumerate(masks) if m & pt)

    xs = _side_classes(r.side_x.bits, r.side_y.bits, piece_at)
    ys = _side_classes(r.side_y.bits, r.side_x.bits, lambda j, i: piece_at(i, j))
    return [Rectangle(Subset(space.x, a), Subset(space.y, b)) for a, b in cartesian(xs, ys)]


def direct_sum(classes: Sequence[SetClass]) -> tuple[Universe, list[int], SetClass]:
    """Direct sum over the disjoint union of the factor universes.

    Returns the tagged universe, the offset of each factor, and the class of
    all sets whose trace on every factor lies in that factor's class.
    """
    if not classes:
        raise PreconditionError("direct_sum: need at least one class")
    total = sum(c.universe.size for c in classes)
    if total > MAX_UNIVERSE:
        raise ResourceError(f"direct sum of size {total} exceeds size cap {MAX_UNIVERSE}")
    count = 1
    for c in classes:
        count *= len(c)
    if count > MAX_DIRECT_SUM:
        raise ResourceError(f"direct sum would have {count} members, cap {MAX_DIRECT_SUM}")
    labels = []
    offsets = []
    for k, c in enumerate(classes):
        offsets.append(len(labels))
        labels += [f"{k + 1}:{c.universe.label(i)}" for i in range(c.universe.size)]
    u = Universe("+".join(c.universe.name for c in classes), total, tuple(labels))
    members = []
    for combo in cartesian(*(c.masks for c in classes)):
        members.append(sum(m << off for m, off in zip(combo, offsets)))
    return u, offsets, SetClass(u, tuple(members))
