"""Ground representations: universes, subsets, classes, sequences, partitions.

Subsets are integer bitmasks over a fixed universe (bit ``i`` set means point
``i`` is a member).  Every higher-level algorithm works on the raw masks and
wraps results back into :class:`SetClass` at the boundary.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Iterable, Iterator, Optional, Sequence

MAX_UNIVERSE = 24


class SetClassError(ValueError):
    """Base error for rejected inputs."""


class UniverseMismatch(SetClassError):
    pass


class PreconditionError(SetClassError):
    pass


class ResourceError(SetClassError):
    """A size cap was exceeded."""


def popcount(x: int) -> int:
    return bin(x).count("1")


def bits_of(mask: int) -> Iterator[int]:
    """Yield the indices of set bits, ascending."""
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


@dataclass(frozen=True)
class Universe:
    name: str
    size: int
    point_labels: Optional[tuple[str, ...]] = None

    def __post_init__(self):
        if not isinstance(self.size, int) or self.size < 1:
            raise SetClassError(f"universe {self.name!r}: size must be >= 1, got {self.size}")
        if self.size > MAX_UNIVERSE:
            raise ResourceError(
                f"universe {self.name!r}: size {self.size} exceeds size cap {MAX_UNIVERSE}"
            )
        if self.point_labels is not None:
            labels = tuple(str(l) for l in self.point_labels)
            if len(labels) != self.size:
                raise SetClassError(f"universe {self.name!r}: need {self.size} labels, got {len(labels)}")
            if len(set(labels)) != len(labels):
                raise SetClassError(f"universe {self.name!r}: point labels must be distinct")
            object.__setattr__(self, "point_labels", labels)

    @property
    def full(self) -> int:
        return (1 << self.size) - 1

    def label(self, i: int) -> str:
        if self.point_labels is not None:
            return self.point_labels[i]
        return str(i + 1)

    def index(self, token: str) -> int:
        """Resolve a point label, or a 1-based index, to a 0-based point."""
        token = token.strip()
        if self.point_labels is not None and token in self.point_labels:
            return self.point_labels.index(token)
        try:
            k = int(token)
        except ValueError:
            raise SetClassError(f"unknown point {token!r} in universe {self.name!r}") from None
        if not 1 <= k <= self.size:
            raise SetClassError(f"point {k} out of range 1..{self.size} in universe {self.name!r}")
        return k - 1

    def subset(self, points: Iterable = ()) -> "Subset":
        """Build a subset from labels or 1-based indices."""
        mask = 0
        for p in points:
            mask |= 1 << self.index(str(p))
        return Subset(self, mask)

    def empty(self) -> "Subset":
        return Subset(self, 0)

    def whole(self) -> "Subset":
        return Subset(self, self.full)

    def powerset(self) -> "SetClass":
        if self.size > 16:
            raise ResourceError(f"powerset of {self.size} points exceeds cap 16")
        return SetClass(self, tuple(range(1 << self.size)))


def _check_same(u: Universe, v: Universe) -> None:
    if u != v:
        raise UniverseMismatch(f"universe mismatch: {u.name!r} (size {u.size}) vs {v.name!r} (size {v.size})")


@dataclass(frozen=True)
class Subset:
    universe: Universe
    bits: int

    def __post_init__(self):
        if self.bits < 0 or self.bits >> self.universe.size:
            raise SetClassError(f"bits {self.bits:#x} exceed width {self.universe.size}")

    def _other(self, other: "Subset") -> int:
        _check_same(self.universe, other.universe)
        return other.bits

    def __or__(self, other):
        return Subset(self.universe, self.bits | self._other(other))

    def __and__(self, other):
        return Subset(self.universe, self.bits & self._other(other))

    def __sub__(self, other):
        return Subset(self.universe, self.bits & ~self._other(other))

    def __xor__(self, other):
        return Subset(self.universe, self.bits ^ self._other(other))

    def complement(self) -> "Subset":
        return Subset(self.universe, self.universe.full & ~self.bits)

    def __le__(self, other):
        return self.bits & ~self._other(other) == 0

    def __lt__(self, other):
        # canonical numeric order, not inclusion
        return self.bits < self._other(other)

    def __len__(self):
        return popcount(self.bits)

    def __iter__(self):
        return bits_of(self.bits)

    def __contains__(self, point: int):
        return bool(self.bits >> point & 1)

    def labels(self) -> list[str]:
        return [self.universe.label(i) for i in self]

    def __str__(self):
        return "{" + ",".join(self.labels()) + "}"


def subset_op(a: Subset, b: Subset, kind: str) -> Subset:
    """Pointwise Boolean combination of two subsets of the same universe."""
    _check_same(a.universe, b.universe)
    if kind == "union":
        return a | b
    if kind == "intersection":
        return a & b
    if kind == "difference":
        return a - b
    if kind == "symmetric_difference":
        return (a | b) - (a & b)
    raise SetClassError(f"unknown subset operation {kind!r}")


@dataclass(frozen=True)
class SetClass:
    """A duplicate-free class of subsets, members ascending by mask value."""

    universe: Universe
    masks: tuple[int, ...]
    _lookup: frozenset = field(init=False, repr=False, compare=False, hash=False)

    def __post_init__(self):
        ms = tuple(sorted(set(self.masks)))
        full = self.universe.full
        for m in ms:
            if m < 0 or m & ~full:
                raise SetClassError(f"member {m:#x} exceeds width {self.universe.size}")
        object.__setattr__(self, "masks", ms)
        object.__setattr__(self, "_lookup", frozenset(ms))

    @classmethod
    def of(cls, universe: Universe, masks: Iterable[int]) -> "SetClass":
        return cls(universe, tuple(masks))

    @property
    def members(self) -> list[Subset]:
        return [Subset(self.universe, m) for m in self.masks]

    @property
    def maskset(self) -> frozenset:
        return self._lookup

    def __len__(self):
        return len(self.masks)

    def __iter__(self):
        return iter(self.members)

    def __contains__(self, item):
        if isinstance(item, Subset):
            _check_same(self.universe, item.universe)
            return item.bits in self._lookup
        return item in self._lookup

    def __le__(self, other: "SetClass"):
        _check_same(self.universe, other.universe)
        return self._lookup <= other._lookup

    def union_of_members(self) -> int:
        u = 0
        for m in self.masks:
            u |= m
        return u

    def __str__(self):
        return "[" + ",".join(str(s) for s in self.members) + "]"


def class_canonicalize(members: Sequence[Subset], universe: Optional[Universe] = None) -> SetClass:
    """Deduplicate and sort a list of subsets into a :class:`SetClass`."""
    if universe is None:
        if not members:
            raise SetClassError("cannot infer the universe of an empty member list")
        universe = members[0].universe
    for s in members:
        _check_same(universe, s.universe)
    return SetClass(universe, tuple(s.bits for s in members))


def same_universe(*items) -> Universe:
    u = items[0].universe
    for it in items[1:]:
        _check_same(u, it.universe)
    return u


def trace(cls: SetClass, x0: Subset) -> SetClass:
    """Restriction of a class to ``x0``: all ``S & x0``."""
    _check_same(cls.universe, x0.universe)
    return SetClass(cls.universe, tuple(m & x0.bits for m in cls.masks))


@dataclass(frozen=True)
class SetSeq:
    """Eventually periodic sequence ``prefix + cycle + cycle + ...`` (1-based terms)."""

    universe: Universe
    prefix: tuple[int, ...]
    cycle: tuple[int, ...]

    def __post_init__(self):
        object.__setattr__(self, "prefix", tuple(self.prefix))
        object.__setattr__(self, "cycle", tuple(self.cycle))
        if not self.cycle:
            raise SetClassError("sequence cycle must be nonempty")
        full = self.universe.full
        for m in self.prefix + self.cycle:
            if m < 0 or m & ~full:
                raise SetClassError(f"sequence term {m:#x} exceeds width {self.universe.size}")

    def term(self, i: int) -> int:
        """Mask of S_i, ``i >= 1``."""
        if i < 1:
            raise IndexError(i)
        p = len(self.prefix)
        if i <= p:
            return self.prefix[i - 1]
        return self.cycle[(i - p - 1) % len(self.cycle)]

    def terms(self, count: int) -> list[int]:
        return [self.term(i) for i in range(1, count + 1)]

    def map(self, fn) -> "SetSeq":
        return SetSeq(self.universe, tuple(map(fn, self.prefix)), tuple(map(fn, self.cycle)))

    def complement(self) -> "SetSeq":
        full = self.universe.full
        return self.map(lambda m: full & ~m)

    def __str__(self):
        fmt = lambda ms: "[" + ",".join(str(Subset(self.universe, m)) for m in ms) + "]"
        return f"prefix {fmt(self.prefix)} cycle {fmt(self.cycle)}"


def zip_seqs(a: SetSeq, b: SetSeq, fn) -> SetSeq:
    """Termwise combination of two sequences, realigned to a common period."""
    _check_same(a.universe, b.universe)
    from math import lcm

    p = max(len(a.prefix), len(b.prefix))
    c = lcm(len(a.cycle), len(b.cycle))
    pre = tuple(fn(a.term(i), b.term(i)) for i in range(1, p + 1))
    cyc = tuple(fn(a.term(i), b.term(i)) for i in range(p + 1, p + c + 1))
    return SetSeq(a.universe, pre, cyc)


@dataclass(frozen=True)
class Partition:
    """Blocks are nonempty, pairwise disjoint and cover the universe.

    ``blocks`` is kept in canonical order: ascending by least element.
    """

    universe: Universe
    blocks: tuple[int, ...]

    def __post_init__(self):
        blocks = tuple(sorted(self.blocks, key=lambda b: b & -b))
        seen = 0
        for b in blocks:
            if b == 0:
                raise SetClassError("partition blocks must be nonempty")
            if b & seen:
                raise SetClassError("partition blocks must be pairwise disjoint")
            seen |= b
        if seen != self.universe.full:
            raise SetClassError("partition blocks must cover the universe")
        object.__setattr__(self, "blocks", blocks)

    def as_class(self) -> SetClass:
        return SetClass(self.universe, self.blocks)

    def block_of(self, point: int) -> int:
        for b in self.blocks:
            if b >> point & 1:
                return b
        raise KeyError(point)

    def __len__(self):
        return len(self.blocks)

    def __str__(self):
        return "[" + ",".join("[" + ",".join(self.universe.label(i) for i in bits_of(b)) + "]" for b in self.blocks) + "]"
