"""Finite Ramsey search: colorings of the n-subsets of a universe and
monochromatic k-subsets."""

from __future__ import annotations

import json
from dataclasses import dataclass
from itertools import product as cartesian
from math import comb
from typing import Iterator, Optional

from .core import ResourceError, SetClassError, Subset, Universe, popcount

MAX_TUPLES = 20000


def k_subsets(size: int, k: int) -> Iterator[int]:
    """All k-subsets of ``size`` points as masks, ascending (which is colex order)."""
    if k == 0:
        yield 0
        return
    m = (1 << k) - 1
    limit = 1 << size
    while m < limit:
        yield m
        # next mask with the same popcount
        low = m & -m
        ripple = m + low
        m = (((ripple ^ m) >> 2) // low) | ripple


@dataclass
class Coloring:
    universe: Universe
    n: int
    m: int
    assignment: dict[int, int]

    def __post_init__(self):
        size = self.universe.size
        if not 0 <= self.n <= size:
            raise SetClassError(f"subset size n={self.n} out of range for {size} points")
        if self.m < 1:
            raise SetClassError("need at least one color")
        total = comb(size, self.n)
        if total > MAX_TUPLES:
            raise ResourceError(f"{total} colored {self.n}-subsets exceed cap {MAX_TUPLES}")
        keys = set(k_subsets(size, self.n))
        if set(self.assignment) != keys:
            missing = sorted(keys - set(self.assignment))
            extra = sorted(set(self.assignment) - keys)
            raise SetClassError(
                f"coloring must cover every {self.n}-subset exactly "
                f"(missing {len(missing)}, unexpected {len(extra)})"
            )
        for key, c in self.assignment.items():
            if not 0 <= c < self.m:
                raise SetClassError(f"color {c} of {Subset(self.universe, key)} outside 0..{self.m - 1}")


def monochromatic(coloring: Coloring, k: int) -> Optional[tuple[Subset, int]]:
    """First k-subset (colex order) whose n-subsets all share a color, with that color."""
    u = coloring.universe
    if not coloring.n <= k <= u.size:
        raise SetClassError(f"need n <= k <= |X|, got n={coloring.n}, k={k}, |X|={u.size}")
    col = coloring.assignment
    for s in k_subsets(u.size, k):
        colors = {col[t] for t in _sub_k_subsets(s, coloring.n)}
        if len(colors) == 1:
            return Subset(u, s), colors.pop()
    return None


def _sub_k_subsets(mask: int, n: int) -> Iterator[int]:
    """n-subsets of the points of ``mask``."""
    pts = [1 << i for i in range(mask.bit_length()) if mask >> i & 1]
    for sel in k_subsets(len(pts), n):
        out = 0
        i = 0
        while sel:
            if sel & 1:
                out |= pts[i]
            sel >>= 1
            i += 1
        yield out


def all_colorings(universe: Universe, n: int, m: int) -> Iterator[Coloring]:
    keys = list(k_subsets(universe.size, n))
    if m ** len(keys) > 1 << 24:
        raise ResourceError(f"{m}^{len(keys)} colorings exceed the exhaustive sweep cap")
    for colors in cartesian(range(m), repeat=len(keys)):
        yield Coloring(universe, n, m, dict(zip(keys, colors)))


def sweep(universe: Universe, n: int, m: int, k: int) -> tuple[int, Optional[Coloring]]:
    """Check every coloring; return how many were checked and the first without a witness."""
    keys = list(k_subsets(universe.size, n))
    if m ** len(keys) > 1 << 24:
        raise ResourceError(f"{m}^{len(keys)} colorings exceed the exhaustive sweep cap")
    if not n <= k <= universe.size:
        raise SetClassError(f"need n <= k <= |X|, got n={n}, k={k}, |X|={universe.size}")
    # each k-subset as the list of key positions it contains
    pos = {t: i for i, t in enumerate(keys)}
    groups = [[pos[t] for t in _sub_k_subsets(s, n)] for s in k_subsets(universe.size, k)]
    count = 0
    for colors in cartesian(range(m), repeat=len(keys)):
        count += 1
        if not any(len({colors[i] for i in g}) == 1 for g in groups):
            return count, Coloring(universe, n, m, dict(zip(keys, colors)))
    return count, None


def cycle_coloring(size: int) -> Coloring:
    """Pairs colored 0 when adjacent on the cycle 1-2-...-size-1, else 1."""
    u = Universe(f"C{size}", size)
    assignment = {}
    for t in k_subsets(size, 2):
        i, j = [b for b in range(size) if t >> b & 1]
        assignment[t] = 0 if (j - i) % size in (1, size - 1) else 1
    return Coloring(u, 2, 2, assignment)


def load_coloring(universe: Universe, text: str, m: Optional[int] = None) -> Coloring:
    """Parse a JSON list of ``[subset, color]`` pairs; subsets use labels or 1-based indices."""
    try:
        data = json.loads(text)
    except json.JSONDecodeError as exc:
        raise SetClassError(f"coloring JSON: {exc}") from None
    if not isinstance(data, list) or not data:
        raise SetClassError("coloring JSON must be a nonempty list of [subset, color] pairs")
    assignment = {}
    n = None
    for entry in data:
        if not (isinstance(entry, list) and len(entry) == 2 and isinstance(entry[1], int)):
            raise SetClassError(f"bad coloring entry {entry!r}")
        s = universe.subset(entry[0]).bits
        if n is None:
            n = popcount(s)
        if popcount(s) != n:
            raise SetClassError("all colored subsets must have the same size")
        if s in assignment:
            raise SetClassError(f"subset {Subset(universe, s)} colored twice")
        assignment[s] = entry[1]
    if m is None:
        m = max(assignment.values()) + 1
    return Coloring(universe, n, m, assignment)
