"""Exact-cover search over bitmask families."""

from __future__ import annotations

from typing import Iterable, Iterator


def exact_covers(target: int, candidates: Iterable[int]) -> Iterator[tuple[int, ...]]:
    """Yield every way to write ``target`` as a disjoint union of nonempty candidates.

    The lowest uncovered point is branched on and candidates are tried in
    ascending mask order, so each cover comes out with its blocks ordered by
    least element and covers arrive in lexicographic order of that tuple.
    """
    pool = sorted({c for c in candidates if c and c & ~target == 0})
    chosen: list[int] = []

    def rec(remaining: int) -> Iterator[tuple[int, ...]]:
        if remaining == 0:
            yield tuple(chosen)
            return
        low = remaining & -remaining
        for c in _containing(low):
            if c & ~remaining == 0:
                chosen.append(c)
                yield from rec(remaining & ~c)
                chosen.pop()

    containing: dict[int, list[int]] = {}

    def _containing(low: int) -> list[int]:
        if low not in containing:
            containing[low] = [c for c in pool if c & low]
        return containing[low]

    yield from rec(target)


def first_cover(target: int, candidates: Iterable[int]):
    """Least exact cover in canonical order, or ``None``."""
    for cov in exact_covers(target, candidates):
        return cov
    return None


def has_cover(target: int, candidates: Iterable[int]) -> bool:
    if target == 0:
        return True
    return first_cover(target, candidates) is not None
