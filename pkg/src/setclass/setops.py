"""Subscript operators on classes, operator words, and limits of set sequences.

On a finite universe the countable operators coincide with the finite ones:
``sigma`` is ``s`` and ``delta`` is ``d``.  Words that use the arbitrary or
countable spellings still evaluate, and :class:`OpWord` records that the
answer is a finite collapse.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from typing import Optional

from .core import PreconditionError, ResourceError, SetClass, SetClassError, SetSeq, Subset

MAX_WORD = 8

# code -> (canonical code, collapsed-from-countable?)
_ALIASES = {
    "s": ("s", False),
    "d": ("d", False),
    "s_d": ("sd", False),
    "sd": ("sd", False),
    "r": ("r", False),
    "c": ("c", False),
    "S": ("s", True),
    "Sigma": ("s", True),
    "sigma": ("s", True),
    "σ": ("s", True),
    "Σ": ("s", True),
    "D": ("d", True),
    "Delta": ("d", True),
    "delta": ("d", True),
    "δ": ("d", True),
    "Δ": ("d", True),
    "sigma_d": ("sd", True),
    "σ_d": ("sd", True),
}

_TOKEN = re.compile(r"Sigma|Delta|sigma_d|sigma|delta|σ_d|s_d|[sdrcSDσδΣΔ]")


@dataclass(frozen=True)
class OpWord:
    codes: tuple[str, ...]
    collapsed: bool = False

    @classmethod
    def parse(cls, text: str) -> "OpWord":
        """Parse a juxtaposed word such as ``"rsrs"`` or ``"SigmaDelta"``.

        Disjoint unions are spelled ``s_d`` inside a word (plain ``sd`` reads
        as ``s`` then ``d``).  Whitespace or comma separated token lists are
        accepted too, and there a bare ``sd`` token means disjoint unions.
        """
        text = text.strip()
        if not text:
            raise SetClassError("empty operator word")
        raw: list[str] = []
        if re.search(r"[\s,]", text):
            raw = [t for t in re.split(r"[\s,]+", text) if t]
            for t in raw:
                if t not in _ALIASES:
                    raise SetClassError(f"unknown operator {t!r}")
        else:
            pos = 0
            while pos < len(text):
                m = _TOKEN.match(text, pos)
                if not m:
                    raise SetClassError(f"bad operator word {text!r} at position {pos}")
                raw.append(m.group(0))
                pos = m.end()
        if len(raw) > MAX_WORD:
            raise ResourceError(f"operator word of length {len(raw)} exceeds cap {MAX_WORD}")
        codes = tuple(_ALIASES[t][0] for t in raw)
        collapsed = any(_ALIASES[t][1] for t in raw)
        return cls(codes, collapsed)

    def __str__(self):
        return "".join("s_d" if c == "sd" else c for c in self.codes)


def union_closure(masks) -> set[int]:
    """All nonempty finite unions of members (members included)."""
    base = set(masks)
    out = set(base)
    frontier = list(base)
    while frontier:
        new = []
        for x in frontier:
            for m in base:
                y = x | m
                if y not in out:
                    out.add(y)
                    new.append(y)
        frontier = new
    return out


def intersection_closure(masks) -> set[int]:
    base = set(masks)
    out = set(base)
    frontier = list(base)
    while frontier:
        new = []
        for x in frontier:
            for m in base:
                y = x & m
                if y not in out:
                    out.add(y)
                    new.append(y)
        frontier = new
    return out


def disjoint_union_closure(masks) -> set[int]:
    """All nonempty finite unions of pairwise disjoint members.

    A partial union ``u`` can be extended by ``m`` exactly when ``m & u == 0``,
    so the union value alone is enough state.
    """
    base = set(masks)
    out = set(base)
    frontier = list(base)
    while frontier:
        new = []
        for x in frontier:
            for m in base:
                if m & x == 0:
                    y = x | m
                    if y not in out:
                        out.add(y)
                        new.append(y)
        frontier = new
    return out


def apply_masks(masks, code: str, full: int) -> set[int]:
    masks = set(masks)
    if not masks:
        raise PreconditionError("operators act on nonempty classes")
    if code == "s":
        return union_closure(masks)
    if code == "d":
        return intersection_closure(masks)
    if code == "sd":
        return disjoint_union_closure(masks)
    if code == "r":
        return masks | {a & ~b for a in masks for b in masks}
    if code == "c":
        return {full & ~a for a in masks}
    raise SetClassError(f"unknown operator code {code!r}")


def apply(cls: SetClass, op: str) -> SetClass:
    """Apply one operator code (``s``, ``d``, ``sd``, ``r``, ``c`` or an alias)."""
    if op in _ALIASES:
        op = _ALIASES[op][0]
    return SetClass(cls.universe, tuple(apply_masks(cls.masks, op, cls.universe.full)))


def apply_word(cls: SetClass, word) -> SetClass:
    """Left-to-right composition: ``"rs"`` means ``(S_r)_s``."""
    if isinstance(word, str):
        word = OpWord.parse(word)
    masks = set(cls.masks)
    full = cls.universe.full
    for code in word.codes:
        masks = apply_masks(masks, code, full)
    return SetClass(cls.universe, tuple(masks))


def limsup_seq(seq: SetSeq) -> Subset:
    """Points lying in infinitely many terms: the union over one cycle."""
    u = 0
    for m in seq.cycle:
        u |= m
    return Subset(seq.universe, u)


def liminf_seq(seq: SetSeq) -> Subset:
    """Points lying in all but finitely many terms: the intersection over one cycle."""
    u = seq.universe.full
    for m in seq.cycle:
        u &= m
    return Subset(seq.universe, u)


def lim_seq(seq: SetSeq) -> Optional[Subset]:
    hi, lo = limsup_seq(seq), liminf_seq(seq)
    return hi if hi.bits == lo.bits else None


def partial_unions(seq: SetSeq) -> SetSeq:
    """The increasing sequence S_1, S_1|S_2, ..., realized with a stabilized cycle."""
    acc = 0
    pre = []
    for m in seq.prefix + seq.cycle:
        acc |= m
        pre.append(acc)
    return SetSeq(seq.universe, tuple(pre), (acc,))


def partial_intersections(seq: SetSeq) -> SetSeq:
    acc = seq.universe.full
    pre = []
    for m in seq.prefix + seq.cycle:
        acc &= m
        pre.append(acc)
    return SetSeq(seq.universe, tuple(pre), (acc,))


def seq_union(seq: SetSeq) -> Subset:
    u = 0
    for m in seq.prefix + seq.cycle:
        u |= m
    return Subset(seq.universe, u)


def seq_intersection(seq: SetSeq) -> Subset:
    u = seq.universe.full
    for m in seq.prefix + seq.cycle:
        u &= m
    return Subset(seq.universe, u)
