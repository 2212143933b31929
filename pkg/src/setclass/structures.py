"""Decision procedures for structures on classes, atoms, ideals and filters.

Every check is exact.  Where a notion has countable and finite variants
(sigma-semiring, delta-ring, countable chain condition, compactness)
the report carries the finite flag and lists the countable name as an alias.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Any, Optional

from .core import PreconditionError, SetClass, SetClassError, Subset
from .cover import has_cover

FINITE_COLLAPSE = "finite-collapse"

ALIASES = {
    "sigma_additive": "additive",
    "delta_multiplicative": "multiplicative",
    "sigma_lattice": "lattice",
    "delta_lattice": "lattice",
    "sigma_semiring": "semiring",
    "countable_chain_condition": "finite_chain_condition",
    "sigma_ring": "ring",
    "delta_ring": "ring",
    "sigma_algebra": "algebra",
    "delta_algebra": "algebra",
}


@dataclass(frozen=True)
class Flag:
    value: bool
    witness: Optional[tuple] = None
    note: Optional[str] = None

    def __bool__(self):
        return self.value

    def to_dict(self, universe) -> dict:
        d: dict[str, Any] = {"value": self.value}
        if self.witness is not None:
            d["witness"] = [sorted(universe.label(i) for i in Subset(universe, m)) if isinstance(m, int) else m
                            for m in self.witness]
        if self.note:
            d["note"] = self.note
        return d


def _pair_witness(masks, op, lookup) -> Optional[tuple[int, int]]:
    """Least pair (canonical order) whose combination leaves the class."""
    for i, a in enumerate(masks):
        for b in masks[i:]:
            if op(a, b) not in lookup:
                return (a, b)
    return None


def _ordered_pair_witness(masks, op, lookup, guard=None) -> Optional[tuple[int, int]]:
    for a in masks:
        for b in masks:
            if guard is not None and not guard(a, b):
                continue
            if op(a, b) not in lookup:
                return (a, b)
    return None


def multiplicative_witness(cls: SetClass):
    return _pair_witness(cls.masks, lambda a, b: a & b, cls.maskset)


def additive_witness(cls: SetClass):
    return _pair_witness(cls.masks, lambda a, b: a | b, cls.maskset)


def ring_witness(cls: SetClass):
    """First failure of the ring test: ``("empty",)``, ``("meet", a, b)`` or ``("sym", a, b)``."""
    lookup = cls.maskset
    if 0 not in lookup:
        return ("empty",)
    for i, a in enumerate(cls.masks):
        for b in cls.masks[i:]:
            if a & b not in lookup:
                return ("meet", a, b)
            if a ^ b not in lookup:
                return ("sym", a, b)
    return None


def is_multiplicative(cls: SetClass) -> bool:
    return len(cls) > 0 and multiplicative_witness(cls) is None


def is_additive(cls: SetClass) -> bool:
    return len(cls) > 0 and additive_witness(cls) is None


def is_lattice(cls: SetClass) -> bool:
    return 0 in cls.maskset and is_additive(cls) and is_multiplicative(cls)


def is_ring(cls: SetClass) -> bool:
    return len(cls) > 0 and ring_witness(cls) is None


def is_algebra(cls: SetClass) -> bool:
    return is_ring(cls) and cls.universe.full in cls.maskset


def semiring_witness(cls: SetClass):
    """``None`` when the class is a semiring, else the least failing evidence."""
    lookup = cls.maskset
    if 0 not in lookup:
        return ("empty",)
    w = multiplicative_witness(cls)
    if w is not None:
        return ("meet",) + w
    nonempty = [m for m in cls.masks if m]
    for s in nonempty:
        for t in nonempty:
            if t != s and t & ~s == 0 and not has_cover(s & ~t, cls.masks):
                return ("partition", s, t)
    return None


def is_semiring(cls: SetClass) -> bool:
    return semiring_witness(cls) is None


def chain_condition_witness(cls: SetClass):
    """Finite chain condition: for T <= S there is a chain T = S_1 <= ... <= S_k = S
    in the class whose successive differences are also in the class.

    Decided by reachability from T among class members between T and S.
    """
    lookup = cls.maskset
    if 0 not in lookup:
        return ("empty",)
    w = multiplicative_witness(cls)
    if w is not None:
        return ("meet",) + w
    for s in cls.masks:
        for t in cls.masks:
            if t & ~s or t == s:
                continue
            between = [m for m in cls.masks if t & ~m == 0 and m & ~s == 0]
            seen = {t}
            stack = [t]
            while stack:
                cur = stack.pop()
                for nxt in between:
                    if nxt not in seen and cur & ~nxt == 0 and (nxt & ~cur) in lookup:
                        seen.add(nxt)
                        stack.append(nxt)
            if s not in seen:
                return ("chain", s, t)
    return None


def is_dynkin(cls: SetClass) -> bool:
    return len(cls) > 0 and dynkin_witness(cls) is None


def dynkin_witness(cls: SetClass):
    """Closed under disjoint unions and proper differences."""
    lookup = cls.maskset
    ms = cls.masks
    w = _ordered_pair_witness(ms, lambda a, b: a | b, lookup, guard=lambda a, b: a & b == 0 and a <= b)
    if w is not None:
        return ("disjoint_union",) + w
    w = _ordered_pair_witness(ms, lambda a, b: a & ~b, lookup, guard=lambda a, b: b & ~a == 0)
    if w is not None:
        return ("difference",) + w
    return None


def is_filter(cls: SetClass) -> bool:
    return filter_witness(cls) is None


def filter_witness(cls: SetClass):
    lookup = cls.maskset
    if not cls.masks:
        return ("empty_class",)
    if 0 in lookup:
        return ("contains_empty",)
    w = multiplicative_witness(cls)
    if w is not None:
        return ("meet",) + w
    full = cls.universe.full
    for m in cls.masks:
        # one missing point at a time is enough for upward closure
        rest = full & ~m
        while rest:
            low = rest & -rest
            if m | low not in lookup:
                return ("upward", m, m | low)
            rest ^= low
    return None


def is_ultrafilter(cls: SetClass) -> bool:
    if not is_filter(cls):
        return False
    full = cls.universe.full
    lookup = cls.maskset
    return all(s in lookup or (full & ~s) in lookup for s in range(full + 1))


def is_filterbase(cls: SetClass) -> bool:
    if not cls.masks or 0 in cls.maskset:
        return False
    return all(any(c & ~(a & b) == 0 for c in cls.masks) for a in cls.masks for b in cls.masks)


def fip_witness(cls: SetClass):
    """Least subfamily (as a pair of its running intersection and the member) with empty meet."""
    # the meet of every finite subfamily is nonempty iff the meet of the whole class is
    acc = cls.universe.full
    for m in cls.masks:
        if acc & m == 0:
            return (acc, m)
        acc &= m
    return None


def has_fip(cls: SetClass) -> bool:
    return len(cls) > 0 and fip_witness(cls) is None


def generated_filter(cls: SetClass) -> SetClass:
    """Upward closure of the finite intersections of a class with the FIP."""
    if not has_fip(cls):
        raise PreconditionError("class lacks the finite intersection property")
    from .setops import intersection_closure

    base = intersection_closure(cls.masks)
    full = cls.universe.full
    return SetClass(cls.universe, tuple(s for s in range(full + 1) if any(b & ~s == 0 for b in base)))


def atoms_masks(masks) -> list[int]:
    nonempty = [m for m in masks if m]
    return [a for a in nonempty if not any(b != a and b & ~a == 0 for b in nonempty)]


def atoms(ring: SetClass) -> SetClass:
    """Minimal nonempty members of a ring."""
    if not is_ring(ring):
        raise PreconditionError(f"atoms: not a ring (witness {ring_witness(ring)})")
    return SetClass(ring.universe, tuple(atoms_masks(ring.masks)))


@dataclass
class StructureReport:
    universe: Any
    flags: dict[str, Flag] = field(default_factory=dict)

    def __getattr__(self, name):
        flags = self.__dict__.get("flags", {})
        if name in flags:
            return flags[name]
        if name in ALIASES and ALIASES[name] in flags:
            return flags[ALIASES[name]]
        raise AttributeError(name)

    def to_dict(self) -> dict:
        out = {k: v.to_dict(self.universe) for k, v in sorted(self.flags.items())}
        out["aliases"] = {k: {"of": v, "note": FINITE_COLLAPSE} for k, v in sorted(ALIASES.items())}
        return out


def _flag(witness, *, when_none=True, note=None) -> Flag:
    if witness is None:
        return Flag(when_none, None, note)
    return Flag(not when_none, tuple(witness), note)


def classify(cls: SetClass) -> StructureReport:
    """Evaluate every structure predicate on a nonempty class."""
    if not cls.masks:
        raise PreconditionError("classify: class is empty")
    u = cls.universe
    lookup = cls.maskset
    full = u.full
    has_empty = 0 in lookup
    f: dict[str, Flag] = {}

    f["multiplicative"] = _flag(multiplicative_witness(cls))
    f["additive"] = _flag(additive_witness(cls))
    f["contains_empty"] = Flag(has_empty)
    f["contains_universe"] = Flag(full in lookup)
    lat = has_empty and f["multiplicative"].value and f["additive"].value
    f["lattice"] = Flag(lat, None if lat else (f["additive"].witness or f["multiplicative"].witness or ("empty",)))
    f["semiring"] = _flag(semiring_witness(cls))
    f["finite_chain_condition"] = _flag(chain_condition_witness(cls))
    rw = ring_witness(cls)
    ring = rw is None
    f["ring"] = _flag(rw)
    union = cls.union_of_members()
    f["ring_with_unit"] = Flag(ring and union in lookup, None if ring else rw)
    f["algebra"] = Flag(ring and full in lookup, None if ring else rw)
    f["complete_ring"] = Flag(ring, None if ring else rw, note=FINITE_COLLAPSE)
    f["dynkin_class"] = _flag(dynkin_witness(cls))
    f["filter"] = _flag(filter_witness(cls))
    f["ultrafilter"] = Flag(is_ultrafilter(cls))
    f["filterbase"] = Flag(is_filterbase(cls))
    f["has_fip"] = _flag(fip_witness(cls))
    f["compact"] = Flag(True, note=FINITE_COLLAPSE)
    if ring:
        ats = atoms_masks(cls.masks)
        nonempty = [m for m in cls.masks if m]
        atomic = all(any(a & ~m == 0 for a in ats) for m in nonempty)
        antiatomic = not any(a & ~m == 0 for a in ats for m in nonempty)
        f["atomic"] = Flag(atomic)
        f["antiatomic"] = Flag(antiatomic)
    else:
        f["atomic"] = Flag(False, None, "defined for rings only")
        f["antiatomic"] = Flag(False, None, "defined for rings only")
    if f["multiplicative"].value:
        f["normal_class"] = Flag(True, None, "vacuously true: no infinite partitions on a finite universe")
    else:
        f["normal_class"] = Flag(False, f["multiplicative"].witness, "not multiplicative")
    return StructureReport(u, f)


@dataclass
class IdealReport:
    is_ideal: Flag
    proper: Flag
    is_prime: Flag
    is_maximal: Flag
    is_principal: Flag

    def to_dict(self, universe) -> dict:
        return {k: getattr(self, k).to_dict(universe) for k in
                ("is_ideal", "proper", "is_prime", "is_maximal", "is_principal")}


def ideal_witness(ring: SetClass, ideal: SetClass):
    if not ideal.masks:
        return ("empty_class",)
    lookup = ideal.maskset
    w = _pair_witness(ideal.masks, lambda a, b: a | b, lookup)
    if w is not None:
        return ("union",) + w
    for i in ideal.masks:
        for s in ring.masks:
            if s & ~i == 0 and s not in lookup:
                return ("hereditary", i, s)
    return None


def generated_ideal(ring: SetClass, ideal_masks, extra: int) -> set[int]:
    """Ideal generated by an ideal and one more element: everything below ``I | extra``."""
    tops = {i | extra for i in ideal_masks}
    return {s for s in ring.masks if any(s & ~t == 0 for t in tops)}


def ideal_classify(ring: SetClass, ideal: SetClass) -> IdealReport:
    if not is_ring(ring):
        raise PreconditionError(f"ideal_classify: not a ring (witness {ring_witness(ring)})")
    if not ideal <= ring:
        extra = next(m for m in ideal.masks if m not in ring.maskset)
        raise PreconditionError(f"ideal_classify: {Subset(ring.universe, extra)} is not a ring member")
    iw = ideal_witness(ring, ideal)
    is_ideal = iw is None
    proper = is_ideal and len(ideal) < len(ring)
    lookup = ideal.maskset
    prime_w = None
    if proper:
        outside = [m for m in ring.masks if m not in lookup]
        for i, a in enumerate(outside):
            for b in outside[i:]:
                if a & b in lookup:
                    prime_w = (a, b)
                    break
            if prime_w:
                break
    is_prime = proper and prime_w is None
    max_w = None
    if proper:
        for s in ring.masks:
            if s not in lookup and len(generated_ideal(ring, ideal.masks, s)) < len(ring):
                max_w = (s,)
                break
    is_max = proper and max_w is None
    principal_w = None
    if is_ideal:
        for top in ring.masks:
            if {s for s in ring.masks if s & ~top == 0} == set(ideal.masks):
                principal_w = (top,)
                break
    return IdealReport(
        is_ideal=Flag(is_ideal, iw),
        proper=Flag(proper),
        is_prime=Flag(is_prime, prime_w),
        is_maximal=Flag(is_max, max_w),
        is_principal=Flag(principal_w is not None, principal_w),
    )


@dataclass
class FilterReport:
    filter: Flag
    ultrafilter: Flag
    filterbase: Flag
    has_fip: Flag
    generated: Optional[SetClass]


def filter_ops(cls: SetClass) -> FilterReport:
    if not cls.masks:
        raise PreconditionError("filter_ops: class is empty")
    fip = fip_witness(cls)
    return FilterReport(
        filter=_flag(filter_witness(cls)),
        ultrafilter=Flag(is_ultrafilter(cls)),
        filterbase=Flag(is_filterbase(cls)),
        has_fip=_flag(fip),
        generated=generated_filter(cls) if fip is None else None,
    )


def all_filters(universe) -> list[SetClass]:
    """Every filter on a small universe, by brute force over upward-closed families."""
    if universe.size > 5:
        raise SetClassError("all_filters: universe too large")
    full = universe.full
    out = []
    # a finite filter is the up-set of the meet of its members
    seen = set()
    for gen in range(1, full + 1):
        fam = SetClass(universe, tuple(s for s in range(full + 1) if gen & ~s == 0))
        if fam.masks not in seen and is_filter(fam):
            seen.add(fam.masks)
            out.append(fam)
    return out


def mine_chain_counterexample(max_size: int = 3) -> Optional[SetClass]:
    """Smallest semiring (fewest points, then fewest members, then canonical order)
    that fails the finite chain condition, or ``None`` up to ``max_size`` points."""
    from itertools import combinations

    from .core import Universe

    if max_size > 4:
        raise SetClassError("mine_chain_counterexample: at most 4 points")
    for n in range(1, max_size + 1):
        u = Universe(f"X{n}", n)
        nonempty = list(range(1, 1 << n))
        for k in range(1, len(nonempty) + 1):
            for combo in combinations(nonempty, k):
                cls = SetClass(u, (0,) + combo)
                if semiring_witness(cls) is None and chain_condition_witness(cls) is not None:
                    return cls
    return None
