"""Rings of sets as Boolean rings: prime ideals, quotients, the atom map,
the finite prime spectrum, and the ideal/filter correspondence."""

from __future__ import annotations

from dataclasses import dataclass
from typing import Mapping, Optional

from .core import PreconditionError, ResourceError, SetClass, Subset, Universe, _check_same
from . import structures as st

MAX_RING = 256
MAX_AXIOM_CHECK = 64


def _require_ring(ring: SetClass, who: str):
    w = st.ring_witness(ring)
    if w is not None or not ring.masks:
        raise PreconditionError(f"{who}: not a ring (witness {w})")
    if len(ring) > MAX_RING:
        raise ResourceError(f"{who}: ring of size {len(ring)} exceeds cap {MAX_RING}")


@dataclass
class BooleanRingView:
    """Symmetric difference as addition, intersection as multiplication."""

    carrier: SetClass

    def __post_init__(self):
        _require_ring(self.carrier, "BooleanRingView")

    zero = 0

    @property
    def unit(self) -> Optional[int]:
        u = self.carrier.union_of_members()
        return u if u in self.carrier.maskset else None

    @staticmethod
    def add(a: int, b: int) -> int:
        return a ^ b

    @staticmethod
    def mul(a: int, b: int) -> int:
        return a & b

    def axiom_failures(self) -> list[str]:
        """Names of ring laws that fail; empty for every ring of sets."""
        ms = self.carrier.masks
        if len(ms) > MAX_AXIOM_CHECK:
            raise ResourceError(f"axiom check limited to rings of size <= {MAX_AXIOM_CHECK}")
        look = self.carrier.maskset
        add, mul = self.add, self.mul
        bad = []
        if any(add(a, b) not in look or mul(a, b) not in look for a in ms for b in ms):
            bad.append("closure")
        if any(add(a, b) != add(b, a) or mul(a, b) != mul(b, a) for a in ms for b in ms):
            bad.append("commutative")
        if any(add(a, self.zero) != a for a in ms):
            bad.append("zero")
        if any(add(a, a) != self.zero for a in ms):
            bad.append("characteristic 2")
        if any(mul(a, a) != a for a in ms):
            bad.append("idempotent")
        for a in ms:
            for b in ms:
                for c in ms:
                    if add(add(a, b), c) != add(a, add(b, c)):
                        bad.append("additive associativity")
                    if mul(mul(a, b), c) != mul(a, mul(b, c)):
                        bad.append("multiplicative associativity")
                    if mul(a, add(b, c)) != add(mul(a, b), mul(a, c)):
                        bad.append("distributive")
        u = self.unit
        if u is not None and any(mul(a, u) != a for a in ms):
            bad.append("unit")
        return sorted(set(bad))


def principal_ideal(ring: SetClass, top: int) -> SetClass:
    return SetClass(ring.universe, tuple(s for s in ring.masks if s & ~top == 0))


def is_prime_masks(ring_masks, ideal: frozenset) -> bool:
    if len(ideal) == len(ring_masks):
        return False
    outside = [m for m in ring_masks if m not in ideal]
    return all(a & b not in ideal for a in outside for b in outside)


def primes(ring: SetClass) -> list[SetClass]:
    """All prime ideals, ordered by the mask they omit least.

    An ideal of a finite ring contains the union of its members, so it is the
    principal ideal below that union; only those need testing.
    """
    _require_ring(ring, "primes")
    out = []
    for top in ring.masks:
        cand = principal_ideal(ring, top)
        if is_prime_masks(ring.masks, cand.maskset):
            out.append(cand)
    return out


@dataclass
class QuotientRing:
    ring: SetClass
    ideal: SetClass
    classes: list[SetClass]
    add: list[list[int]]
    mul: list[list[int]]
    zero: int
    unit: Optional[int]

    def __len__(self):
        return len(self.classes)

    def atoms(self) -> list[int]:
        nonzero = [i for i in range(len(self)) if i != self.zero]
        below = lambda a, b: self.mul[a][b] == a
        return [a for a in nonzero if not any(b != a and below(b, a) for b in nonzero)]

    def embed(self) -> tuple[Universe, list[int]]:
        """Map each class to the set of quotient atoms below it."""
        ats = self.atoms()
        if not ats:
            raise PreconditionError("quotient is trivial; nothing to embed")
        u = Universe("atoms", len(ats))
        image = [sum(1 << k for k, a in enumerate(ats) if self.mul[a][i] == a) for i in range(len(self))]
        return u, image


def quotient(ring: SetClass, ideal: SetClass) -> QuotientRing:
    """Classes of ``S ~ T`` iff ``S ^ T`` lies in the ideal, with Cayley tables."""
    _require_ring(ring, "quotient")
    rep = st.ideal_classify(ring, ideal)
    if not rep.is_ideal:
        raise PreconditionError(f"quotient: not an ideal (witness {rep.is_ideal.witness})")
    look = ideal.maskset
    index: dict[int, int] = {}
    classes: list[list[int]] = []
    for m in ring.masks:
        if m in index:
            continue
        cls = [t for t in ring.masks if m ^ t in look]
        for t in cls:
            index[t] = len(classes)
        classes.append(cls)
    n = len(classes)
    reps = [c[0] for c in classes]
    add = [[index[reps[i] ^ reps[j]] for j in range(n)] for i in range(n)]
    mul = [[index[reps[i] & reps[j]] for j in range(n)] for i in range(n)]
    union = ring.union_of_members()
    unit = index.get(union) if union in ring.maskset else None
    return QuotientRing(
        ring, ideal, [SetClass(ring.universe, tuple(c)) for c in classes], add, mul, index[0], unit
    )


@dataclass
class AtomMap:
    atoms: list[int]
    image: dict[int, int]
    injective: bool
    surjective: bool
    preserves_operations: bool
    atomic: bool
    note: str = "finite rings are complete; the map is onto the subsets of the atoms"

    @property
    def isomorphism(self) -> bool:
        return self.injective and self.surjective and self.preserves_operations


def atom_iso(ring: SetClass) -> AtomMap:
    """Send each member to the set of atoms it contains (as a mask over atom indices)."""
    _require_ring(ring, "atom_iso")
    ats = st.atoms_masks(ring.masks)
    image = {m: sum(1 << k for k, a in enumerate(ats) if a & ~m == 0) for m in ring.masks}
    values = set(image.values())
    injective = len(values) == len(ring)
    surjective = values == set(range(1 << len(ats)))
    ms = ring.masks
    preserves = all(
        image[a | b] == image[a] | image[b] and image[a & b] == image[a] & image[b]
        for a in ms for b in ms
    )
    nonempty = [m for m in ms if m]
    atomic = all(image[m] for m in nonempty)
    return AtomMap(ats, image, injective, surjective, preserves, atomic)


@dataclass
class StoneSpace:
    ring: SetClass
    points: list[SetClass]
    basis: dict[int, tuple[int, ...]]
    has_unit: bool

    @property
    def compact(self) -> bool:
        # compactness of the spectrum is equivalent to a multiplicative identity
        return self.has_unit

    def to_dict(self) -> dict:
        from .export import class_json, subset_key

        u = self.ring.universe
        return {
            "points": [class_json(p) for p in self.points],
            "basis": {subset_key(Subset(u, m)): list(v) for m, v in sorted(self.basis.items())},
            "compact": self.compact,
        }


def stone(ring: SetClass) -> StoneSpace:
    """Prime ideals as points; member f opens the points that omit it."""
    ps = primes(ring)
    basis = {f: tuple(i for i, p in enumerate(ps) if f not in p.maskset) for f in ring.masks}
    return StoneSpace(ring, ps, basis, ring.union_of_members() in ring.maskset)


@dataclass
class DualityReport:
    points: int
    injective: bool
    homomorphism: bool
    reconstruction_size: int
    isomorphic: bool
    has_unit: bool


def duality_check(ring: SetClass) -> DualityReport:
    space = stone(ring)
    n = len(space.points)
    opens = {f: sum(1 << i for i in idx) for f, idx in space.basis.items()}
    values = set(opens.values())
    injective = len(values) == len(ring)
    ms = ring.masks
    hom = all(
        opens[a ^ b] == opens[a] ^ opens[b] and opens[a & b] == opens[a] & opens[b]
        for a in ms for b in ms
    )
    # the space is discrete, so its compact open sets are all sets of points
    recon = 1 << n
    iso = injective and hom and values == set(range(recon))
    return DualityReport(n, injective, hom, recon, iso, space.has_unit)


def _unit(ring: SetClass, who: str) -> int:
    u = ring.union_of_members()
    if u not in ring.maskset:
        raise PreconditionError(f"{who}: ring has no unit")
    return u


def filter_ideal_dual(ring: SetClass, ideal: SetClass) -> SetClass:
    """Complements of ideal members relative to the ring's unit."""
    _require_ring(ring, "filter_ideal_dual")
    unit = _unit(ring, "filter_ideal_dual")
    rep = st.ideal_classify(ring, ideal)
    if not rep.is_ideal:
        raise PreconditionError(f"filter_ideal_dual: not an ideal (witness {rep.is_ideal.witness})")
    return SetClass(ring.universe, tuple(unit & ~m for m in ideal.masks))


def ideal_filter_dual(ring: SetClass, fil: SetClass) -> SetClass:
    _require_ring(ring, "ideal_filter_dual")
    _check_same(ring.universe, fil.universe)
    unit = _unit(ring, "ideal_filter_dual")
    if not fil <= ring:
        raise PreconditionError("ideal_filter_dual: filter is not inside the ring")
    return SetClass(ring.universe, tuple(unit & ~m for m in fil.masks))


def is_ring_filter(ring: SetClass, fil: SetClass) -> bool:
    """Filter relative to the ring: nonempty, meets stay in, upward closed in the ring."""
    look = fil.maskset
    if not fil.masks or not fil <= ring:
        return False
    if any(a & b not in look for a in fil.masks for b in fil.masks):
        return False
    return all(s in look for f in fil.masks for s in ring.masks if f & ~s == 0)


def is_ring_ultrafilter(ring: SetClass, fil: SetClass) -> bool:
    unit = _unit(ring, "is_ring_ultrafilter")
    if not is_ring_filter(ring, fil) or 0 in fil.maskset:
        return False
    return all(s in fil.maskset or (unit & ~s) in fil.maskset for s in ring.masks)


def is_spectral_morphism(source: SetClass, target: SetClass, phi: Mapping[int, int]) -> bool:
    """Ring homomorphism whose image escapes every prime of the target."""
    _require_ring(source, "is_spectral_morphism")
    _require_ring(target, "is_spectral_morphism")
    ms = source.masks
    if set(phi) != set(ms) or not set(phi.values()) <= target.maskset:
        return False
    if any(phi[a ^ b] != phi[a] ^ phi[b] or phi[a & b] != phi[a] & phi[b] for a in ms for b in ms):
        return False
    image = set(phi.values())
    return all(not image <= q.maskset for q in primes(target))
