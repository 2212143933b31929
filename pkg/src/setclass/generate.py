"""Least-fixpoint generation of structured classes and the stagewise hierarchies.

Every generator is the smallest superclass closed under a fixed set of rules.
Transfinite recursions become plain iteration: on a finite universe every
increasing chain of classes stabilizes after finitely many steps.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from .core import PreconditionError, SetClass, SetClassError
from .setops import apply_masks, intersection_closure
from . import structures as st

KINDS = ("lattice", "ring", "algebra", "dynkin", "complete_ring", "B", "B_d", "B_c", "topology")


def _xor_span(masks) -> set[int]:
    """All symmetric differences of finite subfamilies (the empty one gives 0)."""
    basis: list[int] = []
    for m in masks:
        for b in basis:
            m = min(m, m ^ b)
        if m:
            basis.append(m)
    span = {0}
    for b in basis:
        span |= {x ^ b for x in span}
    return span


def ring_masks(masks) -> set[int]:
    # a Boolean ring is spanned under Δ by finite products of its generators
    return _xor_span(sorted(intersection_closure(masks)))


def _alternate(masks, codes, full) -> set[int]:
    cur = set(masks)
    while True:
        nxt = cur
        for code in codes:
            # closure keeps the input; S_c alone holds only complements
            nxt = nxt | apply_masks(nxt, code, full)
        if nxt == cur:
            return cur
        cur = nxt


def dynkin_masks(masks) -> set[int]:
    cur = set(masks) | {0}
    frontier = list(cur)
    while frontier:
        new = []
        snapshot = list(cur)
        for a in frontier:
            for b in snapshot:
                cands = []
                if a & b == 0:
                    cands.append(a | b)
                if b & ~a == 0:
                    cands.append(a & ~b)
                if a & ~b == 0:
                    cands.append(b & ~a)
                for c in cands:
                    if c not in cur:
                        cur.add(c)
                        new.append(c)
        frontier = new
    return cur


def generate_masks(masks, kind: str, full: int) -> set[int]:
    masks = set(masks)
    if not masks:
        raise PreconditionError("generate: class is empty")
    if kind == "lattice":
        return _alternate(masks | {0}, ("s", "d"), full)
    if kind in ("ring", "complete_ring"):
        return ring_masks(masks)
    if kind == "algebra":
        return ring_masks(masks | {full})
    if kind == "dynkin":
        return dynkin_masks(masks)
    if kind == "B":
        return _alternate(masks, ("s", "d"), full)
    if kind == "B_d":
        return _alternate(masks, ("sd", "d"), full)
    if kind == "B_c":
        return _alternate(masks, ("sd", "c"), full)
    if kind == "topology":
        return _alternate(masks | {0, full}, ("d", "s"), full)
    raise SetClassError(f"unknown closure kind {kind!r}; expected one of {', '.join(KINDS)}")


def generate(cls: SetClass, kind: str) -> SetClass:
    """Smallest superclass of ``cls`` having property ``kind``."""
    return SetClass(cls.universe, tuple(generate_masks(cls.masks, kind, cls.universe.full)))


def _closed(masks: set[int], code: str, full: int) -> bool:
    return apply_masks(masks, code, full) <= masks


def has_property(cls: SetClass, kind: str) -> bool:
    """Direct test of the property, independent of the generators."""
    if not cls.masks:
        return False
    ms = set(cls.masks)
    full = cls.universe.full
    if kind == "lattice":
        return st.is_lattice(cls)
    if kind in ("ring", "complete_ring"):
        return st.is_ring(cls)
    if kind == "algebra":
        return st.is_algebra(cls)
    if kind == "dynkin":
        return st.is_dynkin(cls)
    if kind == "B":
        return _closed(ms, "s", full) and _closed(ms, "d", full)
    if kind == "B_d":
        return _closed(ms, "sd", full) and _closed(ms, "d", full)
    if kind == "B_c":
        return _closed(ms, "sd", full) and _closed(ms, "c", full)
    if kind == "topology":
        return {0, full} <= ms and _closed(ms, "s", full) and _closed(ms, "d", full)
    raise SetClassError(f"unknown closure kind {kind!r}")


@dataclass
class Stage:
    level: int
    upper: SetClass
    lower: SetClass
    ambiguous: SetClass


@dataclass
class HierarchyTrace:
    flavor: str
    stages: list[Stage]
    stabilized_at: int
    kolmogoroff_number: int
    # B^[a] and B_[a] of the parity variant, same length as stages
    parity_upper: list[SetClass] = field(default_factory=list)
    parity_lower: list[SetClass] = field(default_factory=list)

    @property
    def final(self) -> SetClass:
        return self.stages[-1].upper

    def to_dict(self) -> dict:
        from .export import class_json

        return {
            "flavor": self.flavor,
            "stabilized_at": self.stabilized_at,
            "kolmogoroff_number": self.kolmogoroff_number,
            "stages": [
                {
                    "level": s.level,
                    "upper": class_json(s.upper),
                    "lower": class_json(s.lower),
                    "ambiguous": class_json(s.ambiguous),
                }
                for s in self.stages
            ],
        }


MAX_LEVELS = 64


def _run(start_upper, start_lower, up_code, low_code, full):
    """Stagewise recursion: upper_a = [U lower_b, b<a]_up, lower_a = [U upper_b, b<a]_low.

    Returns the stage list, stopping at the first level equal to its successor.
    """
    uppers = [set(start_upper)]
    lowers = [set(start_lower)]
    acc_up = set(start_upper)
    acc_low = set(start_lower)
    while True:
        if len(uppers) > MAX_LEVELS:
            raise SetClassError("hierarchy did not stabilize")
        nu = apply_masks(acc_low, up_code, full)
        nl = apply_masks(acc_up, low_code, full)
        if nu == uppers[-1] and nl == lowers[-1]:
            return uppers, lowers
        uppers.append(nu)
        lowers.append(nl)
        acc_up |= nu
        acc_low |= nl


def kolmogoroff_number(cls: SetClass) -> int:
    return hierarchy(cls, "B").kolmogoroff_number


def hierarchy(cls: SetClass, flavor: str = "B") -> HierarchyTrace:
    if not cls.masks:
        raise PreconditionError("hierarchy: class is empty")
    u = cls.universe
    full = u.full
    wrap = lambda ms: SetClass(u, tuple(ms))
    base = set(cls.masks)

    b_up, b_low = _run(base, base, "s", "d", full)
    closure = b_up[-1]
    # parity variant: B^[a] is B^(a) for odd a, B_(a) for even a
    par_up = [b_up[a] if a % 2 else b_low[a] for a in range(len(b_up))]
    par_low = [b_low[a] if a % 2 else b_up[a] for a in range(len(b_up))]
    # the last interleaved stage is the closure, so this always finds a level
    k = next(a for a, c in enumerate(par_up) if c == closure)

    if flavor == "B":
        ups, lows = b_up, b_low
    elif flavor in ("SigmaPi", "sigma_pi", "Sigma"):
        if not st.is_lattice(cls) or full not in cls.maskset:
            raise PreconditionError("SigmaPi hierarchy needs a lattice containing X")
        ups, lows = _run(base, apply_masks(base, "c", full), "s", "d", full)
        flavor = "SigmaPi"
    else:
        raise SetClassError(f"unknown hierarchy flavor {flavor!r}; expected B or SigmaPi")

    stages = [Stage(a, wrap(up), wrap(lo), wrap(up & lo)) for a, (up, lo) in enumerate(zip(ups, lows))]
    return HierarchyTrace(
        flavor=flavor,
        stages=stages,
        stabilized_at=len(stages) - 1,
        kolmogoroff_number=k,
        parity_upper=[wrap(x) for x in par_up],
        parity_lower=[wrap(x) for x in par_low],
    )


@dataclass
class Biconditional:
    name: str
    closure_equal: bool
    containment: bool
    missing: tuple[int, ...] = ()

    @property
    def agrees(self) -> bool:
        return self.closure_equal == self.containment


@dataclass
class ClosureCriteriaReport:
    checks: list[Biconditional]
    rb_minus_br: SetClass
    br_minus_rb: SetClass

    @property
    def all_agree(self) -> bool:
        return all(c.agrees for c in self.checks)

    def get(self, name: str) -> Biconditional:
        return next(c for c in self.checks if c.name == name)


def closure_criteria_check(cls: SetClass) -> ClosureCriteriaReport:
    """Evaluate both sides of each closure-equals-generated biconditional."""
    if not cls.masks:
        raise PreconditionError("closure_criteria_check: class is empty")
    u = cls.universe
    full = u.full
    ms = set(cls.masks)
    sb = generate_masks(ms, "B", full)
    sbd = generate_masks(ms, "B_d", full)
    sbc = generate_masks(ms, "B_c", full)
    rin = ring_masks(ms)
    alg = ring_masks(ms | {full})
    s_r = apply_masks(ms, "r", full)
    s_c = apply_masks(ms, "c", full)
    s_d = apply_masks(ms, "d", full)

    def bic(name, closure, target, *needed):
        miss = tuple(sorted(set().union(*(n - closure for n in needed))))
        contained = any(n <= closure for n in needed)
        return Biconditional(name, closure == target, contained, miss)

    checks = [
        bic("B=ring iff r<=B", sb, rin, s_r),
        bic("B_d=algebra iff c<=B_d", sbd, alg, s_c),
        bic("B=algebra iff c<=B", sb, alg, s_c),
        bic("B_d=ring iff r<=B_d", sbd, rin, s_r),
        bic("B_c=algebra iff d<=B_c", sbc, alg, s_d),
        bic("B_c=algebra iff r<=B_c or d<=B_c", sbc, alg, s_r, s_d),
    ]
    rb = generate_masks(s_r, "B", full)
    br = apply_masks(sb, "r", full)
    return ClosureCriteriaReport(checks, SetClass(u, tuple(rb - br)), SetClass(u, tuple(br - rb)))


def localize(cls: SetClass) -> SetClass:
    """All ``X0`` whose trace of the class stays inside the class."""
    if not cls.masks:
        raise PreconditionError("localize: class is empty")
    u = cls.universe
    if u.size > 16:
        raise SetClassError("localize enumerates all subsets; universe size must be <= 16")
    lookup = cls.maskset
    return SetClass(u, tuple(x0 for x0 in range(u.full + 1) if all(m & x0 in lookup for m in cls.masks)))
