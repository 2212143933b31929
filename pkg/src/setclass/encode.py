"""Characteristic functions of sets and the base-3 encoding of set sequences.

A sequence S_1, S_2, ... is encoded pointwise as 2 * sum_i [x in S_i] / 3^i.
The digits are 0 or 2, so the value determines the membership pattern.
Eventually periodic sequences give rationals, computed exactly.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import lcm

from .core import SetSeq, Subset
from .setops import lim_seq


def chi_set(s: Subset) -> list[int]:
    """0/1 membership indicator for every point of the universe."""
    return [s.bits >> i & 1 for i in range(s.universe.size)]


def chi_value(seq: SetSeq, point: int) -> Fraction:
    p, c = len(seq.prefix), len(seq.cycle)
    head = sum(Fraction(2, 3 ** i) for i, m in enumerate(seq.prefix, 1) if m >> point & 1)
    one_cycle = sum(Fraction(2, 3 ** (p + i)) for i, m in enumerate(seq.cycle, 1) if m >> point & 1)
    # later cycles repeat the first one scaled by 3^-c
    return head + one_cycle / (1 - Fraction(1, 3 ** c))


def _power_of_three(n: int) -> bool:
    while n % 3 == 0:
        n //= 3
    return n == 1


def _exponent_form(v: Fraction, num: int) -> bool:
    """v == num / 3^n for some n >= 1."""
    return v.numerator == num and v.denominator > 1 and _power_of_three(v.denominator)


def is_constant_value(v: Fraction) -> bool:
    return v in (0, 1)


def is_disjoint_value(v: Fraction) -> bool:
    return v == 0 or _exponent_form(v, 2)


def is_increasing_value(v: Fraction) -> bool:
    return v in (0, 1) or _exponent_form(v, 1)


def is_decreasing_value(v: Fraction) -> bool:
    return v in (0, 1) or _exponent_form(1 - v, 1)


def is_convergent_value(v: Fraction) -> bool:
    return _power_of_three(v.denominator)


@dataclass
class ChiProfile:
    values: list[Fraction]
    constant_sequence: bool
    pairwise_disjoint: bool
    increasing: bool
    decreasing: bool
    convergent: bool

    def to_dict(self) -> dict:
        return {
            "values": [f"{v.numerator}/{v.denominator}" for v in self.values],
            "constant_sequence": self.constant_sequence,
            "pairwise_disjoint": self.pairwise_disjoint,
            "increasing": self.increasing,
            "decreasing": self.decreasing,
            "convergent": self.convergent,
        }


def chi_sequence(seq: SetSeq) -> ChiProfile:
    """Exact values per point, with the sequence shape read off the value forms."""
    vals = [chi_value(seq, i) for i in range(seq.universe.size)]
    convergent = all(is_convergent_value(v) for v in vals)
    if convergent != (lim_seq(seq) is not None):
        raise AssertionError("convergence from values disagrees with the limit computation")
    return ChiProfile(
        values=vals,
        constant_sequence=all(is_constant_value(v) for v in vals),
        pairwise_disjoint=all(is_disjoint_value(v) for v in vals),
        increasing=all(is_increasing_value(v) for v in vals),
        decreasing=all(is_decreasing_value(v) for v in vals),
        convergent=convergent,
    )


def horizon(*seqs: SetSeq) -> int:
    """Number of terms after which every listed sequence has entered its periodic part
    and completed a common period."""
    return max(len(s.prefix) for s in seqs) + lcm(*(len(s.cycle) for s in seqs))


def same_pattern(a: SetSeq, b: SetSeq) -> bool:
    """Termwise equality of two eventually periodic sequences."""
    return a.terms(horizon(a, b)) == b.terms(horizon(a, b))


def structural_flags(seq: SetSeq) -> dict[str, bool]:
    """Shape of the sequence from its terms, without the encoding."""
    # two full cycles expose every repeat and every wrap-around step
    t = seq.terms(len(seq.prefix) + 2 * len(seq.cycle))
    disjoint = True
    acc = 0
    for m in t:
        if m & acc:
            disjoint = False
        acc |= m
    return {
        "constant_sequence": len(set(t)) == 1,
        "pairwise_disjoint": disjoint,
        "increasing": all(a & ~b == 0 for a, b in zip(t, t[1:])),
        "decreasing": all(b & ~a == 0 for a, b in zip(t, t[1:])),
        "convergent": lim_seq(seq) is not None,
    }


def denominator_bound_ok(seq: SetSeq) -> bool:
    """Each value times 3^p * (3^c - 1) is an integer."""
    p, c = len(seq.prefix), len(seq.cycle)
    scale = 3 ** p * (3 ** c - 1)
    return all((v * scale).denominator == 1 for v in chi_sequence(seq).values)

