import random

import pytest
from hypothesis import given, strategies as hs

from setclass.core import PreconditionError, SetClass, SetSeq, Universe
from setclass import generate as g
from setclass import structures as st
from setclass.setops import apply, apply_word, lim_seq
import oracles as orc
from strategies import classes

X2 = Universe("X", 2)
X3 = Universe("X", 3)
X4 = Universe("X", 4)


def cls(u, *sets):
    return SetClass(u, tuple(u.subset(s).bits for s in sets))


CHAIN = cls(X3, [1], [1, 2], [1, 2, 3])


def test_generate_examples():
    assert g.generate(cls(X3, [1], [1, 2]), "ring") == cls(X3, [], [1], [2], [1, 2])
    d = cls(X4, [], [1, 2], [1, 3], [2, 4], [3, 4], [1, 2, 3, 4])
    assert g.generate(d, "dynkin") == d
    assert g.generate(CHAIN, "B") == CHAIN


def test_generate_rejects_empty_and_unknown():
    with pytest.raises(PreconditionError):
        g.generate(SetClass(X3, ()), "ring")
    with pytest.raises(Exception, match="unknown closure kind"):
        g.generate(CHAIN, "sigma")


def test_bd_strictly_below_b():
    s = cls(X3, [1], [1, 2], [1, 3])
    assert g.generate(s, "B_d") == s
    assert g.generate(s, "B") == cls(X3, [1], [1, 2], [1, 3], [1, 2, 3])


def test_kolmogoroff_number_examples():
    h = g.hierarchy(cls(X2, [1], [2]), "B")
    assert h.kolmogoroff_number == 2
    assert h.parity_upper[1] == cls(X2, [1], [2], [1, 2])
    assert h.parity_upper[2] == cls(X2, [], [1], [2], [1, 2])
    assert g.kolmogoroff_number(CHAIN) == 0


def test_sigma_pi_needs_lattice_with_whole():
    with pytest.raises(PreconditionError):
        g.hierarchy(cls(X3, [1], [2]), "SigmaPi")
    with pytest.raises(PreconditionError):
        g.hierarchy(cls(X3, [], [1]), "SigmaPi")


def test_rb_versus_br_example():
    rep = g.closure_criteria_check(CHAIN)
    assert rep.rb_minus_br == cls(X3, [1, 3])
    assert len(rep.br_minus_rb) == 0
    assert not rep.get("B=ring iff r<=B").closure_equal
    assert rep.all_agree


def test_closure_criteria_on_ring_and_derived_example():
    rep = g.closure_criteria_check(X3.powerset())
    assert all(c.closure_equal and c.containment for c in rep.checks)
    rep = g.closure_criteria_check(cls(X3, [], [1, 2], [1, 3]))
    assert rep.all_agree


def test_localize_examples():
    assert g.localize(cls(X2, [1], [2])) == cls(X2, [1, 2])
    assert g.localize(X3.powerset()) == X3.powerset()


@given(classes(max_members=5))
def test_localize_definition_and_rings(c):
    loc = g.localize(c)
    assert c.universe.full in loc.maskset
    brute = {x0 for x0 in range(c.universe.full + 1) if all(m & x0 in c.maskset for m in c.masks)}
    assert set(loc.masks) == brute
    if st.is_ring(c):
        assert st.is_algebra(loc)


@given(classes(hi=3, max_members=4), hs.sampled_from(g.KINDS))
def test_generate_matches_brute_force(c, kind):
    n = c.universe.size
    expect = orc.closure(kind, orc.to_sets(c.masks), n)
    got = g.generate(c, kind)
    assert set(got.masks) == orc.to_masks(expect)
    assert g.has_property(got, kind)
    assert c <= got


@pytest.mark.parametrize("kind", g.KINDS)
def test_properties_closed_under_intersection(kind):
    # the full powerset has the property and pairwise intersections keep it
    rng = random.Random(kind)
    u = X3
    full = u.powerset()
    assert g.has_property(full, kind)
    having = []
    for _ in range(400):
        c = SetClass(u, tuple(rng.sample(range(8), rng.randint(1, 5))))
        having.append(g.generate(c, kind))
    for a, b in zip(having[::2], having[1::2]):
        meet = SetClass(u, tuple(a.maskset & b.maskset))
        if meet.masks:
            assert g.has_property(meet, kind)


@given(classes(max_members=5))
def test_ring_characterizations(c):
    ring = g.generate(c, "ring")
    assert apply_word(c, "rds") == ring
    assert apply_word(c, "rsrs") == ring
    assert g.generate(c, "B") <= g.generate(apply(c, "r"), "B")
    assert g.generate(apply(c, "r"), "B") == ring


@given(classes(max_members=5))
def test_dynkin_of_multiplicative_is_ring(c):
    d = apply(c, "d")
    assert g.generate(d, "dynkin") == g.generate(d, "ring")


@given(classes(max_members=5), hs.data())
def test_limits_stay_in_bclosed_classes(c, data):
    b = g.generate(c, "B")
    pick = hs.sampled_from(b.masks)
    seq = SetSeq(c.universe,
                 tuple(data.draw(hs.lists(pick, max_size=3))),
                 tuple(data.draw(hs.lists(pick, min_size=1, max_size=3))))
    lim = lim_seq(seq)
    if lim is not None:
        assert lim.bits in b.maskset


@given(classes(max_members=6))
def test_hierarchy_final_and_stage_closure(c):
    h = g.hierarchy(c, "B")
    assert h.final == g.generate(c, "B")
    for a, stage in enumerate(h.stages):
        if a >= 1:
            assert apply(stage.upper, "s") == stage.upper
            assert apply(stage.lower, "d") == stage.lower
        assert stage.ambiguous.maskset == stage.upper.maskset & stage.lower.maskset
    assert h.parity_upper[h.kolmogoroff_number] == h.final
    assert all(p != h.final for p in h.parity_upper[:h.kolmogoroff_number])
    assert h.stabilized_at <= 6


@given(classes(max_members=5))
def test_sigma_pi_duality(c):
    lat = g.generate(SetClass(c.universe, c.masks + (c.universe.full,)), "lattice")
    h = g.hierarchy(lat, "SigmaPi")
    for stage in h.stages:
        assert apply(stage.upper, "c") == stage.lower


def test_hierarchy_json_round_trip():
    import json

    from setclass.export import to_json

    doc = json.loads(to_json(g.hierarchy(cls(X2, [1], [2]), "B")))
    assert doc["schema"] == "setclass/1"
    assert doc["kind"] == "hierarchy"
    assert doc["kolmogoroff_number"] == 2
