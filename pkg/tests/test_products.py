import random
import pytest

from setclass.core import PreconditionError, ResourceError, SetClass, Subset, Universe
from setclass import products as pr
from setclass.generate import generate
from setclass.setops import apply_masks
from setclass.structures import is_ring, is_semiring
import samplers

X2, Y2 = Universe("X", 2), Universe("Y", 2)
SP = pr.ProductSpace(X2, Y2)


def rect(space, xs, ys):
    return pr.Rectangle(space.x.subset(xs), space.y.subset(ys))


def pset(space, pairs):
    return Subset(space.universe, sum(1 << space.point(i - 1, j - 1) for i, j in pairs))


def test_product_universe_labels_and_cap():
    assert SP.universe.size == 4
    assert SP.universe.label(1) == "(1,2)"
    with pytest.raises(ResourceError):
        pr.ProductSpace(Universe("X", 5), Universe("Y", 5))


def test_sections_examples():
    e = pset(SP, [(1, 1), (1, 2), (2, 2)])
    vert, horiz = SP.sections(e)
    assert vert[0] == Y2.subset([1, 2]) and vert[1] == Y2.subset([2])
    assert horiz[1] == X2.subset([1, 2])
    full = SP.universe.whole()
    vert, horiz = SP.sections(full)
    assert all(v == Y2.whole() for v in vert.values())
    assert all(h == X2.whole() for h in horiz.values())


def test_section_identities_random():
    rng = random.Random(3)
    space = pr.ProductSpace(Universe("X", 3), Universe("Y", 4))
    full = space.universe.full
    for _ in range(500):
        e, f = rng.randint(0, full), rng.randint(0, full)
        for i in range(3):
            vs = lambda m: space.vertical_section(m, i)
            assert vs(full & ~e) == space.y.full & ~vs(e)
            assert vs(e | f) == vs(e) | vs(f)
            assert vs(e & f) == vs(e) & vs(f)
        for j in range(4):
            hs = lambda m: space.horizontal_section(m, j)
            assert hs(full & ~e) == space.x.full & ~hs(e)


def test_rectangle_equality_and_emptiness():
    a = rect(SP, [], [1])
    b = rect(SP, [1], [])
    assert a.empty and a == b and hash(a) == hash(b)
    assert rect(SP, [1], [1, 2]) != rect(SP, [1], [2])
    assert rect(SP, [1, 2], [2]).to_dict() == {"x": ["1", "2"], "y": ["2"]}


def test_rectangle_identities_random():
    rng = random.Random(4)
    space = pr.ProductSpace(Universe("X", 3), Universe("Y", 3))
    for _ in range(500):
        r1 = samplers.random_rectangle(rng, space, nonempty=False)
        r2 = samplers.random_rectangle(rng, space, nonempty=False)
        m1, m2 = space.rect(r1).bits, space.rect(r2).bits
        assert space.rect(r1 & r2).bits == m1 & m2
        for a, b in pr.rect_difference(r1, r2):
            ma, mb = space.rect(a).bits, space.rect(b).bits
            assert ma & mb == 0
            assert ma | mb == m1 & ~m2


def test_box_examples():
    space = pr.ProductSpace(Universe("X", 2), Universe("Y", 2))
    box = pr.box_product(space, SetClass(space.x, (1,)), SetClass(space.y, (2,)))
    assert box.masks == (pset(space, [(1, 2)]).bits,)
    with pytest.raises(PreconditionError):
        pr.box_product(space, SetClass(space.x, ()), SetClass(space.y, (1,)))


def test_box_of_semirings_is_semiring():
    rng = random.Random(5)
    for _ in range(500):
        s = samplers.random_semiring(rng, rng.randint(1, 3))
        t = samplers.random_semiring(rng, rng.randint(1, 3))
        space = pr.ProductSpace(s.universe, Universe("Y", t.universe.size))
        t = SetClass(space.y, t.masks)
        assert is_semiring(pr.box_product(space, s, t))


def test_tensor_of_rings():
    rng = random.Random(6)
    for _ in range(200):
        s = generate(samplers.random_class(rng, Universe("X", rng.randint(1, 3)), 1, 3), "ring")
        ty = Universe("Y", rng.randint(1, 3))
        t = generate(samplers.random_class(rng, ty, 1, 3), "ring")
        space = pr.ProductSpace(s.universe, ty)
        ten = pr.tensor_product(space, s, t)
        assert is_ring(ten)
        assert pr.box_product(space, s, t) <= ten
        assert ten == generate(pr.box_product(space, s, t), "ring")
        # every section of a member lies in the other factor's ring
        for e in ten.masks:
            for i in range(space.x.size):
                assert space.vertical_section(e, i) in t.maskset
            for j in range(space.y.size):
                assert space.horizontal_section(e, j) in s.maskset


def test_rect_partition_examples():
    r = rect(SP, [1, 2], [1, 2])
    pieces = [rect(SP, [1], [1, 2]), rect(SP, [2], [1]), rect(SP, [2], [2])]
    rep = pr.is_rect_partition(SP, r, pieces)
    assert rep.direct and rep.criterion
    overlap = [rect(SP, [1, 2], [1]), rect(SP, [1], [1, 2]), rect(SP, [2], [2])]
    rep = pr.is_rect_partition(SP, r, overlap)
    assert not rep.direct and not rep.criterion and rep.overlap_witness == (0, 1)
    missing = [rect(SP, [1], [1, 2]), rect(SP, [2], [1])]
    rep = pr.is_rect_partition(SP, r, missing)
    assert not rep.direct and not rep.covers and rep.agree


def test_rect_partition_criterion_agrees_random():
    rng = random.Random(7)
    space = pr.ProductSpace(Universe("X", 3), Universe("Y", 3))
    hits = 0
    for k in range(1000):
        r = samplers.random_rectangle(rng, space)
        if k % 2:
            pieces = samplers.random_rect_partition(rng, space, r)
            if rng.random() < 0.3 and len(pieces) > 1:
                pieces = pieces[1:]
        else:
            pieces = [samplers.random_rectangle(rng, space) for _ in range(rng.randint(1, 4))]
        rep = pr.is_rect_partition(space, r, pieces)
        assert rep.agree
        hits += rep.direct
    assert hits > 100


def test_network_refine_examples():
    r = rect(SP, [1, 2], [1, 2])
    pieces = [rect(SP, [1], [1, 2]), rect(SP, [2], [1]), rect(SP, [2], [2])]
    grid = pr.network_refine(SP, r, pieces)
    assert set(grid) == {rect(SP, [i], [j]) for i in (1, 2) for j in (1, 2)}
    single = pr.ProductSpace(Universe("X", 1), Universe("Y", 1))
    cell = rect(single, [1], [1])
    assert pr.network_refine(single, cell, [cell]) == [cell]
    with pytest.raises(PreconditionError):
        pr.network_refine(SP, r, pieces[:2])


def test_network_refine_random():
    rng = random.Random(8)
    space = pr.ProductSpace(Universe("X", 4), Universe("Y", 4))
    for _ in range(500):
        r = samplers.random_rectangle(rng, space)
        pieces = samplers.random_rect_partition(rng, space, r)
        out = pr.network_refine(space, r, pieces)
        assert pr.is_rect_partition(space, r, out).direct
        assert pr.is_network(space, r, out)
        piece_masks = [space.rect(p).bits for p in pieces]
        for o in out:
            om = space.rect(o).bits
            assert sum(1 for m in piece_masks if om & ~m == 0) == 1
        # sides lie in the meet-closures of the input sides
        sx = apply_masks({p.side_x.bits for p in pieces}, "d", space.x.full)
        sy = apply_masks({p.side_y.bits for p in pieces}, "d", space.y.full)
        assert all(o.side_x.bits in sx and o.side_y.bits in sy for o in out)
        # an input that already is a network gives back its own grid
        again = pr.network_refine(space, r, out)
        assert set(again) == set(out)


def test_projection_examples_and_ladder():
    e = pset(SP, [(1, 2)])
    assert SP.project(e) == X2.subset([1])
    e1, e2 = pset(SP, [(1, 1)]), pset(SP, [(1, 2)])
    assert SP.project(e1 & e2) == X2.empty()
    assert SP.project(e1) & SP.project(e2) == X2.subset([1])
    rng = random.Random(9)
    space = pr.ProductSpace(Universe("X", 3), Universe("Y", 3))
    for _ in range(300):
        fam = [rng.randint(0, space.universe.full) for _ in range(3)]
        u = fam[0] | fam[1] | fam[2]
        assert space.project_x(u) == space.project_x(fam[0]) | space.project_x(fam[1]) | space.project_x(fam[2])
        assert space.project_x(fam[0] & fam[1]) & ~(space.project_x(fam[0]) & space.project_x(fam[1])) == 0
    for _ in range(200):
        s = samplers.random_class(rng, space.x, 1, 3)
        t = samplers.random_class(rng, space.y, 1, 3)
        box = pr.box_product(space, s, t).masks
        for code in ("s", "d"):
            lhs = apply_masks(set(box), code, space.universe.full)
            rhs = apply_masks(set(s.masks) | {0}, code, space.x.full) | {0}
            assert {space.project_x(e) for e in lhs} <= rhs


def test_direct_sum():
    a, b = Universe("A", 1), Universe("B", 1)
    u, offsets, total = pr.direct_sum([a.powerset(), b.powerset()])
    assert offsets == [0, 1]
    assert total == u.powerset()
    assert u.label(1) == "2:1"
    rng = random.Random(10)
    for _ in range(100):
        ua, ub = Universe("A", rng.randint(1, 3)), Universe("B", rng.randint(1, 3))
        ra = generate(samplers.random_class(rng, ua, 1, 3), "algebra")
        rb = generate(samplers.random_class(rng, ub, 1, 3), "algebra")
        u, offsets, total = pr.direct_sum([ra, rb])
        assert is_ring(total)
        # tracing back onto each factor recovers it
        assert {m & ua.full for m in total.masks} == set(ra.masks)
        assert {(m >> offsets[1]) & ub.full for m in total.masks} == set(rb.masks)
    with pytest.raises(ResourceError):
        pr.direct_sum([SetClass(Universe("A", 13), (0,)), SetClass(Universe("B", 12), (0,))])
