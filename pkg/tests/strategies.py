"""Hypothesis strategies for universes, classes and sequences."""

from hypothesis import strategies as st

from setclass.core import SetClass, SetSeq, Universe


@st.composite
def universes(draw, lo=1, hi=4):
    return Universe("X", draw(st.integers(lo, hi)))


@st.composite
def masks_on(draw, u: Universe):
    return draw(st.integers(0, u.full))


@st.composite
def classes(draw, lo=1, hi=4, max_members=6, nonempty=True):
    u = draw(universes(lo, hi))
    ms = draw(st.lists(st.integers(0, u.full), min_size=1 if nonempty else 0, max_size=max_members))
    return SetClass(u, tuple(ms))


@st.composite
def classes_on(draw, u: Universe, max_members=6):
    ms = draw(st.lists(st.integers(0, u.full), min_size=1, max_size=max_members))
    return SetClass(u, tuple(ms))


@st.composite
def sequences_on(draw, u: Universe, max_prefix=3, max_cycle=3):
    pre = draw(st.lists(st.integers(0, u.full), max_size=max_prefix))
    cyc = draw(st.lists(st.integers(0, u.full), min_size=1, max_size=max_cycle))
    return SetSeq(u, tuple(pre), tuple(cyc))


@st.composite
def sequences(draw, lo=1, hi=4):
    u = draw(universes(lo, hi))
    return draw(sequences_on(u))
