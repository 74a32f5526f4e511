import pytest
from hypothesis import given
from hypothesis import strategies as st

from oracles import all_ksets, greedy_saturate, rwise
from rwise.family import Family, FamilyError
from rwise.space import KSetSpace, Saturator, kset_space


def test_canonical_order_is_ascending_mask():
    sp = KSetSpace(6, 3)
    assert sp.masks == sorted(all_ksets(6, 3))
    assert sp.size == 20


def test_meets_matches_direct_count():
    sp = kset_space(7, 3)
    import numpy as np
    m = 0b1011001
    for t in (1, 2, 3):
        flags = np.unpackbits(sp.meets(m, t), bitorder="little")[:sp.size]
        assert [bool(f) for f in flags] == [(g & m).bit_count() >= t for g in sp.masks]


def test_unknown_member_rejected():
    sat = Saturator(5, 2, 2, 1)
    with pytest.raises(FamilyError):
        sat.add(0b111)


@given(st.integers(4, 7), st.integers(2, 4), st.integers(2, 4), st.integers(1, 2), st.data())
def test_fill_matches_naive_greedy(n, k, r, t, data):
    k = min(k, n)
    pool = all_ksets(n, k)
    seed = data.draw(st.lists(st.sampled_from(pool), unique=True, min_size=1, max_size=3))
    if not rwise(seed, r, t):
        return
    sat = Saturator(n, k, r, t, seed)
    sat.fill()
    assert sat.family() == greedy_saturate(Family(n, k, tuple(seed)), r, t)
