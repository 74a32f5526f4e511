from math import comb

import pytest

from oracles import min_covers, rwise
from rwise.constructions import (NoGuaranteeWarning, build_frankl, build_G, build_G_block, build_Gprime,
                                 build_trivial, build_two_block, frankl_size)
from rwise.family import FamilyError, count_triangles, is_r_wise_t_intersecting, mask_of


def sets(f):
    return [list(s) for s in f.sets()]


def test_G_small():
    assert sets(build_G(5, 2, 2, 1)) == [[1, 2], [1, 3], [2, 3]]
    assert len(build_G(6, 4, 2, 2)) == 8


def test_G_empty_when_no_room_outside():
    assert len(build_G(5, 5, 2, 1)) == 0


def test_G_members_meet_core_in_r_plus_t_minus_one():
    for n, k, r, t in [(8, 4, 2, 2), (9, 5, 3, 1), (7, 3, 2, 1)]:
        core = mask_of(range(1, r + t + 1))
        g = build_G(n, k, r, t)
        assert all((m & core).bit_count() == r + t - 1 for m in g)
        assert len(g) == (r + t) * comb(n - r - t, k - r - t + 1)


def test_Gprime_examples():
    assert sets(build_Gprime(5, 2, 2, 1)) == [[1, 2], [1, 3], [2, 3]]
    assert len(build_Gprime(6, 4, 2, 2)) == 9
    assert len(build_Gprime(8, 3, 2, 1)) == 3 * comb(5, 1) + comb(5, 0) == 16


def test_G_block_examples():
    assert sets(build_G_block(5, 2, 2, 1, 3)) == [[1, 2]]
    block = build_G_block(6, 4, 2, 2, 1)
    assert sets(block) == [[2, 3, 4, 5], [2, 3, 4, 6]]


def test_blocks_partition_G():
    n, k, r, t = 9, 5, 3, 1
    blocks = [set(build_G_block(n, k, r, t, i).members) for i in range(1, r + t + 1)]
    assert sum(map(len, blocks)) == len(set().union(*blocks))
    assert set().union(*blocks) == set(build_G(n, k, r, t).members)


def test_G_block_index_range():
    with pytest.raises(FamilyError):
        build_G_block(6, 4, 2, 2, 5)


def test_trivial_examples():
    assert sets(build_trivial(4, 2, 1)) == [[1, 2], [1, 3], [1, 4]]
    assert len(build_trivial(6, 3, 2)) == 4
    assert count_triangles(build_trivial(7, 4, 2), 2, 2) == 0
    assert count_triangles(build_trivial(7, 4, 1), 3, 1) == 0


def test_constructions_are_r_wise_intersecting():
    for n, k, r, t in [(8, 4, 2, 2), (9, 5, 3, 1), (8, 5, 3, 2)]:
        assert is_r_wise_t_intersecting(build_G(n, k, r, t), r, t)
        assert rwise(build_Gprime(n, k, r, t).members, r, t)


def test_frankl_covers():
    f = build_frankl(12, 4, 1, 5)
    assert min_covers(f, 1) == [mask_of((1, j)) for j in range(2, 6)]


@pytest.mark.parametrize("n, k, t, ell", [(12, 4, 1, 5), (12, 4, 1, 3), (12, 4, 2, 4), (12, 5, 2, 6),
                                          (81, 3, 1, 4), (81, 3, 1, 3), (10, 4, 1, 4)])
def test_frankl_size_closed_form(n, k, t, ell):
    f = build_frankl(n, k, t, ell)
    assert len(f) == frankl_size(n, k, t, ell)
    assert rwise(f.members, 2, t) if n <= 12 else True


def test_frankl_examples():
    assert len(build_frankl(12, 4, 1, 5)) == (comb(11, 3) - comb(7, 3)) + comb(7, 0) == 131
    assert len(build_frankl(81, 3, 1, 4)) == 235


def test_frankl_bad_ell():
    with pytest.raises(FamilyError):
        build_frankl(12, 4, 1, 2)
    with pytest.raises(FamilyError):
        build_frankl(12, 4, 1, 6)


def test_two_block():
    f = build_two_block(10, 7, 2, 2)
    a, b = mask_of(range(1, 5)), mask_of(range(5, 9))
    assert all((m & a).bit_count() >= 3 and (m & b).bit_count() >= 3 for m in f)
    assert count_triangles(f, 2, 2) == 0
    assert count_triangles(build_two_block(12, 9, 3, 2), 3, 2) == 0


def test_two_block_t1_warns():
    with pytest.warns(NoGuaranteeWarning):
        build_two_block(8, 4, 2, 1)


def test_builder_preconditions():
    with pytest.raises(FamilyError):
        build_G(3, 2, 2, 2)
    with pytest.raises(FamilyError):
        build_two_block(7, 6, 2, 2)
