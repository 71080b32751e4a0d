import pytest

from expanso.constructions import (chain_space, closed_invariant_sets, discrete_example,
                                   duplicate, duplicated_cover, enumerate_covers,
                                   enumerate_homeos, enumerate_spaces, enumerate_spaces_upto,
                                   indiscrete_example)
from expanso.dynamics import (Cover, canonical_cover, decide_orbit_expansive,
                              decide_refinement_expansive, is_o_expansive_cover,
                              is_r_expansive_cover, r_expansive_oracle)
from expanso.errors import NotClosed, NotInvariant, ScaleCap
from expanso.pointset import mask
from expanso.topology import is_closed, is_open, separation_axioms


def test_chain_three():
    sp, f = chain_space(3)
    assert sp.min_nbhd == (0b111, 0b110, 0b100)
    assert f.perm == (0, 1, 2)


def test_chain_one():
    sp, f = chain_space(1)
    assert sp.n == 1


def test_chain_five():
    sp, f = chain_space(5)
    ax = separation_axioms(sp)
    assert ax.t0 and not ax.t1
    assert not decide_orbit_expansive(f)


def test_chain_rejects_zero():
    with pytest.raises(ValueError):
        chain_space(0)


@pytest.mark.parametrize("m,perm", [(2, (1, 0)), (3, (1, 2, 0))])
def test_indiscrete_examples(m, perm):
    sp, f = indiscrete_example(m, perm)
    whole = Cover(sp, (sp.full,))
    assert is_r_expansive_cover(f, whole)
    assert not is_o_expansive_cover(f, whole)


def test_indiscrete_one_point():
    sp, f = indiscrete_example(1)
    assert is_o_expansive_cover(f, Cover(sp, (sp.full,)))


# ---- duplication

def test_duplicate_chain():
    sp, f = chain_space(3)
    dup = duplicate(sp, f, mask([0]))
    assert dup.space.n == 4
    assert dup.copy_map == ((0, 3),)
    opens = set(dup.space.opens)
    assert 0b1111 in opens and mask([1, 2, 3]) in opens
    assert dup.homeo.perm == (0, 1, 2, 3)
    assert decide_refinement_expansive(dup.homeo)
    assert r_expansive_oracle(dup.homeo, canonical_cover(dup.space))


def test_duplicated_cover_chain():
    sp, f = chain_space(3)
    dup = duplicate(sp, f, mask([0]))
    z = duplicated_cover(dup, Cover(sp, (sp.full,)))
    assert tuple(z) == (0b0111, mask([1, 2, 3]))
    assert all(is_open(dup.space, u) for u in z)
    assert is_r_expansive_cover(dup.homeo, z)


def test_duplicate_discrete_stays_discrete():
    sp, f = discrete_example(3, (1, 0, 2))
    for k in closed_invariant_sets(f):
        dup = duplicate(sp, f, k)
        assert dup.space.is_discrete


def test_duplicate_empty_k_is_identity():
    sp, f = chain_space(3)
    dup = duplicate(sp, f, 0)
    assert dup.space == sp and dup.homeo.perm == f.perm
    c = canonical_cover(sp)
    assert tuple(duplicated_cover(dup, c)) == tuple(c)


def test_duplicate_singleton_k_one_copy_element():
    sp, f = discrete_example(3)
    dup = duplicate(sp, f, mask([1]))
    c = Cover.from_points(sp, [[0], [1], [2]])      # 1's element is exactly M_1
    z = duplicated_cover(dup, c)
    copy = dup.copy(mask([1]))
    assert sum(1 for u in z if u & copy) == 1


def test_duplicate_copies_follow_map():
    sp, f = discrete_example(3, (1, 0, 2))
    dup = duplicate(sp, f, mask([0, 1]))
    c0, c1 = dup.copy(mask([0])), dup.copy(mask([1]))
    assert dup.homeo.image(c0) == c1 and dup.homeo.image(c1) == c0


def test_duplicate_preconditions(chain3):
    sp, f = chain3
    with pytest.raises(NotClosed):
        duplicate(sp, f, mask([2]))
    g = discrete_example(3, (1, 2, 0))[1]
    with pytest.raises(NotInvariant):
        duplicate(g.space, g, mask([0]))


def test_duplication_preserves_r_expansivity():
    for sp in enumerate_spaces_upto(3):
        for f in enumerate_homeos(sp):
            ks = closed_invariant_sets(f)
            for c in enumerate_covers(sp):
                if not is_r_expansive_cover(f, c):
                    continue
                for k in ks:
                    dup = duplicate(sp, f, k)
                    z = duplicated_cover(dup, c)
                    assert is_r_expansive_cover(dup.homeo, z)
                    if separation_axioms(sp).t1:
                        assert separation_axioms(dup.space).t1


def test_closed_invariant_sets(chain3):
    sp, f = chain3
    ks = closed_invariant_sets(f)
    assert set(ks) == {0, 0b001, 0b011, 0b111}
    assert all(is_closed(sp, k) and f.image(k) == k for k in ks)


# ---- enumeration

def test_enumerate_small():
    assert [s.min_nbhd for s in enumerate_spaces(1)] == [(1,)]
    two = {s.min_nbhd for s in enumerate_spaces(2)}
    assert two == {(1, 2), (3, 3), (1, 3), (3, 2)}
    assert sum(1 for _ in enumerate_spaces_upto(3)) == 34


def test_enumerate_cap():
    with pytest.raises(ScaleCap):
        list(enumerate_spaces(6))


def test_enumerate_homeos_counts():
    sp, _ = chain_space(3)
    assert [f.perm for f in enumerate_homeos(sp)] == [(0, 1, 2)]
    assert sum(1 for _ in enumerate_homeos(indiscrete_example(3)[0])) == 6


def test_enumerate_covers_are_covers():
    sp, _ = chain_space(3)
    covers = list(enumerate_covers(sp))
    assert all(len(c) <= 3 for c in covers)
    assert all(len(set(c)) == len(c) for c in covers)
    # every cover contains X: the chain's only open set holding 0
    assert all(sp.full in tuple(c) for c in covers)
    assert len(covers) == 1 + 2 + 1
