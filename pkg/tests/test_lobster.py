import pytest
from hypothesis import given
from hypothesis import strategies as st

from antimagic.generate import LegProfile, random_lobster
from antimagic.graph import Tree, vertex_sums
from antimagic.lobster import (
    allocate_labels,
    build_matchings,
    construct_lobster,
    orient_lobster,
    orient_pendants,
)
from antimagic.oracle import brute_force_antimagic_orientation
from antimagic.taxonomy import TreeClass, UnsupportedTreeError, classify, decompose
from antimagic.verify import verify_antimagic, verify_band_structure
from conftest import trees

# ten edges where labeling M2 in increasing order along increasing partial sums ties two X sums
ASCENDING_TIE = Tree(11, [(0, 1), (0, 3), (0, 5), (0, 7), (0, 9), (0, 10), (1, 2), (3, 4), (5, 6), (7, 8)])


def test_k2():
    d = orient_lobster(Tree.path(2))
    assert [tuple(a) for a in d.arcs] == [(0, 1, 1)]
    assert sorted(vertex_sums(d).values()) == [-1, 1]


def test_single_vertex():
    assert orient_lobster(Tree(1, [])).arcs == ()


def test_star_k15():
    t = Tree.star(5)
    res = construct_lobster(t)
    dec, plan, alloc = res.decomposition, res.plan, res.allocation
    center = dec.spine[1]
    labels = {(a.tail, a.head): a.label for a in res.labeling.arcs}
    assert {labels[(dec.spine[0], center)], labels[(dec.spine[2], center)]} == {1, 2}
    assert len(plan.M1) == 1 and plan.r == 1 and plan.M2 == ()
    assert alloc.x1_rest == (3, 4) and alloc.m1 == (5, 5)
    assert labels[plan.M1[0]] == 5
    assert {labels[(x, center)] for x in dec.X if (x, center) not in plan.M1} == {3, 4}
    assert verify_antimagic(res.labeling).antimagic


def test_spider_legs_two():
    t = Tree.spider(3, 2)
    res = construct_lobster(t)
    plan = res.plan
    assert len(plan.M1) == 1 and plan.r == 0 and plan.q == 1
    assert plan.M1[0][0] not in res.decomposition.X1
    assert verify_antimagic(res.labeling).antimagic
    assert verify_band_structure(res.labeling, res.decomposition, plan).ok
    assert brute_force_antimagic_orientation(t).found


def test_caterpillar_has_no_m2():
    t = Tree(7, [(0, 1), (1, 2), (2, 3), (3, 4), (1, 5), (3, 6)])
    assert classify(t) is TreeClass.CATERPILLAR
    res = construct_lobster(t)
    assert res.plan.M2 == () and res.plan.q == 0
    assert res.allocation.m2[1] < res.allocation.m2[0]
    assert res.allocation.xy_rest[1] < res.allocation.xy_rest[0]


def test_pendants_leave_x():
    t = random_lobster(12, seed=3)
    dec = decompose(t)
    for tail, head in orient_pendants(dec):
        assert tail in dec.X
        assert head == dec.attach[tail] or head in dec.legs[tail]
    assert orient_pendants(decompose(Tree.path(5))) == []


def test_ascending_m2_order_can_tie():
    res = construct_lobster(ASCENDING_TIE, m2_order="ascending")
    rep = verify_antimagic(res.labeling)
    assert not rep.antimagic
    assert "X minus X1 sums decrease with M2 label" in verify_band_structure(
        res.labeling, res.decomposition, res.plan
    ).failed
    assert verify_antimagic(orient_lobster(ASCENDING_TIE)).antimagic


def test_m2_order_arithmetic():
    p = 5
    asc = (-21 - (p + 1), -20 - (p + 2))
    desc = (-21 - (p + 2), -20 - (p + 1))
    assert asc[0] == asc[1]
    assert desc[0] < desc[1]


def test_other_rejected():
    with pytest.raises(UnsupportedTreeError):
        orient_lobster(Tree.spider(3, 3))


@given(trees(max_n=18))
def test_random_trees(t):
    if classify(t) is TreeClass.OTHER:
        with pytest.raises(UnsupportedTreeError):
            construct_lobster(t)
        return
    res = construct_lobster(t)
    assert res.labeling.orients(t)
    assert verify_antimagic(res.labeling).antimagic
    if res.plan is not None:
        assert verify_band_structure(res.labeling, res.decomposition, res.plan).ok


@given(st.integers(2, 60), st.integers(0, 2**32 - 1), st.booleans())
def test_random_lobsters(p, seed, relabel):
    t = random_lobster(p, LegProfile(0.6, 4, 3), seed=seed, relabel=relabel)
    res = construct_lobster(t)
    assert verify_antimagic(res.labeling).antimagic
    if res.plan is not None:
        plan, dec = res.plan, res.decomposition
        assert verify_band_structure(res.labeling, dec, plan).ok
        assert {u for _, u in plan.M1} == set(dec.U_vertices)
        assert {x for x, _ in plan.M2} == set(dec.X_inner)
        assert len({x for x, _ in plan.M1}) == len(plan.M1)
        assert not set(plan.M1) & set(plan.M2)
        assert 0 <= plan.r <= min(len(dec.X1), dec.t)
        covered = sorted(x for lo, hi in res.allocation.intervals().values() for x in range(lo, hi + 1))
        assert covered == list(range(1, t.m + 1))


def test_build_matchings_smallest_index():
    t = Tree(9, [(0, 1), (1, 2), (2, 3), (3, 4), (2, 7), (2, 5), (5, 6), (2, 8)])
    dec = decompose(t)
    plan = build_matchings(dec)
    assert plan.M1 == ((5, 2),) and plan.M2 == ((5, 6),) and plan.r == 0
    alloc = allocate_labels(dec, plan)
    assert alloc.spine == (1, 4) and alloc.m2 == (5, 5) and alloc.x1_rest == (6, 7) and alloc.m1 == (8, 8)
