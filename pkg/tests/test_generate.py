from collections import Counter
from math import comb

import pytest
from scipy.stats import chisquare

from antimagic.generate import LegProfile, random_lobster, random_tree
from antimagic.graph import Tree
from antimagic.taxonomy import TreeClass, classify, find_spine


def test_deterministic():
    assert random_lobster(30, seed=7) == random_lobster(30, seed=7)
    assert random_lobster(30, seed=7, relabel=True) == random_lobster(30, seed=7, relabel=True)
    assert random_tree(12, seed=3) == random_tree(12, seed=3)


def test_seeds_differ():
    assert len({random_lobster(30, seed=k).edges for k in range(20)}) == 20


def test_zero_profile_is_path():
    assert random_lobster(9, LegProfile(0.0, 3, 2), seed=1) == Tree.path(10)
    assert random_lobster(1, LegProfile(0.0), seed=1) == Tree.path(2)


@pytest.mark.parametrize("p, profile", [(-1, LegProfile()), (1, LegProfile()), (5, LegProfile(1.5)), (5, LegProfile(0.5, -1))])
def test_bad_parameters(p, profile):
    with pytest.raises(ValueError):
        random_lobster(p, profile)


def test_lobsters_at_p50():
    profile = LegProfile(0.5, 3, 2)
    for seed in range(2000):
        t = random_lobster(50, profile, seed=seed)
        assert classify(t) in (TreeClass.LOBSTER, TreeClass.CATERPILLAR)
        assert len(find_spine(t)) == 51


def test_small_trees():
    assert random_tree(1) == Tree(1, [])
    assert random_tree(2) == Tree.path(2)
    for seed in range(10):
        t = random_tree(3, seed)
        assert sorted(t.degree(v) for v in range(3)) == [1, 1, 2]


def test_degree_law():
    # the degree of a fixed vertex is 1 + Binomial(n - 2, 1/n)
    n, samples = 10, 100_000
    counts = Counter(random_tree(n, seed).degree(0) - 1 for seed in range(samples))
    k_max = 4  # pool the tail
    expected = [comb(n - 2, k) * (1 / n) ** k * (1 - 1 / n) ** (n - 2 - k) * samples for k in range(k_max)]
    expected.append(samples - sum(expected))
    observed = [counts[k] for k in range(k_max)] + [sum(c for k, c in counts.items() if k >= k_max)]
    assert chisquare(observed, expected).pvalue > 1e-3
