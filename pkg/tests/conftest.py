from __future__ import annotations

import random

from hypothesis import HealthCheck, settings
from hypothesis import strategies as st

from antimagic.graph import Tree

settings.register_profile("default", deadline=None, suppress_health_check=[HealthCheck.too_slow])
settings.load_profile("default")


@st.composite
def trees(draw, min_n: int = 1, max_n: int = 14) -> Tree:
    """Random labeled tree: vertex k attaches to a uniformly drawn earlier vertex, then ids are shuffled."""
    n = draw(st.integers(min_n, max_n))
    parents = [draw(st.integers(0, k - 1)) for k in range(1, n)]
    perm = draw(st.permutations(range(n)))
    return Tree(n, [(perm[k], perm[p]) for k, p in enumerate(parents, 1)])


@st.composite
def marked_positions(draw, min_m: int = 2, max_m: int = 30):
    m = draw(st.integers(min_m, max_m))
    h = draw(st.sets(st.integers(1, m - 1), min_size=1))
    return m, tuple(sorted(h))


def random_marks(rng: random.Random, m: int) -> tuple[int, ...]:
    while True:
        h = tuple(x for x in range(1, m) if rng.random() < rng.random())
        if h:
            return h
