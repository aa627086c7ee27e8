"""Seeded random trees and lobsters for fuzzing."""

from __future__ import annotations

import random
from dataclasses import dataclass

from antimagic.graph import Tree
from antimagic.oracle import prufer_decode


@dataclass(frozen=True)
class LegProfile:
    branch_prob: float = 0.5  # chance an interior spine vertex gets legs
    max_x: int = 3  # off-spine neighbours per branching spine vertex
    max_y: int = 2  # leaves hanging from each of those


def random_lobster(p: int, profile: LegProfile = LegProfile(), seed: int = 0, relabel: bool = False) -> Tree:
    """A lobster whose spine ``0..p`` is a longest path.

    Legs of length two only hang from spine positions ``2 .. p-2``; positions
    1 and ``p-1`` get length-one legs, so no leg outruns the spine's ends.
    With ``relabel`` the vertex ids are shuffled.
    """
    if p < 0:
        raise ValueError("negative spine length")
    if p < 2 and profile.branch_prob > 0 and profile.max_x > 0:
        raise ValueError(f"legs need a spine of at least two edges, got p={p}")
    if not 0 <= profile.branch_prob <= 1 or profile.max_x < 0 or profile.max_y < 0:
        raise ValueError(f"bad leg profile {profile}")
    rng = random.Random(seed)
    edges = [(i, i + 1) for i in range(p)]
    nxt = p + 1
    for i in range(1, p):
        if profile.max_x == 0 or rng.random() >= profile.branch_prob:
            continue
        depth_ok = min(i, p - i) >= 2
        for _ in range(rng.randint(1, profile.max_x)):
            x = nxt
            nxt += 1
            edges.append((i, x))
            if depth_ok and profile.max_y:
                for _ in range(rng.randint(0, profile.max_y)):
                    edges.append((x, nxt))
                    nxt += 1
    if relabel:
        perm = list(range(nxt))
        rng.shuffle(perm)
        edges = [(perm[u], perm[v]) for u, v in edges]
    return Tree(nxt, edges)


def random_tree(n: int, seed: int = 0) -> Tree:
    """Uniform labeled tree on ``n`` vertices via a random sequence decode."""
    if n < 1:
        raise ValueError("a tree needs at least one vertex")
    if n == 1:
        return Tree(1, [])
    if n == 2:
        return Tree(2, [(0, 1)])
    rng = random.Random(seed)
    return prufer_decode([rng.randrange(n) for _ in range(n - 2)], n)
