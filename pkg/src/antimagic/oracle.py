"""Brute-force ground truth for small trees.

* ``brute_force_antimagic_orientation``: exhaustive (or random, under a
  budget) search for an orientation plus labeling with distinct vertex sums.
* ``enumerate_trees``: all trees on ``n`` vertices up to isomorphism, and
  ``enumerate_lobsters`` the lobster-like ones among them.
"""

from __future__ import annotations

import heapq
import itertools
import random
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from typing import Literal, Sequence

from antimagic.graph import OrientedLabeling, Tree
from antimagic.taxonomy import LOBSTER_LIKE, classify
from antimagic.verify import verify_antimagic

EXHAUSTIVE_MAX_EDGES = 9


@dataclass(frozen=True)
class SearchResult:
    status: Literal["found", "exhausted", "inconclusive"]
    witness: OrientedLabeling | None
    explored: int  # labeling nodes (exhaustive) or random trials

    @property
    def found(self) -> bool:
        return self.status == "found"


def _edge_order(t: Tree) -> list[tuple[int, int]]:
    # leaves first, so vertex sums get fixed (and pruned) early
    return sorted(t.edges, key=lambda e: (min(t.degree(e[0]), t.degree(e[1])), e))


def _search_orientations(t: Tree, edges: list[tuple[int, int]], masks: range) -> tuple[int | None, list[int] | None, int]:
    """Depth-first label search for each orientation mask; first hit wins."""
    m = len(edges)
    n = t.n
    remaining0 = [t.degree(v) for v in range(n)]
    explored = 0

    for mask in masks:
        arcs = [(v, u) if mask >> i & 1 else (u, v) for i, (u, v) in enumerate(edges)]
        sums = [0] * n
        remaining = remaining0[:]
        used = [False] * (m + 1)
        done: set[int] = set()
        chosen = [0] * m

        def dfs(i: int) -> bool:
            nonlocal explored
            if i == m:
                return True
            tail, head = arcs[i]
            for lab in range(1, m + 1):
                if used[lab]:
                    continue
                explored += 1
                sums[tail] -= lab
                sums[head] += lab
                remaining[tail] -= 1
                remaining[head] -= 1
                fixed = []
                ok = True
                for v in (tail, head):
                    if remaining[v] == 0:
                        if sums[v] in done:
                            ok = False
                            break
                        done.add(sums[v])
                        fixed.append(sums[v])
                if ok:
                    used[lab] = True
                    chosen[i] = lab
                    if dfs(i + 1):
                        return True
                    used[lab] = False
                for x in fixed:
                    done.discard(x)
                sums[tail] += lab
                sums[head] -= lab
                remaining[tail] += 1
                remaining[head] += 1
            return False

        if dfs(0):
            return mask, chosen[:], explored
    return None, None, explored


def brute_force_antimagic_orientation(
    t: Tree,
    budget: int | None = None,
    mode: Literal["auto", "exhaustive", "random"] = "auto",
    seed: int = 0,
    workers: int = 1,
) -> SearchResult:
    """Search for an antimagic orientation of ``t``.

    Exhaustive mode walks orientations (the first edge's direction is fixed,
    since reversing every arc negates every sum) and, for each, labels edges
    depth first, rejecting a label as soon as a completed vertex repeats a
    sum. Random mode tries ``budget`` random orientation/labeling pairs and
    reports ``inconclusive`` when none works.
    """
    m = t.m
    if mode == "auto":
        mode = "exhaustive" if m <= EXHAUSTIVE_MAX_EDGES else "random"
    if m == 0:
        return SearchResult("found", OrientedLabeling(t.n, []), 0)

    if mode == "random":
        rng = random.Random(seed)
        trials = budget if budget is not None else 100_000
        for k in range(trials):
            arcs = []
            labels = list(range(1, m + 1))
            rng.shuffle(labels)
            for (u, v), lab in zip(t.edges, labels):
                arcs.append((v, u, lab) if rng.random() < 0.5 else (u, v, lab))
            d = OrientedLabeling(t.n, arcs)
            if verify_antimagic(d).antimagic:
                return SearchResult("found", d, k + 1)
        return SearchResult("inconclusive", None, trials)

    if m > EXHAUSTIVE_MAX_EDGES:
        raise ValueError(f"exhaustive search is limited to {EXHAUSTIVE_MAX_EDGES} edges, got {m}")
    edges = _edge_order(t)
    total = 1 << (m - 1)  # orientation masks with bit 0 clear are 2*k, k < total
    if workers <= 1:
        hit_mask, chosen, explored = _search_orientations(t, edges, range(0, 2 * total, 2))
    else:
        step = max(1, total // (workers * 4))
        chunks = [(t, edges, 2 * a, 2 * min(a + step, total)) for a in range(0, total, step)]
        hit_mask, chosen, explored = None, None, 0
        with ProcessPoolExecutor(max_workers=workers) as pool:
            results = list(pool.map(_chunk_worker_even, chunks))
        for mask, lab, ex in results:  # chunks are in mask order
            explored += ex
            if mask is not None and hit_mask is None:
                hit_mask, chosen = mask, lab
    if hit_mask is None:
        return SearchResult("exhausted", None, explored)
    arcs = [
        ((v, u) if hit_mask >> i & 1 else (u, v)) + (lab,)
        for i, ((u, v), lab) in enumerate(zip(edges, chosen))
    ]
    d = OrientedLabeling(t.n, arcs)
    if not verify_antimagic(d).antimagic:
        raise AssertionError("search returned a witness that does not verify")
    return SearchResult("found", d, explored)


def _chunk_worker_even(args):
    t, edges, start, stop = args
    return _search_orientations(t, edges, range(start, stop, 2))


# --- enumeration ------------------------------------------------------------


def prufer_decode(seq: Sequence[int], n: int) -> Tree:
    """Labeled tree on ``0..n-1`` from a sequence of length ``n - 2``."""
    if n == 1:
        return Tree(1, [])
    if len(seq) != n - 2:
        raise ValueError(f"sequence length must be {n - 2}")
    degree = [1] * n
    for x in seq:
        degree[x] += 1
    heap = [v for v in range(n) if degree[v] == 1]
    heapq.heapify(heap)
    edges = []
    for x in seq:
        leaf = heapq.heappop(heap)
        edges.append((leaf, x))
        degree[x] -= 1
        if degree[x] == 1:
            heapq.heappush(heap, x)
    edges.append((heapq.heappop(heap), heapq.heappop(heap)))
    return Tree(n, edges)


def tree_centers(t: Tree) -> list[int]:
    alive = set(range(t.n))
    deg = [t.degree(v) for v in range(t.n)]
    layer = [v for v in alive if deg[v] <= 1]
    while len(alive) > 2:
        nxt = []
        for v in layer:
            alive.discard(v)
            for w in t.adj[v]:
                if w in alive:
                    deg[w] -= 1
                    if deg[w] == 1:
                        nxt.append(w)
        layer = nxt
    return sorted(alive)


def _rooted_code(t: Tree, root: int) -> str:
    def code(v: int, parent: int) -> str:
        return "(" + "".join(sorted(code(w, v) for w in t.adj[v] if w != parent)) + ")"

    return code(root, -1)


def canonical_form(t: Tree) -> str:
    """Isomorphism invariant: the smallest rooted encoding over the tree's centers."""
    return min(_rooted_code(t, c) for c in tree_centers(t))


def tree_from_code(code: str) -> Tree:
    edges = []
    stack: list[int] = []
    nxt = 0
    for ch in code:
        if ch == "(":
            if stack:
                edges.append((stack[-1], nxt))
            stack.append(nxt)
            nxt += 1
        else:
            stack.pop()
    return Tree(nxt, edges)


def enumerate_trees(n: int) -> list[Tree]:
    """All trees on ``n`` vertices, one per isomorphism class.

    Grows every class on ``n - 1`` vertices by one leaf and keeps one tree per
    canonical form. Output trees are rebuilt from their canonical encodings
    and sorted by them.
    """
    if not 1 <= n <= 10:
        raise ValueError(f"n must lie in [1, 10], got {n}")
    codes = {"()"}
    for size in range(2, n + 1):
        grown = set()
        for c in codes:
            base = tree_from_code(c)
            for v in range(size - 1):
                grown.add(canonical_form(Tree(size, list(base.edges) + [(v, size - 1)])))
        codes = grown
    return [tree_from_code(c) for c in sorted(codes)]


def enumerate_trees_prufer(n: int) -> list[Tree]:
    """Same classes as ``enumerate_trees``, from decoding every sequence (slow: n**(n-2))."""
    if not 1 <= n <= 8:
        raise ValueError(f"full sequence decoding is limited to n <= 8, got {n}")
    if n <= 2:
        return [tree_from_code(canonical_form(Tree(n, [(0, 1)] if n == 2 else [])))]
    codes = {canonical_form(prufer_decode(seq, n)) for seq in itertools.product(range(n), repeat=n - 2)}
    return [tree_from_code(c) for c in sorted(codes)]


def enumerate_lobsters(n: int) -> list[Tree]:
    return [t for t in enumerate_trees(n) if classify(t) in LOBSTER_LIKE]
