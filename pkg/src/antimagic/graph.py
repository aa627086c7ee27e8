"""Core graph objects: undirected trees and labeled orientations."""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from functools import cached_property
from typing import Iterable, NamedTuple


class TreeError(ValueError):
    """Raised when an edge list does not describe a simple tree."""


class Arc(NamedTuple):
    tail: int
    head: int
    label: int


@dataclass(frozen=True)
class Tree:
    """A simple tree on vertices ``0 .. n-1``.

    Edges are stored as sorted pairs in a canonical (sorted) order, so two
    trees built from the same edge set compare equal.
    """

    n: int
    edges: tuple[tuple[int, int], ...]

    def __init__(self, n: int, edges: Iterable[tuple[int, int]]):
        norm = tuple(sorted((min(u, v), max(u, v)) for u, v in edges))
        object.__setattr__(self, "n", n)
        object.__setattr__(self, "edges", norm)
        self._check()

    def _check(self) -> None:
        if self.n < 1:
            raise TreeError("a tree needs at least one vertex")
        if len(self.edges) != self.n - 1:
            raise TreeError(f"expected {self.n - 1} edges, got {len(self.edges)}")
        for u, v in self.edges:
            if not (0 <= u < self.n and 0 <= v < self.n):
                raise TreeError(f"edge ({u}, {v}) has an endpoint out of range")
            if u == v:
                raise TreeError(f"loop at vertex {u}")
        if len(set(self.edges)) != len(self.edges):
            raise TreeError("duplicate edge")
        seen = _reachable(self.adj, 0)
        if len(seen) != self.n:
            missing = min(set(range(self.n)) - seen)
            raise TreeError(f"graph is disconnected (vertex {missing} unreachable from 0)")

    @property
    def m(self) -> int:
        return self.n - 1

    @cached_property
    def adj(self) -> tuple[tuple[int, ...], ...]:
        nbrs: list[list[int]] = [[] for _ in range(self.n)]
        for u, v in self.edges:
            nbrs[u].append(v)
            nbrs[v].append(u)
        return tuple(tuple(sorted(a)) for a in nbrs)

    def degree(self, u: int) -> int:
        if not 0 <= u < self.n:
            raise IndexError(f"vertex {u} out of range for tree on {self.n} vertices")
        return len(self.adj[u])

    def leaves(self) -> list[int]:
        return [u for u in range(self.n) if len(self.adj[u]) == 1]

    @classmethod
    def path(cls, n: int) -> Tree:
        return cls(n, [(i, i + 1) for i in range(n - 1)])

    @classmethod
    def star(cls, leaves: int) -> Tree:
        return cls(leaves + 1, [(0, i) for i in range(1, leaves + 1)])

    @classmethod
    def spider(cls, legs: int, length: int) -> Tree:
        edges = []
        nxt = 1
        for _ in range(legs):
            prev = 0
            for _ in range(length):
                edges.append((prev, nxt))
                prev = nxt
                nxt += 1
        return cls(nxt, edges)


def degree(t: Tree, u: int) -> int:
    return t.degree(u)


def _reachable(adj, start: int) -> set[int]:
    seen = {start}
    queue = deque([start])
    while queue:
        u = queue.popleft()
        for w in adj[u]:
            if w not in seen:
                seen.add(w)
                queue.append(w)
    return seen


@dataclass(frozen=True)
class OrientedLabeling:
    """An orientation of a graph on ``n`` vertices with a label on every arc."""

    n: int
    arcs: tuple[Arc, ...]

    def __init__(self, n: int, arcs: Iterable[tuple[int, int, int]]):
        object.__setattr__(self, "n", n)
        object.__setattr__(self, "arcs", tuple(Arc(*a) for a in arcs))

    @property
    def m(self) -> int:
        return len(self.arcs)

    def edge_set(self) -> set[tuple[int, int]]:
        return {(min(a.tail, a.head), max(a.tail, a.head)) for a in self.arcs}

    def reversed(self) -> OrientedLabeling:
        return OrientedLabeling(self.n, [(a.head, a.tail, a.label) for a in self.arcs])

    def relabeled(self, perm: list[int] | tuple[int, ...]) -> OrientedLabeling:
        """Rename vertex ``v`` to ``perm[v]``."""
        return OrientedLabeling(self.n, [(perm[a.tail], perm[a.head], a.label) for a in self.arcs])

    def sorted_arcs(self) -> OrientedLabeling:
        return OrientedLabeling(self.n, sorted(self.arcs, key=lambda a: (min(a.tail, a.head), max(a.tail, a.head))))

    def orients(self, t: Tree) -> bool:
        return self.n == t.n and self.m == t.m and self.edge_set() == set(t.edges)


def vertex_sums(d: OrientedLabeling) -> dict[int, int]:
    """In-labels minus out-labels at every vertex."""
    sums = dict.fromkeys(range(d.n), 0)
    for tail, head, label in d.arcs:
        if not (0 <= tail < d.n and 0 <= head < d.n):
            raise TreeError(f"arc ({tail}, {head}) has an endpoint out of range")
        sums[tail] -= label
        sums[head] += label
    return sums


def is_bijective_labeling(d: OrientedLabeling) -> bool:
    labels = sorted(a.label for a in d.arcs)
    return labels == list(range(1, d.m + 1))
