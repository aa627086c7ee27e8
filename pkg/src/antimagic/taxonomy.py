"""Tree classes (path / caterpillar / lobster), spines and the spine decomposition."""

from __future__ import annotations

import enum
from collections import deque
from dataclasses import dataclass, field

from antimagic.graph import Tree


class TreeClass(enum.Enum):
    SINGLE_VERTEX = "single-vertex"
    SINGLE_EDGE = "single-edge"
    PATH = "path"
    CATERPILLAR = "caterpillar"
    LOBSTER = "lobster"
    OTHER = "other"


LOBSTER_LIKE = frozenset(
    {TreeClass.SINGLE_VERTEX, TreeClass.SINGLE_EDGE, TreeClass.PATH, TreeClass.CATERPILLAR, TreeClass.LOBSTER}
)


class UnsupportedTreeError(ValueError):
    """The tree is outside the lobster family."""


def _strip_leaves(alive: set[int], adj) -> set[int]:
    deg = {u: sum(1 for w in adj[u] if w in alive) for u in alive}
    if len(alive) <= 2:
        # K1 has no leaves; both ends of K2 are leaves
        return set() if len(alive) == 2 else set(alive)
    return {u for u in alive if deg[u] != 1}


def _is_path(alive: set[int], adj) -> bool:
    # a subtree is a path iff every vertex has at most two neighbours in it
    return all(sum(1 for w in adj[u] if w in alive) <= 2 for u in alive)


def classify(t: Tree) -> TreeClass:
    """Most specific class, by repeated leaf removal."""
    if t.n == 1:
        return TreeClass.SINGLE_VERTEX
    if t.n == 2:
        return TreeClass.SINGLE_EDGE
    everything = set(range(t.n))
    if _is_path(everything, t.adj):
        return TreeClass.PATH
    inner = _strip_leaves(everything, t.adj)
    if _is_path(inner, t.adj):
        return TreeClass.CATERPILLAR
    core = _strip_leaves(inner, t.adj)
    if _is_path(core, t.adj):
        return TreeClass.LOBSTER
    return TreeClass.OTHER


def _bfs(t: Tree, src: int) -> tuple[list[int], list[int]]:
    dist = [-1] * t.n
    parent = [-1] * t.n
    dist[src] = 0
    queue = deque([src])
    while queue:
        u = queue.popleft()
        for w in t.adj[u]:  # sorted, so parents are smallest-index first
            if dist[w] < 0:
                dist[w] = dist[u] + 1
                parent[w] = u
                queue.append(w)
    return dist, parent


def _farthest(dist: list[int]) -> int:
    best = max(dist)
    return dist.index(best)


def find_spine(t: Tree) -> list[int]:
    """A longest path, by two breadth-first sweeps starting at vertex 0.

    Ties go to the smallest vertex index; the result starts at its smaller
    endpoint.
    """
    a = _farthest(_bfs(t, 0)[0])
    dist, parent = _bfs(t, a)
    b = _farthest(dist)
    path = [b]
    while path[-1] != a:
        path.append(parent[path[-1]])
    if path[0] > path[-1]:
        path.reverse()
    return path


def diameter(t: Tree) -> int:
    return len(find_spine(t)) - 1


@dataclass(frozen=True)
class SpineDecomposition:
    """Spine ``v_0 .. v_p`` plus the vertex classes hanging off it.

    ``U`` holds spine *positions* (indices into ``spine``); ``X``, ``X1`` and
    ``Y`` hold vertex ids. ``attach[x]`` is the spine vertex adjacent to
    ``x``; ``legs[x]`` lists the ``Y`` children of ``x``.
    """

    spine: tuple[int, ...]
    U: tuple[int, ...]
    X: tuple[int, ...]
    X1: tuple[int, ...]
    Y: tuple[int, ...]
    attach: dict[int, int] = field(default_factory=dict)
    legs: dict[int, tuple[int, ...]] = field(default_factory=dict)

    @property
    def p(self) -> int:
        return len(self.spine) - 1

    @property
    def t(self) -> int:
        return len(self.U)

    @property
    def U_vertices(self) -> tuple[int, ...]:
        return tuple(self.spine[i] for i in self.U)

    @property
    def X_inner(self) -> tuple[int, ...]:
        """``X`` minus its leaves."""
        leaves = set(self.X1)
        return tuple(x for x in self.X if x not in leaves)

    def summary(self) -> dict:
        return {
            "spine": list(self.spine),
            "p": self.p,
            "U_positions": list(self.U),
            "X": list(self.X),
            "X1": list(self.X1),
            "Y": list(self.Y),
        }


def decompose(t: Tree, spine: list[int] | tuple[int, ...] | None = None) -> SpineDecomposition:
    if spine is None:
        spine = find_spine(t)
    spine = tuple(spine)
    pos = {v: i for i, v in enumerate(spine)}
    U = tuple(i for i, v in enumerate(spine) if t.degree(v) >= 3)
    on_u = {spine[i] for i in U}

    X, attach = [], {}
    for u in sorted(on_u):
        for w in t.adj[u]:
            if w not in pos:
                X.append(w)
                attach[w] = u
    X.sort()
    xset = set(X)
    legs: dict[int, tuple[int, ...]] = {}
    Y = []
    for x in X:
        kids = tuple(w for w in t.adj[x] if w != attach[x])
        for y in kids:
            if y in pos or y in xset:
                raise UnsupportedTreeError(f"vertex {x} touches the spine twice")
            if t.degree(y) != 1:
                raise UnsupportedTreeError(f"vertex {y} lies more than two steps from the spine")
        legs[x] = kids
        Y.extend(kids)
    Y.sort()
    if len(spine) + len(X) + len(Y) != t.n:
        raise UnsupportedTreeError("tree is not a lobster around this spine")
    X1 = tuple(x for x in X if t.degree(x) == 1)
    return SpineDecomposition(spine, U, tuple(X), X1, tuple(Y), attach, legs)
