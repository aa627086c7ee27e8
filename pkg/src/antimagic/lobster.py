"""Antimagic orientations of lobsters.

The spine gets labels ``1..p`` from the spine labeling in ``paths``; every
other edge points away from its endpoint in ``X`` (the off-spine neighbours of
branch vertices). Labels above ``p`` are handed out in six consecutive blocks,
and the two matchings are labeled last, sorted by partial sums, which pushes
the sums of each vertex class into its own numeric band.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Literal

from antimagic.graph import OrientedLabeling, Tree, vertex_sums
from antimagic.paths import ConstructionError, label_path_antimagic, lemma1_construct, orient_bipartite
from antimagic.taxonomy import SpineDecomposition, TreeClass, UnsupportedTreeError, classify, decompose

Interval = tuple[int, int]  # inclusive; empty when hi < lo


@dataclass(frozen=True)
class MatchingPlan:
    M1: tuple[tuple[int, int], ...]  # (x, u) with u a branch vertex, one per u
    M2: tuple[tuple[int, int], ...]  # (x, y) for each non-leaf x
    r: int  # M1 edges whose x is a leaf
    q: int  # number of non-leaf vertices in X


@dataclass(frozen=True)
class LabelAllocation:
    spine: Interval
    m2: Interval
    xy_rest: Interval
    x1_rest: Interval
    m1: Interval
    x_rest: Interval

    def intervals(self) -> dict[str, Interval]:
        return {
            "spine": self.spine,
            "m2": self.m2,
            "xy_rest": self.xy_rest,
            "x1_rest": self.x1_rest,
            "m1": self.m1,
            "x_rest": self.x_rest,
        }


@dataclass(frozen=True)
class LobsterConstruction:
    labeling: OrientedLabeling
    decomposition: SpineDecomposition
    plan: MatchingPlan | None = None
    allocation: LabelAllocation | None = None
    tree_class: TreeClass | None = None


def orient_pendants(decomp: SpineDecomposition) -> list[tuple[int, int]]:
    """Arcs ``(tail, head)`` for every non-spine edge, all leaving ``X``."""
    arcs = []
    for x in decomp.X:
        arcs.append((x, decomp.attach[x]))
        arcs.extend((x, y) for y in decomp.legs[x])
    return arcs


def build_matchings(decomp: SpineDecomposition) -> MatchingPlan:
    leaves = set(decomp.X1)
    by_u: dict[int, list[int]] = {}
    for x in decomp.X:
        by_u.setdefault(decomp.attach[x], []).append(x)
    M1 = []
    for u in decomp.U_vertices:
        if u not in by_u:
            raise ConstructionError(f"branch vertex {u} has no off-spine neighbour")
        M1.append((min(by_u[u]), u))
    M2 = tuple((x, min(decomp.legs[x])) for x in decomp.X_inner)
    r = sum(1 for x, _ in M1 if x in leaves)
    return MatchingPlan(tuple(M1), M2, r, len(decomp.X_inner))


def allocate_labels(decomp: SpineDecomposition, plan: MatchingPlan) -> LabelAllocation:
    p, ny, nx1 = decomp.p, len(decomp.Y), len(decomp.X1)
    nm1, nm2 = len(plan.M1), len(plan.M2)
    m = p + ny + len(decomp.X)
    base = p + ny + nx1 - plan.r
    alloc = LabelAllocation(
        spine=(1, p),
        m2=(p + 1, p + nm2),
        xy_rest=(p + nm2 + 1, p + ny),
        x1_rest=(p + ny + 1, base),
        m1=(base + 1, base + nm1),
        x_rest=(base + nm1 + 1, m),
    )
    sizes = {
        "spine": p,
        "m2": nm2,
        "xy_rest": ny - nm2,
        "x1_rest": nx1 - plan.r,
        "m1": nm1,
        "x_rest": plan.q - (nm1 - plan.r),
    }
    covered = []
    for name, (lo, hi) in alloc.intervals().items():
        if hi - lo + 1 != sizes[name]:
            raise ConstructionError(f"interval {name}=[{lo}, {hi}] does not fit {sizes[name]} arcs")
        covered.extend(range(lo, hi + 1))
    if covered != list(range(1, m + 1)):
        raise ConstructionError("label intervals do not partition 1..m")
    return alloc


def _fill(arcs: list[tuple[int, int]], interval: Interval, out: dict[tuple[int, int], int]) -> None:
    lo, hi = interval
    if len(arcs) != hi - lo + 1:
        raise ConstructionError(f"{len(arcs)} arcs for interval [{lo}, {hi}]")
    for arc, label in zip(sorted(arcs), range(lo, hi + 1)):
        out[arc] = label


def label_non_matching(
    decomp: SpineDecomposition, plan: MatchingPlan, alloc: LabelAllocation
) -> dict[tuple[int, int], int]:
    """Labels for the pendant arcs outside both matchings."""
    m1, m2 = set(plan.M1), set(plan.M2)
    leaves = set(decomp.X1)
    xy_rest, x1_rest, x_rest = [], [], []
    for arc in orient_pendants(decomp):
        x, w = arc
        if arc in m1 or arc in m2:
            continue
        if w in decomp.legs[x]:
            xy_rest.append(arc)
        elif x in leaves:
            x1_rest.append(arc)
        else:
            x_rest.append(arc)
    out: dict[tuple[int, int], int] = {}
    _fill(xy_rest, alloc.xy_rest, out)
    _fill(x1_rest, alloc.x1_rest, out)
    _fill(x_rest, alloc.x_rest, out)
    return out


def assign_matching_labels(
    n: int,
    partial: dict[tuple[int, int], int],
    decomp: SpineDecomposition,
    plan: MatchingPlan,
    alloc: LabelAllocation,
    m2_order: Literal["descending", "ascending"] = "descending",
) -> OrientedLabeling:
    """Label both matchings so branch vertices and non-leaf ``X`` get increasing sums.

    ``M1`` arcs enter branch vertices: sorting them by partial sum and giving
    increasing labels keeps the order strict. ``M2`` arcs *leave* their ``X``
    end, so labels must decrease along increasing partial sums for the same
    effect. ``m2_order="ascending"`` reproduces the other choice, which can
    tie two sums.
    """
    labels = dict(partial)

    def sums() -> dict[int, int]:
        return vertex_sums(OrientedLabeling(n, [(a, b, lab) for (a, b), lab in labels.items()]))

    s2 = sums()
    pos = {v: i for i, v in enumerate(decomp.spine)}
    m1_by_u = {u: (x, u) for x, u in plan.M1}
    order = sorted(m1_by_u, key=lambda u: (s2[u], pos[u]))
    for label, u in zip(range(alloc.m1[0], alloc.m1[1] + 1), order):
        labels[m1_by_u[u]] = label

    s3 = sums()
    m2_by_x = {x: (x, y) for x, y in plan.M2}
    order = sorted(m2_by_x, key=lambda x: (s3[x], x))
    lo, hi = alloc.m2
    pool = range(hi, lo - 1, -1) if m2_order == "descending" else range(lo, hi + 1)
    for label, x in zip(pool, order):
        labels[m2_by_x[x]] = label

    return OrientedLabeling(n, sorted((a, b, lab) for (a, b), lab in labels.items()))


def _orient_spine_path(t: Tree, decomp: SpineDecomposition) -> OrientedLabeling:
    spine = decomp.spine
    p = decomp.p
    if p == 0:
        return OrientedLabeling(t.n, [])
    seq = [1] if p == 1 else label_path_antimagic(p)
    edge_labels = {(spine[k - 1], spine[k]): seq[k - 1] for k in range(1, p + 1)}
    return orient_bipartite(t, edge_labels)


def construct_lobster(
    t: Tree, m2_order: Literal["descending", "ascending"] = "descending"
) -> LobsterConstruction:
    cls = classify(t)
    if cls not in (
        TreeClass.SINGLE_VERTEX,
        TreeClass.SINGLE_EDGE,
        TreeClass.PATH,
        TreeClass.CATERPILLAR,
        TreeClass.LOBSTER,
    ):
        raise UnsupportedTreeError(f"tree is classified as {cls.value}, not a lobster")
    decomp = decompose(t)
    if not decomp.U:
        return LobsterConstruction(_orient_spine_path(t, decomp), decomp, tree_class=cls)

    spine = decomp.spine
    spine_lab = lemma1_construct(decomp.p, decomp.U).labeling
    labels = {(spine[a], spine[b]): lab for a, b, lab in spine_lab.arcs}

    plan = build_matchings(decomp)
    alloc = allocate_labels(decomp, plan)
    labels.update(label_non_matching(decomp, plan, alloc))
    d = assign_matching_labels(t.n, labels, decomp, plan, alloc, m2_order=m2_order)
    if not d.orients(t):
        raise ConstructionError("labeling does not orient the input tree")
    return LobsterConstruction(d, decomp, plan, alloc, cls)


def orient_lobster(t: Tree) -> OrientedLabeling:
    """Antimagic orientation of a lobster (paths and caterpillars included)."""
    return construct_lobster(t).labeling
