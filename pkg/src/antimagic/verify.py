"""Certificate checks for labeled orientations.

Nothing here calls into the constructors: sums are recomputed from the arc
list and the band limits are recomputed from the decomposition sizes.
"""

from __future__ import annotations

from collections import defaultdict
from dataclasses import asdict, dataclass, field
from itertools import combinations

from antimagic.graph import OrientedLabeling


def _sums(d: OrientedLabeling) -> list[int]:
    s = [0] * d.n
    for a in d.arcs:
        s[a.head] += a.label
        s[a.tail] -= a.label
    return s


@dataclass
class AntimagicReport:
    bijective: bool
    sums: dict[int, int]
    collisions: list[tuple[int, int]]

    @property
    def antimagic(self) -> bool:
        return self.bijective and not self.collisions

    @property
    def sorted_sums(self) -> list[int]:
        return sorted(self.sums.values())

    def to_dict(self) -> dict:
        return {
            "antimagic": self.antimagic,
            "bijective": self.bijective,
            "sorted_sums": self.sorted_sums,
            "collisions": [list(c) for c in self.collisions],
        }


def verify_antimagic(d: OrientedLabeling) -> AntimagicReport:
    labels = [a.label for a in d.arcs]
    bijective = len(set(labels)) == len(labels) and set(labels) == set(range(1, len(labels) + 1))
    s = _sums(d)
    by_value = defaultdict(list)
    for v, x in enumerate(s):
        by_value[x].append(v)
    collisions = sorted(pair for vs in by_value.values() for pair in combinations(vs, 2))
    return AntimagicReport(bijective, dict(enumerate(s)), collisions)


@dataclass
class Lemma1Report:
    positive_on_marked: bool
    bounded_off_marked: bool
    distinct_off_marked: bool
    violations: list[str] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return self.positive_on_marked and self.bounded_off_marked and self.distinct_off_marked

    def to_dict(self) -> dict:
        return {**asdict(self), "ok": self.ok}


def verify_lemma1(d: OrientedLabeling, marked: list[int] | tuple[int, ...]) -> Lemma1Report:
    """Conditions on a labeled path ``0..m``: marked sums >= 1; the rest distinct, 1 <= |s| <= m."""
    s = _sums(d)
    m = d.m
    marked_set = set(marked)
    problems = []
    pos = all(s[v] >= 1 for v in marked_set)
    problems += [f"marked vertex {v} has sum {s[v]}" for v in sorted(marked_set) if s[v] < 1]
    rest = [v for v in range(d.n) if v not in marked_set]
    bounded = all(1 <= abs(s[v]) <= m for v in rest)
    problems += [f"vertex {v} has sum {s[v]} outside +-[1, {m}]" for v in rest if not 1 <= abs(s[v]) <= m]
    seen: dict[int, int] = {}
    distinct = True
    for v in rest:
        if s[v] in seen:
            distinct = False
            problems.append(f"vertices {seen[s[v]]} and {v} share sum {s[v]}")
        else:
            seen[s[v]] = v
    return Lemma1Report(pos, bounded, distinct, problems)


@dataclass
class BandReport:
    checks: dict[str, list[int]]  # check name -> offending vertices (or arc tails)

    @property
    def ok(self) -> bool:
        return not any(self.checks.values())

    @property
    def failed(self) -> list[str]:
        return [k for k, v in self.checks.items() if v]

    def to_dict(self) -> dict:
        return {"ok": self.ok, "checks": self.checks}


def verify_band_structure(d: OrientedLabeling, decomp, plan) -> BandReport:
    """Check that every vertex class landed in its numeric band.

    ``decomp`` needs ``spine``, ``U``, ``X``, ``X1``, ``Y``; ``plan`` needs
    ``M1``, ``M2`` and ``r``. Also checks that each arc's label lies in the
    block reserved for its kind, and that the matching labels order the
    branch vertices and the non-leaf ``X`` vertices as intended.
    """
    s = _sums(d)
    p = len(decomp.spine) - 1
    ny, nx1 = len(decomp.Y), len(decomp.X1)
    r = plan.r if plan else 0
    nm1 = len(plan.M1) if plan else 0
    nm2 = len(plan.M2) if plan else 0
    u_vertices = {decomp.spine[i] for i in decomp.U}
    x1 = set(decomp.X1)
    x_inner = [x for x in decomp.X if x not in x1]
    base = p + ny + nx1 - r

    checks: dict[str, list[int]] = {}
    checks["Y in [p+1, p+|Y|]"] = [y for y in decomp.Y if not p + 1 <= s[y] <= p + ny]
    checks["X negative, |s| >= p+|Y|+1"] = [x for x in decomp.X if not (s[x] < 0 and -s[x] >= p + ny + 1)]
    checks["spine outside U: 1 <= |s| <= p"] = [
        v for v in decomp.spine if v not in u_vertices and not 1 <= abs(s[v]) <= p
    ]
    checks["U: s >= p+|Y|+|X1|-r+2"] = sorted(u for u in u_vertices if s[u] < base + 2)
    checks["X1: |s| <= p+|Y|+|X1|-r+|M1|"] = [x for x in decomp.X1 if abs(s[x]) > base + nm1]
    checks["X minus X1: |s| >= 2p+|Y|+|X1|-r+2"] = [x for x in x_inner if abs(s[x]) < p + base + 2]

    label_of = {(a.tail, a.head): a.label for a in d.arcs}
    bad_m1 = []
    m1_pairs = [(label_of.get((x, u)), s[u], u) for x, u in (plan.M1 if plan else ())]
    for (la, sa, ua), (lb, sb, ub) in combinations(sorted(m1_pairs, key=lambda z: (z[0] is None, z[0] or 0)), 2):
        if la is None or lb is None or not sa < sb:
            bad_m1.append(ub)
    checks["U sums increase with M1 label"] = sorted(set(bad_m1))
    bad_m2 = []
    m2_pairs = [(label_of.get((x, y)), s[x], x) for x, y in (plan.M2 if plan else ())]
    for (la, sa, xa), (lb, sb, xb) in combinations(sorted(m2_pairs, key=lambda z: (z[0] is None, z[0] or 0)), 2):
        if la is None or lb is None or not sa > sb:
            bad_m2.append(xb)
    checks["X minus X1 sums decrease with M2 label"] = sorted(set(bad_m2))

    # label blocks, recomputed from the sizes
    spine_set = set(decomp.spine)
    m1_arcs = set(plan.M1) if plan else set()
    m2_arcs = set(plan.M2) if plan else set()
    y_set = set(decomp.Y)
    blocks = {
        "spine": (1, p),
        "m2": (p + 1, p + nm2),
        "xy_rest": (p + nm2 + 1, p + ny),
        "x1_rest": (p + ny + 1, base),
        "m1": (base + 1, base + nm1),
        "x_rest": (base + nm1 + 1, d.m),
    }
    misplaced = []
    for a in d.arcs:
        key = (a.tail, a.head)
        if a.tail in spine_set and a.head in spine_set:
            kind = "spine"
        elif key in m1_arcs:
            kind = "m1"
        elif key in m2_arcs:
            kind = "m2"
        elif a.head in y_set:
            kind = "xy_rest"
        elif a.tail in x1:
            kind = "x1_rest"
        else:
            kind = "x_rest"
        lo, hi = blocks[kind]
        if not lo <= a.label <= hi:
            misplaced.append(a.tail)
    checks["arc labels inside their blocks"] = sorted(set(misplaced))
    return BandReport(checks)
