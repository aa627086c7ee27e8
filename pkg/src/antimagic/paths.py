"""Antimagic labelings and orientations of paths.

Two constructions live here:

* ``label_path_antimagic`` / ``orient_path``: consecutive labels along a path
  (last two swapped when the length is odd), made into an orientation by
  directing every edge from one colour class to the other.
* ``lemma1_construct``: the spine labeling used for lobsters. Given interior
  positions ``h_1 < ... < h_t`` of a path ``v_0 ... v_m`` it orients and labels
  the path so that marked vertices get positive sums, and unmarked vertices get
  pairwise distinct sums with absolute value in ``[1, m]``.

Path vertices are the integers ``0 .. m``; edge ``k`` (1-based) joins
``k - 1`` and ``k``.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass
from typing import Callable, Mapping, Sequence

from antimagic.graph import OrientedLabeling, Tree, is_bijective_labeling


class DomainError(ValueError):
    """Parameters outside the range a construction is defined on."""


class ConstructionError(RuntimeError):
    """An internal contract of a construction was violated."""


def label_path_antimagic(m: int) -> list[int]:
    """Edge labels from the ``v_0`` end: ``1..m``, last two swapped for odd ``m``."""
    if m < 2:
        raise DomainError(f"path labeling needs at least two edges, got m={m}")
    labels = list(range(1, m + 1))
    if m % 2 == 1:
        labels[-2], labels[-1] = labels[-1], labels[-2]
    return labels


def two_coloring(t: Tree) -> list[int]:
    color = [-1] * t.n
    color[0] = 0
    stack = [0]
    while stack:
        u = stack.pop()
        for w in t.adj[u]:
            if color[w] < 0:
                color[w] = 1 - color[u]
                stack.append(w)
    return color


def orient_bipartite(t: Tree, labels: Mapping[tuple[int, int], int]) -> OrientedLabeling:
    """Direct every edge away from the colour class of vertex 0.

    ``labels`` maps each edge ``(min, max)`` to its label. If the undirected
    sums are distinct, the oriented sums are too: they are the undirected sums
    negated on one class and kept on the other, and the two classes have
    opposite signs.
    """
    keyed = {(min(u, v), max(u, v)): lab for (u, v), lab in labels.items()}
    if set(keyed) != set(t.edges):
        raise DomainError("labels must cover exactly the edges of the tree")
    if sorted(keyed.values()) != list(range(1, t.m + 1)):
        raise DomainError("labels are not a bijection onto 1..m")
    color = two_coloring(t)
    arcs = []
    for (u, v), lab in sorted(keyed.items()):
        tail, head = (u, v) if color[u] == 0 else (v, u)
        arcs.append((tail, head, lab))
    return OrientedLabeling(t.n, arcs)


def orient_path(m: int) -> OrientedLabeling:
    """Antimagic orientation of the path ``0 - 1 - ... - m``."""
    if m < 0:
        raise DomainError("negative edge count")
    if m == 0:
        return OrientedLabeling(1, [])
    if m == 1:
        return OrientedLabeling(2, [(0, 1, 1)])
    labels = label_path_antimagic(m)
    return orient_bipartite(Tree.path(m + 1), {(k - 1, k): labels[k - 1] for k in range(1, m + 1)})


# --- spine labeling -------------------------------------------------------


class P0Case(enum.Enum):
    """Thirteen labeling rules for the first subpath, keyed by (l mod 2, s)."""

    EVEN_S1 = "l even, s=1"
    EVEN_S_ODD_GE3 = "l even, s odd >= 3"
    L2_S0 = "l=2, s=0"
    EVEN_GE4_S0 = "l >= 4 even, s=0"
    EVEN_S2 = "l even, s=2"
    EVEN_S_EVEN_GE4 = "l even, s even >= 4"
    ODD_S0 = "l odd, s=0"
    ODD_S2 = "l odd, s=2"
    ODD_S_EVEN_GE4 = "l odd, s even >= 4"
    L1_S1 = "l=1, s=1"
    ODD_GE3_S1 = "l >= 3 odd, s=1"
    ODD_S3 = "l odd, s=3"
    ODD_S_ODD_GE5 = "l odd, s odd >= 5"


class Step4Rule(enum.Enum):
    SINGLE_EDGE = "single edge"
    FROM_END = "fill from the v_m side"
    EXCEPTION_A = "exception (a)"
    EXCEPTION_B = "exception (b)"
    EXCEPTION_C = "exception (c)"


def case_for(ell: int, s: int) -> P0Case:
    if ell < 1 or s < 0:
        raise DomainError(f"no labeling case for l={ell}, s={s}")
    if ell % 2 == 0:
        if s == 0:
            return P0Case.L2_S0 if ell == 2 else P0Case.EVEN_GE4_S0
        if s == 1:
            return P0Case.EVEN_S1
        if s == 2:
            return P0Case.EVEN_S2
        return P0Case.EVEN_S_ODD_GE3 if s % 2 else P0Case.EVEN_S_EVEN_GE4
    if s == 0:
        return P0Case.ODD_S0
    if s == 1:
        return P0Case.L1_S1 if ell == 1 else P0Case.ODD_GE3_S1
    if s == 2:
        return P0Case.ODD_S2
    if s == 3:
        return P0Case.ODD_S3
    return P0Case.ODD_S_ODD_GE5 if s % 2 else P0Case.ODD_S_EVEN_GE4


@dataclass(frozen=True)
class LemmaOneParams:
    m: int
    h: tuple[int, ...]  # normalized marked positions
    ell: int
    s: int
    reversed: bool
    case_id: P0Case

    @property
    def t(self) -> int:
        return len(self.h)


def mirror_positions(m: int, h: Sequence[int]) -> tuple[int, ...]:
    return tuple(sorted(m - x for x in h))


def normalize(m: int, h: Sequence[int]) -> LemmaOneParams:
    """Compute (l, s) and the case, mirroring the path when ``h_1 < m - h_t``."""
    hs = tuple(sorted(set(h)))
    if m < 2:
        raise DomainError(f"m must be at least 2, got {m}")
    if not hs:
        raise DomainError("at least one marked position is required")
    if len(hs) != len(h):
        raise DomainError("marked positions must be distinct")
    if hs[0] < 1 or hs[-1] > m - 1:
        raise DomainError(f"marked positions must lie in [1, {m - 1}], got {list(hs)}")
    rev = hs[0] < m - hs[-1]
    if rev:
        hs = mirror_positions(m, hs)
    ell = m - hs[-1]
    s = hs[0] - ell
    return LemmaOneParams(m, hs, ell, s, rev, case_for(ell, s))


class LabelPool:
    """Unused labels from ``1..m`` with O(1) amortized extreme removal."""

    def __init__(self, m: int):
        self.m = m
        self._free = [False] + [True] * m
        self._lo = 1
        self._hi = m
        self._size = m

    def __len__(self) -> int:
        return self._size

    def __contains__(self, label: int) -> bool:
        return 1 <= label <= self.m and self._free[label]

    def remaining(self) -> list[int]:
        return [x for x in range(1, self.m + 1) if self._free[x]]

    def take(self, label: int) -> int:
        if label not in self:
            raise ConstructionError(f"label {label} is not available")
        self._free[label] = False
        self._size -= 1
        return label

    def take_largest(self) -> int:
        if not self._size:
            raise ConstructionError("label pool is empty")
        while not self._free[self._hi]:
            self._hi -= 1
        return self.take(self._hi)

    def take_smallest(self) -> int:
        if not self._size:
            raise ConstructionError("label pool is empty")
        while not self._free[self._lo]:
            self._lo += 1
        return self.take(self._lo)


def step1_sequence(m: int, ell: int) -> list[int]:
    """Labels for the last subpath, listed from the ``v_m`` end."""
    seq = []
    for j in range(1, ell // 2 + 1):
        seq += [m - (2 * j - 1), 2 * j]
    if ell % 2:
        seq.append(m - ell)
    return seq


def _even_prefix(m: int, ell: int) -> list[int]:
    # m, 1, m-2, 3, ..., m-l+2, l-1, m-l
    seq = []
    for j in range(1, ell // 2 + 1):
        seq += [m - 2 * (j - 1), 2 * j - 1]
    return seq + [m - ell]


def _odd_prefix(m: int, ell: int) -> list[int]:
    # m, 1, m-2, 3, ..., m-l+3, l-2, m-l+1
    seq = []
    for j in range(1, (ell - 1) // 2 + 1):
        seq += [m - 2 * (j - 1), 2 * j - 1]
    return seq + [m - ell + 1]


def _p0_even_s1(m, ell, s):
    return _even_prefix(m, ell)


def _p0_even_s_odd(m, ell, s):
    seq = _even_prefix(m, ell)
    for k in range(1, s // 2 + 1):
        seq += [ell + k, m - ell - k]
    return seq


def _p0_even_s0(m, ell, s):
    seq = []
    for j in range(1, (ell - 2) // 2 + 1):
        seq += [m - 2 * (j - 1), 2 * j - 1]
    return seq + [m - ell + 2, m - ell]


def _p0_even_s_even(m, ell, s):
    seq = _even_prefix(m, ell)
    for k in range(1, s // 2):
        seq += [ell + k, m - ell - k]
    return seq + [m - ell - s // 2]


def _p0_odd_s0(m, ell, s):
    return _odd_prefix(m, ell)


def _p0_odd_s_even(m, ell, s):
    seq = _odd_prefix(m, ell)
    for k in range(1, s // 2 + 1):
        seq += [ell + k - 1, m - ell - k]
    return seq


def _p0_odd_s1(m, ell, s):
    return _odd_prefix(m, ell) + [m - ell - 1]


def _p0_odd_s_odd(m, ell, s):
    seq = _odd_prefix(m, ell)
    for k in range(1, s // 2 + 1):
        seq += [ell + k - 1, m - ell - k]
    return seq + [m - ell - s // 2 - 1]


_P0_RULES: dict[P0Case, Callable[[int, int, int], list[int]]] = {
    P0Case.EVEN_S1: _p0_even_s1,
    P0Case.EVEN_S_ODD_GE3: _p0_even_s_odd,
    P0Case.L2_S0: _p0_even_s0,
    P0Case.EVEN_GE4_S0: _p0_even_s0,
    P0Case.EVEN_S2: _p0_even_s_even,
    P0Case.EVEN_S_EVEN_GE4: _p0_even_s_even,
    P0Case.ODD_S0: _p0_odd_s0,
    P0Case.ODD_S2: _p0_odd_s_even,
    P0Case.ODD_S_EVEN_GE4: _p0_odd_s_even,
    P0Case.L1_S1: _p0_odd_s1,
    P0Case.ODD_GE3_S1: _p0_odd_s1,
    P0Case.ODD_S3: _p0_odd_s_odd,
    P0Case.ODD_S_ODD_GE5: _p0_odd_s_odd,
}


def step2_sequence(params: LemmaOneParams) -> list[int]:
    """Labels for the first subpath, listed from the ``v_0`` end."""
    return _P0_RULES[params.case_id](params.m, params.ell, params.s)


def _alternate(pool: LabelPool, count: int) -> list[int]:
    return [pool.take_largest() if i % 2 == 0 else pool.take_smallest() for i in range(count)]


def amended_step1_sequence(params: LemmaOneParams) -> list[int]:
    """Last-subpath labels with the two tail corrections for even ``l``, ``s = 0``.

    When ``h_t - h_1`` is 0 or 1 the unamended sequence either reuses label
    ``l`` (also taken by the first subpath) or gives the vertex next to
    ``v_{h_t}`` the sum 2, which the first subpath already owns.
    """
    m, ell = params.m, params.ell
    seq = step1_sequence(m, ell)
    if ell % 2 == 0 and params.s == 0:
        if m == 2 * ell:
            return seq[:-2] + [ell - 1, m - ell + 1]
        if m == 2 * ell + 1:
            return seq[:-1] + [ell - 1]
    return seq


def step1_Pt(params: LemmaOneParams, pool: LabelPool, strict: bool = False) -> list[int]:
    seq = step1_sequence(params.m, params.ell) if strict else amended_step1_sequence(params)
    if len(seq) != params.ell:
        raise ConstructionError(f"last subpath got {len(seq)} labels, expected {params.ell}")
    return [pool.take(x) for x in seq]


def step2_P0(params: LemmaOneParams, pool: LabelPool) -> list[int]:
    seq = step2_sequence(params)
    h1 = params.h[0]
    if len(seq) != h1:
        raise ConstructionError(f"{params.case_id.value}: first subpath got {len(seq)} labels, expected {h1}")
    if len(set(seq)) != len(seq) or any(x not in pool for x in seq):
        raise ConstructionError(f"{params.case_id.value}: labels {seq} overlap or fall outside the pool")
    sums = _p0_sums(seq, params.h)
    expected = predicted_P0_sums(params)
    if set(sums) != expected:
        raise ConstructionError(f"{params.case_id.value}: first-subpath sums {sorted(sums)} != {sorted(expected)}")
    return [pool.take(x) for x in seq]


def _p0_sums(seq: Sequence[int], h: Sequence[int]) -> list[int]:
    # vertices v_0 .. v_{h_1 - 1}; every P_0 edge points towards v_{h_1}
    sums = [-seq[0]]
    for k in range(1, len(seq)):
        sums.append(seq[k - 1] - seq[k])
    return sums


def step3_middle(params: LemmaOneParams, pool: LabelPool) -> dict[int, int]:
    """Subpaths ``P_1 .. P_{t-2}``; returns edge index -> label."""
    h = params.h
    out: dict[int, int] = {}
    for i in range(1, params.t - 1):
        lo, hi = h[i - 1], h[i]
        edges = range(hi, lo, -1)  # nearest v_m first
        out.update(zip(edges, _alternate(pool, hi - lo)))
    return out


def step4_rule(params: LemmaOneParams) -> Step4Rule | None:
    if params.t < 2:
        return None
    size = params.h[-1] - params.h[-2]
    if size == 1:
        return Step4Rule.SINGLE_EDGE
    ell, s = params.ell, params.s
    if ell % 2 == 0 and s >= 2 and s % 2 == 0 and size % 2 == 1:
        return Step4Rule.EXCEPTION_A
    if ell % 2 == 1 and s >= 3 and s % 2 == 1 and size % 2 == 1:
        return Step4Rule.EXCEPTION_B
    if ((ell % 2 == 0 and s == 0) or (ell % 2 == 1 and s == 1)) and size >= 4 and size % 2 == 0:
        return Step4Rule.EXCEPTION_C
    return Step4Rule.FROM_END


def step4_last_middle(params: LemmaOneParams, pool: LabelPool) -> dict[int, int]:
    """Subpath ``P_{t-1}``; returns edge index -> label."""
    rule = step4_rule(params)
    if rule is None:
        return {}
    lo, hi = params.h[-2], params.h[-1]
    if rule is Step4Rule.SINGLE_EDGE:
        if len(pool) != 1:
            raise ConstructionError(f"expected one label left, pool has {len(pool)}")
        return {hi: pool.take_smallest()}
    if rule is Step4Rule.FROM_END:
        edges = range(hi, lo, -1)
    else:
        edges = range(lo + 1, hi + 1)
    return dict(zip(edges, _alternate(pool, hi - lo)))


def predicted_P0_sums(params: LemmaOneParams) -> set[int]:
    """Vertex sums on ``v_0 .. v_{h_1 - 1}`` as listed case by case.

    Built straight from the closed-form lists, independently of the label
    sequences, so that it can cross-check them.
    """
    m, ell, s = params.m, params.ell, params.s

    def a(k: int) -> int:
        # -m, m-1, -(m-3), m-5, ...
        return -m if k == 0 else (-1) ** (k + 1) * (m - (2 * k - 1))

    def b(j: int) -> int:
        # m-2l-1, -(m-2l-2), m-2l-3, ...
        return (-1) ** (j + 1) * (m - 2 * ell - j)

    def c(j: int) -> int:
        # m-2l+1, -(m-2l-1), m-2l-2, -(m-2l-3), ...
        return m - 2 * ell + 1 if j == 1 else (-1) ** (j + 1) * (m - 2 * ell - j + 1)

    case = params.case_id
    if case is P0Case.EVEN_S1:
        out = [a(k) for k in range(ell + 1)]
    elif case is P0Case.EVEN_S_ODD_GE3:
        out = [a(k) for k in range(ell + 1)] + [b(j) for j in range(1, s)]
    elif case is P0Case.L2_S0:
        out = [-m, 2]
    elif case is P0Case.EVEN_GE4_S0:
        out = [a(k) for k in range(ell - 1)] + [2]
    elif case is P0Case.EVEN_S2:
        out = [a(k) for k in range(ell + 1)] + [1]
    elif case is P0Case.EVEN_S_EVEN_GE4:
        out = [a(k) for k in range(ell + 1)] + [b(j) for j in range(1, s - 1)] + [1]
    elif case is P0Case.ODD_S0:
        out = [a(k) for k in range(ell)]
    elif case is P0Case.ODD_S2:
        out = [a(k) for k in range(ell)] + [c(1), c(2)]
    elif case is P0Case.ODD_S_EVEN_GE4:
        out = [a(k) for k in range(ell)] + [c(j) for j in range(1, s + 1)]
    elif case is P0Case.L1_S1:
        out = [-m, 2]
    elif case is P0Case.ODD_GE3_S1:
        out = [a(k) for k in range(ell)] + [2]
    elif case is P0Case.ODD_S3:
        out = [a(k) for k in range(ell)] + [c(1), c(2), 1]
    else:
        out = [a(k) for k in range(ell)] + [c(j) for j in range(1, s)] + [1]
    return set(out)


def _path_sums(labels: Mapping[int, int], m: int, top: int) -> list[int]:
    sums = [0] * (m + 1)
    for k in range(1, m + 1):
        tail, head = (k - 1, k) if k <= top else (k, k - 1)
        sums[tail] -= labels[k]
        sums[head] += labels[k]
    return sums


def _conditions_hold(sums: Sequence[int], h: Sequence[int]) -> bool:
    marked = set(h)
    rest = [x for v, x in enumerate(sums) if v not in marked]
    m = len(sums) - 1
    return (
        all(sums[v] >= 1 for v in marked)
        and all(1 <= abs(x) <= m for x in rest)
        and len(set(rest)) == len(rest)
    )


_P0_OWNS_TWO = {P0Case.L2_S0, P0Case.EVEN_GE4_S0, P0Case.L1_S1, P0Case.ODD_GE3_S1}


def _repair_middle(params: LemmaOneParams, labels: dict[int, int]) -> int | None:
    """Reverse the middle subpath whose internal vertex took the sum 2.

    Reversing a subpath negates its internal sums without changing their
    magnitudes, so the only clash it can remove or create is with the first
    subpath's value 2. Returns the index of the reversed subpath, if any.
    """
    if params.case_id not in _P0_OWNS_TWO:
        return None
    h, m = params.h, params.m
    sums = _path_sums(labels, m, h[-1])
    marked = set(h)
    hits = [v for v in range(h[0] + 1, h[-1]) if v not in marked and sums[v] == 2]
    if not hits:
        return None
    v = hits[0]
    i = max(k for k in range(params.t) if h[k] < v)
    lo, hi = h[i], h[i + 1]
    block = [labels[k] for k in range(lo + 1, hi + 1)]
    for k, lab in zip(range(lo + 1, hi + 1), reversed(block)):
        labels[k] = lab
    return i + 1


@dataclass(frozen=True)
class Lemma1Result:
    labeling: OrientedLabeling
    params: LemmaOneParams
    step4: Step4Rule | None
    edge_labels: tuple[int, ...]  # label of edge k at index k-1, original vertex order
    amended_tail: bool = False
    reversed_subpath: int | None = None  # normalized index i of a reversed P_i


def lemma1_construct(m: int, h: Sequence[int], strict: bool = False) -> Lemma1Result:
    """Spine orientation and labeling for marked interior positions ``h``.

    ``strict=True`` follows the four labeling steps to the letter. The
    default also applies the two corrections that make the result satisfy
    all three conditions on every input: the tail fix in
    ``amended_step1_sequence`` and the subpath reversal in
    ``_repair_middle``. Both leave the first subpath untouched.
    """
    params = normalize(m, h)
    hs = params.h
    pool = LabelPool(m)
    labels: dict[int, int] = {}

    pt = step1_Pt(params, pool, strict=strict)
    labels.update(zip(range(m, hs[-1], -1), pt))
    p0 = step2_P0(params, pool)
    labels.update(zip(range(1, hs[0] + 1), p0))
    labels.update(step3_middle(params, pool))
    labels.update(step4_last_middle(params, pool))

    if len(pool) or sorted(labels) != list(range(1, m + 1)):
        raise ConstructionError(f"labeling for m={m}, h={list(hs)} left {len(pool)} labels unused")

    flipped = None
    if not strict:
        flipped = _repair_middle(params, labels)
        if not _conditions_hold(_path_sums(labels, m, hs[-1]), hs):
            raise ConstructionError(f"spine labeling for m={m}, h={list(hs)} violates the sum conditions")

    top = hs[-1]
    arcs = []
    for k in range(1, m + 1):
        if k <= top:
            arcs.append((k - 1, k, labels[k]))
        else:
            arcs.append((k, k - 1, labels[k]))
    d = OrientedLabeling(m + 1, arcs)
    seq = [labels[k] for k in range(1, m + 1)]
    if params.reversed:
        d = d.relabeled([m - v for v in range(m + 1)]).sorted_arcs()
        seq.reverse()
    if not is_bijective_labeling(d):
        raise ConstructionError("spine labeling is not a bijection")
    amended = not strict and amended_step1_sequence(params) != step1_sequence(m, params.ell)
    return Lemma1Result(d, params, step4_rule(params), tuple(seq), amended, flipped)


def lemma1_label(m: int, h: Sequence[int]) -> OrientedLabeling:
    """Orient and label the path ``0..m`` around marked positions ``h``."""
    return lemma1_construct(m, h).labeling
