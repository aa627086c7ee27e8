"""Acceptance criteria, one test each; every test prints a PASS/FAIL line."""

from __future__ import annotations

import contextlib
import itertools
import random
import time
from collections import Counter
from pathlib import Path


from antimagic.figure1 import PANELS
from antimagic.formats import dumps, emit_labeling
from antimagic.generate import LegProfile, random_lobster
from antimagic.graph import OrientedLabeling, Tree, vertex_sums
from antimagic.lobster import construct_lobster
from antimagic.oracle import brute_force_antimagic_orientation, enumerate_lobsters, enumerate_trees
from antimagic.paths import (
    P0Case,
    Step4Rule,
    label_path_antimagic,
    lemma1_construct,
    lemma1_label,
    orient_bipartite,
    predicted_P0_sums,
)
from antimagic.verify import verify_antimagic, verify_band_structure, verify_lemma1
from conftest import random_marks

GOLDEN = Path(__file__).parent / "golden"
EXCEPTIONS = {Step4Rule.EXCEPTION_A, Step4Rule.EXCEPTION_B, Step4Rule.EXCEPTION_C}


@contextlib.contextmanager
def criterion(capsys, number: int, title: str, limit: float):
    start = time.perf_counter()
    info: dict = {}
    try:
        yield info
        elapsed = time.perf_counter() - start
        assert elapsed < limit, f"took {elapsed:.1f}s, limit {limit}s"
    except BaseException as exc:
        with capsys.disabled():
            print(f"\n[criterion {number}] FAIL {title}: {exc}")
        raise
    with capsys.disabled():
        extra = info.get("detail", "")
        print(f"\n[criterion {number}] PASS {title} ({elapsed:.2f}s) {extra}")


def test_1_figure_golden(capsys):
    with criterion(capsys, 1, "figure golden vectors", 1.0) as info:
        for k, panel in enumerate(PANELS, 1):
            d = lemma1_label(panel.m, panel.h).sorted_arcs()
            text = dumps(emit_labeling(d))
            assert text == (GOLDEN / f"figure1_panel{k}.json").read_text(), f"panel {k}"
        info["detail"] = "4/4 panels byte-identical"


def _check_lemma1(m, h, cases, rules, failures):
    res = lemma1_construct(m, h)
    if not verify_lemma1(res.labeling, h).ok:
        failures.append((m, h, "conditions"))
    s = vertex_sums(res.labeling)
    p = res.params
    norm = [s[m - v] for v in range(m + 1)] if p.reversed else [s[v] for v in range(m + 1)]
    if set(norm[: p.h[0]]) != predicted_P0_sums(p) or len(norm[: p.h[0]]) != len(predicted_P0_sums(p)):
        failures.append((m, h, "P0 sums"))
    cases[p.case_id] += 1
    rules[res.step4] += 1


def test_2_lemma1_suite(capsys):
    with criterion(capsys, 2, "spine labeling property suite", 60.0) as info:
        cases, rules, failures = Counter(), Counter(), []
        exhaustive = 0
        for m in range(2, 13):
            for k in range(1, m):
                for h in itertools.combinations(range(1, m), k):
                    _check_lemma1(m, h, cases, rules, failures)
                    exhaustive += 1
        rng = random.Random(2024)
        for _ in range(10_000):
            m = rng.randint(2, 30)
            _check_lemma1(m, random_marks(rng, m), cases, rules, failures)
        assert not failures, failures[:5]
        assert set(cases) == set(P0Case), set(P0Case) - set(cases)
        assert EXCEPTIONS <= set(rules), EXCEPTIONS - set(rules)
        info["detail"] = f"{exhaustive} exhaustive + 10000 random, 13/13 cases, 3/3 exceptions"


def _lobster_ok(t) -> bool:
    res = construct_lobster(t)
    if not verify_antimagic(res.labeling).antimagic or not res.labeling.orients(t):
        return False
    return res.plan is None or verify_band_structure(res.labeling, res.decomposition, res.plan).ok


def test_3_lobsters_exhaustive(capsys):
    with criterion(capsys, 3, "every lobster on <= 10 vertices", 120.0) as info:
        total, bad = 0, []
        for n in range(1, 11):
            for t in enumerate_lobsters(n):
                total += 1
                if not _lobster_ok(t):
                    bad.append(t.edges)
        assert not bad, bad[:3]
        info["detail"] = f"{total} lobsters, 0 failures"


def test_4_lobsters_random(capsys):
    with criterion(capsys, 4, "10^4 random lobsters", 300.0) as info:
        rng = random.Random(7)
        profile = LegProfile(0.6, 4, 3)
        bad, max_m = [], 0
        for seed in range(10_000):
            p = rng.randint(2, 100)
            t = random_lobster(p, profile, seed=seed, relabel=True)
            max_m = max(max_m, t.m)
            if not verify_antimagic(construct_lobster(t).labeling).antimagic:
                bad.append((p, seed))
        assert not bad, bad[:5]
        info["detail"] = f"0 failures, largest m={max_m}"


def test_5_oracle(capsys):
    with criterion(capsys, 5, "oracle consistency on <= 8 vertices", 600.0) as info:
        trees = witnesses = lobsters = 0
        for n in range(1, 9):
            for t in enumerate_trees(n):
                trees += 1
                res = brute_force_antimagic_orientation(t)
                assert res.found, t.edges
                assert verify_antimagic(res.witness).antimagic and res.witness.orients(t)
                witnesses += 1
            for t in enumerate_lobsters(n):
                d = construct_lobster(t).labeling
                assert d.orients(t) and verify_antimagic(d).antimagic, t.edges
                lobsters += 1
        info["detail"] = f"{witnesses}/{trees} trees have a witness, {lobsters} constructions are witnesses"


def test_6_path_labeling(capsys):
    with criterion(capsys, 6, "consecutive path labeling, m in [2, 100]", 1.0) as info:
        for m in range(2, 101):
            labels = label_path_antimagic(m)
            und = [(labels[k - 1] if k else 0) + (labels[k] if k < m else 0) for k in range(m + 1)]
            assert len(set(und)) == m + 1, m
            d = orient_bipartite(Tree.path(m + 1), {(k, k + 1): lab for k, lab in enumerate(labels)})
            assert verify_antimagic(d).antimagic, m
        info["detail"] = "99/99"


def _band_of(alloc, label):
    for name, (lo, hi) in alloc.intervals().items():
        if lo <= label <= hi:
            return name
    raise AssertionError(label)


def test_7_fault_injection(capsys):
    with criterion(capsys, 7, "fault injection on cross-band swaps", 60.0) as info:
        rng = random.Random(99)
        swaps = flagged = sums_only = breaking = jointly = band_on_breaking = 0
        seed = 0
        while swaps < 1000:
            seed += 1
            t = random_lobster(rng.randint(4, 40), LegProfile(0.6, 3, 2), seed=seed)
            res = construct_lobster(t)
            if res.plan is None:
                continue
            arcs = list(res.labeling.arcs)
            i, j = rng.sample(range(len(arcs)), 2)
            if _band_of(res.allocation, arcs[i].label) == _band_of(res.allocation, arcs[j].label):
                continue
            arcs[i], arcs[j] = arcs[i]._replace(label=arcs[j].label), arcs[j]._replace(label=arcs[i].label)
            d = OrientedLabeling(t.n, arcs)
            swaps += 1
            rep = verify_band_structure(d, res.decomposition, res.plan)
            flagged += not rep.ok
            sums_only += any(k != "arc labels inside their blocks" for k in rep.failed)
            anti = verify_antimagic(d)
            if not anti.antimagic:
                breaking += 1
                jointly += bool(anti.collisions or not anti.bijective or not rep.ok)
                band_on_breaking += not rep.ok
        assert flagged >= 990, flagged
        assert jointly == breaking
        info["detail"] = (
            f"{flagged}/1000 flagged by the band report ({sums_only} by sum bands alone); "
            f"{jointly}/{breaking} antimagic-breaking swaps flagged jointly ({band_on_breaking} by the band report)"
        )
