"""Command line: classify, orient, verify, fuzz, enumerate, demo.

Exit codes: 0 success, 1 verification failure, 2 bad input, 3 tree outside
the lobster family.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
from concurrent.futures import ProcessPoolExecutor
from pathlib import Path

from antimagic.formats import ParseError, dumps, emit_dot, emit_labeling, parse_labeling, parse_tree, tree_document
from antimagic.generate import LegProfile, random_lobster
from antimagic.graph import TreeError
from antimagic.lobster import construct_lobster
from antimagic.oracle import EXHAUSTIVE_MAX_EDGES, brute_force_antimagic_orientation, enumerate_lobsters
from antimagic.taxonomy import TreeClass, UnsupportedTreeError, classify, decompose
from antimagic.verify import verify_antimagic, verify_band_structure, verify_lemma1

EXIT_OK, EXIT_FAIL, EXIT_INPUT, EXIT_UNSUPPORTED = 0, 1, 2, 3
SEED_ENV = "ANTIMAGIC_SEED"


def _read(path: str) -> str:
    if path == "-":
        return sys.stdin.read()
    return Path(path).read_text()


def _load_tree(path: str):
    return parse_tree(_read(path))


def cmd_classify(args) -> int:
    t, names = _load_tree(args.file)
    cls = classify(t)
    out = {"class": cls.value, "vertices": t.n, "edges": t.m}
    if cls is not TreeClass.OTHER:
        dec = decompose(t).summary()
        for key in ("spine", "X", "X1", "Y"):
            dec[key] = [names[v] for v in dec[key]]
        out["decomposition"] = dec
    sys.stdout.write(dumps(out))
    return EXIT_OK


def cmd_orient(args) -> int:
    t, names = _load_tree(args.file)
    res = construct_lobster(t)
    d = res.labeling
    report = verify_antimagic(d) if args.verify else None
    if args.dot:
        sys.stdout.write(emit_dot(d, names))
    else:
        doc = emit_labeling(d, report, names)
        if args.verify and res.plan is not None:
            doc["bands"] = verify_band_structure(d, res.decomposition, res.plan).to_dict()
        sys.stdout.write(dumps(doc))
    if report is not None and not report.antimagic:
        return EXIT_FAIL
    return EXIT_OK


def cmd_verify(args) -> int:
    d, names = parse_labeling(_read(args.file))
    report = verify_antimagic(d)
    out = report.to_dict()
    out["collisions"] = [[names[u], names[v]] for u, v in report.collisions]
    sys.stdout.write(dumps(out))
    return EXIT_OK if report.antimagic else EXIT_FAIL


def _fuzz_one(job):
    spine, seed = job
    t = random_lobster(spine, LegProfile(), seed=seed, relabel=True)
    res = construct_lobster(t)
    ok = verify_antimagic(res.labeling).antimagic
    if ok and res.plan is not None:
        ok = verify_band_structure(res.labeling, res.decomposition, res.plan).ok
    return seed, t.m, ok, tree_document(t) if not ok else None


def _map(fn, jobs, workers: int):
    if workers > 1:
        with ProcessPoolExecutor(max_workers=workers) as pool:
            return list(pool.map(fn, jobs, chunksize=16))
    return [fn(j) for j in jobs]


def cmd_fuzz(args) -> int:
    jobs = [(args.spine, args.seed + i) for i in range(args.count)]
    results = _map(_fuzz_one, jobs, args.workers)
    failures = [r for r in results if not r[2]]
    for seed, m, _, doc in failures:
        print(f"FAIL seed={seed} m={m} tree={json.dumps(doc)}")
    print(f"fuzz: {len(results) - len(failures)}/{len(results)} passed (spine={args.spine}, seeds {args.seed}..)")
    return EXIT_FAIL if failures else EXIT_OK


def _enumerate_one(job):
    t, oracle = job
    res = construct_lobster(t)
    ok = verify_antimagic(res.labeling).antimagic
    if ok and res.plan is not None:
        ok = verify_band_structure(res.labeling, res.decomposition, res.plan).ok
    oracle_ok = None
    if oracle and t.m <= EXHAUSTIVE_MAX_EDGES:
        oracle_ok = brute_force_antimagic_orientation(t).found
    return ok, oracle_ok


def cmd_enumerate(args) -> int:
    bad = 0
    for n in range(1, args.max_n + 1):
        trees = enumerate_lobsters(n)
        results = _map(_enumerate_one, [(t, args.oracle) for t in trees], args.workers)
        passed = sum(ok for ok, _ in results)
        line = f"n={n}: {passed}/{len(trees)} lobsters verified"
        if args.oracle:
            checked = [o for _, o in results if o is not None]
            line += f", oracle witnesses {sum(checked)}/{len(checked)}"
            bad += len(checked) - sum(checked)
        bad += len(trees) - passed
        print(line)
    return EXIT_FAIL if bad else EXIT_OK


def cmd_demo(args) -> int:
    from antimagic.figure1 import PANELS
    from antimagic.paths import lemma1_construct

    all_ok = True
    for panel in PANELS:
        res = lemma1_construct(panel.m, panel.h)
        rep = verify_lemma1(res.labeling, panel.h)
        matches = res.edge_labels == panel.labels
        all_ok &= rep.ok and matches
        print(f"# {panel.title}: m={panel.m}, marked={list(panel.h)}")
        print(f"labels from v0: {list(res.edge_labels)}  (matches figure: {matches})")
        doc = emit_labeling(res.labeling)
        doc["verdicts"] = rep.to_dict()
        sys.stdout.write(dumps(doc))
    return EXIT_OK if all_ok else EXIT_FAIL


def build_parser() -> argparse.ArgumentParser:
    default_seed = int(os.environ.get(SEED_ENV, "0"))
    parser = argparse.ArgumentParser(prog="antimagic", description="Antimagic orientations of lobsters")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("classify", help="tree class and spine decomposition")
    p.add_argument("file")
    p.set_defaults(func=cmd_classify)

    p = sub.add_parser("orient", help="antimagic orientation of a lobster")
    p.add_argument("file")
    fmt = p.add_mutually_exclusive_group()
    fmt.add_argument("--json", action="store_true", help="labeling document (default)")
    fmt.add_argument("--dot", action="store_true", help="DOT graph text")
    p.add_argument("--verify", action="store_true")
    p.set_defaults(func=cmd_orient)

    p = sub.add_parser("verify", help="check a labeling document")
    p.add_argument("file")
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("fuzz", help="random lobsters: construct and verify")
    p.add_argument("--count", type=int, default=100)
    p.add_argument("--spine", type=int, default=20)
    p.add_argument("--seed", type=int, default=default_seed)
    p.add_argument("--workers", type=int, default=1)
    p.set_defaults(func=cmd_fuzz)

    p = sub.add_parser("enumerate", help="every lobster up to a size")
    p.add_argument("--max-n", type=int, default=8)
    p.add_argument("--oracle", action="store_true", help="also brute-force a witness")
    p.add_argument("--workers", type=int, default=1)
    p.set_defaults(func=cmd_enumerate)

    p = sub.add_parser("demo", help="worked examples")
    p.add_argument("which", choices=["figure1"])
    p.set_defaults(func=cmd_demo)
    return parser


def main(argv: list[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except UnsupportedTreeError as exc:
        print(f"unsupported tree: {exc}", file=sys.stderr)
        return EXIT_UNSUPPORTED
    except (ParseError, TreeError, OSError, ValueError) as exc:
        print(f"input error: {exc}", file=sys.stderr)
        return EXIT_INPUT


if __name__ == "__main__":
    sys.exit(main())
