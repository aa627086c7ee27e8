"""Large random lobsters: construct, verify, report sizes and timing.

    python3 scripts/fuzz_lobsters.py --count 2000 --max-spine 200 --workers 4
"""

import argparse
import random
import time
from concurrent.futures import ProcessPoolExecutor

from antimagic.generate import LegProfile, random_lobster
from antimagic.lobster import construct_lobster
from antimagic.verify import verify_antimagic, verify_band_structure


def run(job):
    p, seed = job
    t = random_lobster(p, LegProfile(0.6, 4, 3), seed=seed, relabel=True)
    start = time.perf_counter()
    res = construct_lobster(t)
    elapsed = time.perf_counter() - start
    ok = verify_antimagic(res.labeling).antimagic
    if res.plan is not None:
        ok = ok and verify_band_structure(res.labeling, res.decomposition, res.plan).ok
    return t.m, elapsed, ok, seed


def main() -> None:
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--count", type=int, default=2000)
    ap.add_argument("--max-spine", type=int, default=200)
    ap.add_argument("--seed", type=int, default=0)
    ap.add_argument("--workers", type=int, default=1)
    args = ap.parse_args()

    rng = random.Random(args.seed)
    jobs = [(rng.randint(2, args.max_spine), args.seed + k) for k in range(args.count)]
    if args.workers > 1:
        with ProcessPoolExecutor(args.workers) as pool:
            rows = list(pool.map(run, jobs, chunksize=32))
    else:
        rows = [run(j) for j in jobs]
    bad = [r for r in rows if not r[2]]
    sizes = sorted(r[0] for r in rows)
    print(f"{len(rows) - len(bad)}/{len(rows)} verified")
    print(f"edges: median {sizes[len(sizes) // 2]}, max {sizes[-1]}")
    print(f"construction time: mean {sum(r[1] for r in rows) / len(rows) * 1e3:.2f} ms, max {max(r[1] for r in rows) * 1e3:.2f} ms")
    for m, _, _, seed in bad:
        print(f"FAIL m={m} seed={seed}")


if __name__ == "__main__":
    main()
