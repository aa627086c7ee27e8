"""Brute-force antimagic orientations for every tree up to ``--max-n`` vertices.

Prints per-size counts, search effort, and how often the lobster construction
agrees that a witness exists (it always should).

    python3 scripts/oracle_sweep.py --max-n 9 --workers 4
"""

import argparse
import time

from antimagic.lobster import construct_lobster
from antimagic.oracle import brute_force_antimagic_orientation, enumerate_trees
from antimagic.taxonomy import LOBSTER_LIKE, classify
from antimagic.verify import verify_antimagic


def main() -> None:
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--max-n", type=int, default=8)
    ap.add_argument("--workers", type=int, default=1)
    args = ap.parse_args()

    for n in range(1, args.max_n + 1):
        start = time.perf_counter()
        trees = enumerate_trees(n)
        found = explored = lob = lob_ok = 0
        for t in trees:
            res = brute_force_antimagic_orientation(t, workers=args.workers)
            found += res.found
            explored += res.explored
            if classify(t) in LOBSTER_LIKE:
                lob += 1
                lob_ok += verify_antimagic(construct_lobster(t).labeling).antimagic
        print(
            f"n={n:>2}: trees {len(trees):>3}, witnesses {found:>3}, nodes {explored:>8}, "
            f"lobster constructions {lob_ok}/{lob}, {time.perf_counter() - start:.2f}s"
        )


if __name__ == "__main__":
    main()
