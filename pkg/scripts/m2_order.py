"""Compare the two ways of handing out the matching labels on X-to-Y arcs.

Runs every lobster up to ``--max-n`` vertices (plus random ones) with the
labels handed out increasing and decreasing along increasing partial sums,
and counts outputs that are not antimagic.

    python3 scripts/m2_order.py --max-n 10 --random 5000
"""

import argparse

from antimagic.formats import tree_document
from antimagic.generate import LegProfile, random_lobster
from antimagic.lobster import construct_lobster
from antimagic.oracle import enumerate_lobsters
from antimagic.verify import verify_antimagic


def main() -> None:
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--max-n", type=int, default=10)
    ap.add_argument("--random", type=int, default=5000)
    ap.add_argument("--seed", type=int, default=0)
    args = ap.parse_args()

    trees = [t for n in range(1, args.max_n + 1) for t in enumerate_lobsters(n)]
    trees += [random_lobster(12, LegProfile(0.7, 4, 3), seed=args.seed + k) for k in range(args.random)]
    for order in ("descending", "ascending"):
        bad = [t for t in trees if not verify_antimagic(construct_lobster(t, m2_order=order).labeling).antimagic]
        print(f"{order:>10}: {len(bad)}/{len(trees)} not antimagic")
        if bad:
            print(f"            smallest: {tree_document(min(bad, key=lambda t: t.n))['edges']}")


if __name__ == "__main__":
    main()
