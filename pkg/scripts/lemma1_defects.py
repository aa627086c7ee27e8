"""Count inputs where the literal four-step spine labeling breaks the sum conditions.

For every m in the range and every nonempty set of interior marked
positions, run the construction with ``strict=True`` and tally failures by
first-subpath case, then confirm the default (repaired) construction passes.

    python3 scripts/lemma1_defects.py --max-m 14
"""

import argparse
import itertools
from collections import Counter

from antimagic.paths import ConstructionError, lemma1_construct, normalize
from antimagic.verify import verify_lemma1


def main() -> None:
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--max-m", type=int, default=14)
    args = ap.parse_args()

    print(f"{'m':>3} {'inputs':>8} {'strict fail':>11} {'rate':>7} {'repaired fail':>13}")
    by_case: Counter = Counter()
    for m in range(2, args.max_m + 1):
        total = strict_bad = fixed_bad = 0
        for k in range(1, m):
            for h in itertools.combinations(range(1, m), k):
                total += 1
                try:
                    ok = verify_lemma1(lemma1_construct(m, h, strict=True).labeling, h).ok
                except ConstructionError:
                    ok = False
                if not ok:
                    strict_bad += 1
                    by_case[normalize(m, h).case_id.value] += 1
                fixed_bad += not verify_lemma1(lemma1_construct(m, h).labeling, h).ok
        print(f"{m:>3} {total:>8} {strict_bad:>11} {strict_bad / total:>7.2%} {fixed_bad:>13}")
    print("\nstrict failures by first-subpath case:")
    for case, count in by_case.most_common():
        print(f"  {case:<20} {count}")


if __name__ == "__main__":
    main()
