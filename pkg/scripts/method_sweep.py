"""Agreement and timing of the three pure-twist routes as word length grows."""

import argparse
import random
import time

from belts.core import perm_elim
from belts.matrix_rep import pure_twist_via_rho_framed
from belts.reduction import pure_twist
from belts.stack import build_stack, evaluate
from belts.verify import random_framed


def main():
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--samples", type=int, default=2000)
    ap.add_argument("--seed", type=int, default=0)
    ap.add_argument("--lengths", type=int, nargs="+", default=[4, 8, 16, 32, 64, 128])
    args = ap.parse_args()

    print(f"{'max len':>7} {'agree':>11} {'elim ms':>8} {'stack ms':>9} {'matrix ms':>10}")
    for max_len in args.lengths:
        rng = random.Random(f"{args.seed}/{max_len}")
        braids = [random_framed(rng, max_len) for _ in range(args.samples)]
        timings = []
        results = []
        for fn in (pure_twist, lambda fb: evaluate(build_stack(fb)), pure_twist_via_rho_framed):
            t0 = time.perf_counter()
            results.append([fn(fb) for fb in braids])
            timings.append(1000 * (time.perf_counter() - t0))
        agree = sum(
            a == s[0] == m and s[1] == perm_elim(fb.word)
            for fb, a, s, m in zip(braids, *results)
        )
        print(f"{max_len:>7} {agree:>5}/{args.samples:<5} {timings[0]:>8.1f} {timings[1]:>9.1f} {timings[2]:>10.1f}")


if __name__ == "__main__":
    main()
