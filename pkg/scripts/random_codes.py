"""d* distribution over seeded random connected codes.

    python3 scripts/random_codes.py --n 5 --count 200 --seed 7
"""

import argparse
import time
from collections import Counter

from rfcodes.census import random_connected_codes
from rfcodes.config import SampleConfig, add_arguments, from_namespace
from rfcodes.dimension import SearchBudgetExceeded, d_star
from rfcodes.grid import verify_grid


def main():
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    add_arguments(ap, SampleConfig)
    cfg = from_namespace(SampleConfig, ap.parse_args())

    t = time.perf_counter()
    tally = Counter()
    for code in random_connected_codes(cfg.n, cfg.count, cfg.seed):
        try:
            v = d_star(code, cfg.search.dup_bound, cfg.search.budget)
        except SearchBudgetExceeded:
            tally["2|3 budget"] += 1
            continue
        assert verify_grid(v.grid, code).ok
        tally[f"{v.value} {v.exactness}"] += 1
    for key, k in sorted(tally.items()):
        print(f"d* = {key}: {k}")
    print(f"{cfg.count} codes on {cfg.n} neurons, seed {cfg.seed}, "
          f"{time.perf_counter() - t:.1f}s")


if __name__ == "__main__":
    main()
