"""Classify every code on n <= 4 neurons and print the census table.

    python3 scripts/census.py --n 3
    python3 scripts/census.py --n 4 --jobs 8 --cert-dir out/certs4 --output out/census4.tsv
"""

import argparse
import time
from pathlib import Path

from rfcodes.census import classify_all
from rfcodes.config import CensusConfig, add_arguments, from_namespace


def main():
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    add_arguments(ap, CensusConfig)
    cfg = from_namespace(CensusConfig, ap.parse_args())

    t = time.perf_counter()
    census = classify_all(cfg.n, cfg.search.dup_bound, cfg.search.budget, cfg.jobs, cfg.cert_dir)
    table = census.table()
    if cfg.output:
        Path(cfg.output).parent.mkdir(parents=True, exist_ok=True)
        Path(cfg.output).write_text(table)
        print("\n".join(line for line in table.splitlines() if line.startswith("#")))
    else:
        print(table, end="")
    print(f"# elapsed {time.perf_counter() - t:.1f}s")


if __name__ == "__main__":
    main()
