"""Exhaustive classification of all codes on a few neurons."""

from __future__ import annotations

import hashlib
from collections import Counter
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from pathlib import Path

import numpy as np

from .codes import Code, fmt_set, is_connected_code
from .dimension import (DEFAULT_BUDGET, DEFAULT_DUP_BOUND, DimensionVerdict,
                        SearchBudgetExceeded, d_star)

MAX_REJECTIONS = 10**6


@dataclass(frozen=True)
class CensusRow:
    code: Code
    connected: bool
    value: int | None = None
    exactness: str | None = None
    witness: tuple | None = None
    verdict: DimensionVerdict | None = None

    def line(self) -> str:
        if not self.connected:
            i, a, b = self.witness
            return f"{self.code.shorthand()}\tno\t-\t-\tneuron {i}: {fmt_set(a)} {fmt_set(b)}"
        d = "2|3" if self.value is None else str(self.value)
        return f"{self.code.shorthand()}\tyes\t{d}\t{self.exactness}\t"


@dataclass(frozen=True)
class Census:
    n: int
    rows: tuple[CensusRow, ...]

    def summary(self) -> Counter:
        return Counter((r.connected, r.value, r.exactness) for r in self.rows)

    def table(self) -> str:
        lines = ["code\tconnected\td_star\texactness\twitness"]
        lines += [r.line() for r in self.rows]
        lines.append("")
        lines.append(f"# n={self.n} codes={len(self.rows)}")
        for (conn, value, ex), k in sorted(self.summary().items(), key=str):
            label = "connected" if conn else "not-connected"
            if conn:
                label += f" d*={value if value is not None else '2|3'} {ex}"
            lines.append(f"# {label}: {k}")
        return "\n".join(lines) + "\n"


def all_codes(n: int):
    """Every code on ``n`` neurons (each contains the empty word)."""
    words = list(range(1, 1 << n))
    for bits in range(1 << len(words)):
        yield Code(n, frozenset(w for k, w in enumerate(words) if bits >> k & 1))


def classify(code: Code, dup_bound: int = DEFAULT_DUP_BOUND,
             budget: int = DEFAULT_BUDGET) -> CensusRow:
    conn = is_connected_code(code)
    if not conn:
        return CensusRow(code, False, witness=conn.witness)
    try:
        v = d_star(code, dup_bound, budget)
    except SearchBudgetExceeded:
        return CensusRow(code, True, None, "budget")
    return CensusRow(code, True, v.value, v.exactness, verdict=v)


def _classify_args(args):
    return classify(*args)


def code_hash(code: Code) -> str:
    return hashlib.sha1(code.serialize().encode()).hexdigest()[:16]


def classify_all(n: int, dup_bound: int = DEFAULT_DUP_BOUND, budget: int = DEFAULT_BUDGET,
                 jobs: int = 1, cert_dir=None) -> Census:
    """Classify all ``2**(2**n - 1)`` codes on ``n <= 4`` neurons.

    Rows are sorted by the serialized code, so the table does not depend on
    ``jobs``. With ``cert_dir`` each connected code's certificate grid is
    written to ``<cert_dir>/<hash>.json``.
    """
    if not 1 <= n <= 4:
        raise ValueError("census supports 1 <= n <= 4")
    codes = sorted(all_codes(n), key=lambda c: c.serialize())
    tasks = [(c, dup_bound, budget) for c in codes]
    if jobs > 1:
        with ProcessPoolExecutor(jobs) as pool:
            rows = list(pool.map(_classify_args, tasks, chunksize=64))
    else:
        rows = [_classify_args(t) for t in tasks]
    if cert_dir is not None:
        from .gridio import dump, grid_to_dict
        cert_dir = Path(cert_dir)
        for r in rows:
            if r.verdict is not None:
                doc = grid_to_dict(r.verdict.grid) | {"code": r.code.to_dict(),
                                                      "d_star": r.value}
                dump(doc, cert_dir / f"{code_hash(r.code)}.json")
    return Census(n, tuple(rows))


def random_connected_codes(n: int, count: int, seed: int) -> list[Code]:
    """Rejection-sample connected codes; each non-empty word kept with probability 1/2."""
    if count > 10**4:
        raise ValueError("count must be at most 10**4")
    rng = np.random.default_rng(seed)
    words = np.arange(1, 1 << n)
    out: list[Code] = []
    rejected = 0
    while len(out) < count:
        keep = words[rng.random(len(words)) < 0.5]
        code = Code(n, frozenset(int(w) for w in keep))
        if is_connected_code(code):
            out.append(code)
        else:
            rejected += 1
            if rejected >= MAX_REJECTIONS:
                raise RuntimeError(f"gave up after {rejected} rejected samples")
    return out
