"""Exact realizability on the line.

Connected subsets of the line are intervals, so a realization in dimension
one is read off left to right as a word of atom labels. A word is valid
when neighbouring entries are nested, each neuron occupies a contiguous
run, and every non-empty codeword occurs. This search stands in for the
bipartite sensor-graph test from the convex-code literature.

Length bound: each boundary between consecutive entries (including the
two outer boundaries against the empty word) starts or ends at least one
neuron, and a contiguous neuron starts and ends exactly once. A word of
length ``L`` has ``L + 1`` boundaries, so ``L + 1 <= 2n``. Searching up to
``2n + 1`` is therefore complete.
"""

from __future__ import annotations

from typing import Sequence

import numpy as np

from .codes import Code, comparable, require_connected
from .grid import GridRealization

AtomWord = tuple[int, ...]


def search_word(code: Code) -> AtomWord | None:
    """Depth-first search for a valid atom word; ``None`` if there is none.

    Candidates are tried in (cardinality, lexicographic) order, the empty
    word acting only as a separator between non-empty entries.
    """
    require_connected(code)
    targets = code.nonempty
    if not targets:
        return ()
    max_len = 2 * code.n + 1
    alphabet = code.sorted_words  # empty word first
    all_targets = frozenset(targets)

    def dfs(word: list[int], closed: int, covered: frozenset):
        if covered == all_targets:
            return tuple(word)
        if len(word) >= max_len:
            return None
        # uncovered words touching a closed neuron can never appear
        if any(w & closed for w in all_targets - covered):
            return None
        last = word[-1] if word else 0
        for w in alphabet:
            if w == last or not comparable(w, last) or w & closed:
                continue
            if not word and w == 0:
                continue
            if w == 0 and last == 0:
                continue
            found = dfs(word + [w], closed | (last & ~w), covered | ({w} if w else set()))
            if found is not None:
                return found
        return None

    found = dfs([], 0, frozenset())
    if found is None:
        return None
    while found and found[-1] == 0:
        found = found[:-1]
    return found


def verify_word(code: Code, word: Sequence[int]) -> bool:
    """Check a word directly against the definition, sharing nothing with the search."""
    word = [int(w) for w in word]
    if any(w not in code.words for w in word):
        return False
    if {w for w in word if w} != set(code.nonempty):
        return False
    for a, b in zip(word, word[1:]):
        if (a & b) != a and (a & b) != b:
            return False
    for i in range(code.n):
        hits = [k for k, w in enumerate(word) if w >> i & 1]
        if hits and hits[-1] - hits[0] + 1 != len(hits):
            return False
    return True


def word_to_grid(code: Code, word: Sequence[int]) -> GridRealization:
    if not verify_word(code, word):
        raise ValueError("word does not realize the code")
    cells = list(word) or [0]
    return GridRealization(np.array(cells, dtype=np.uint64), code.n)


def universal_grid(code: Code) -> GridRealization:
    """Any code, connected or not, on the line with fields allowed to split.

    Each non-empty codeword gets one cell and neighbours are kept apart by
    an empty cell, so every adjacency is with the empty word and the
    extracted code is exactly ``code``.
    """
    cells = [0]
    for w in code.nonempty:
        cells += [w, 0]
    return GridRealization(np.array(cells, dtype=np.uint64), code.n)
