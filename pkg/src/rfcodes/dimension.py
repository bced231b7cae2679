"""Minimal embedding dimension of a connected code, with certificates.

The three searches run in order and each negative answer gates the next:
an atom word on the line (exact), a planar admissible graph with bounded
atom multiplicity (exact when found), and otherwise the balls-and-tubes
grid in dimension 3. A value of 3 is conditional on the multiplicity bound
because nothing caps how many components a planar realization may need.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from .admissible import (BUDGET, AdmissibleGraph, SearchOutcome,
                         search_planar_admissible)
from .codes import Code, require_connected
from .grid import GridRealization, verify_grid
from .planarity import Embedding
from .realize1d import AtomWord, search_word, verify_word, word_to_grid
from .realize2d import fatten_embedding
from .realize3d import build_3d

EXACT = "exact"
CONDITIONAL = "conditional"

DEFAULT_DUP_BOUND = 2
DEFAULT_BUDGET = 10**6


class SearchBudgetExceeded(RuntimeError):
    """The planar search ran out of budget; all that is known is d* in {2, 3}."""

    def __init__(self, outcome: SearchOutcome, grid3d: GridRealization):
        self.outcome = outcome
        self.partial = (2, 3)
        self.grid3d = grid3d
        super().__init__(
            f"planar search budget of {outcome.nodes} nodes exhausted; d* in {{2, 3}}"
        )


@dataclass(frozen=True)
class DimensionVerdict:
    value: int
    exactness: str
    dup_bound: int
    grid: GridRealization
    word: AtomWord | None = None
    graph: AdmissibleGraph | None = None
    embedding: Embedding | None = None
    search: SearchOutcome | None = field(default=None, compare=False)
    empty_neurons: tuple[int, ...] = ()

    @property
    def exact(self) -> bool:
        return self.exactness == EXACT

    def describe(self) -> str:
        if self.exact:
            return f"d* = {self.value} (exact)"
        return f"d* = {self.value} (conditional on dup_bound={self.dup_bound})"


def d_star(code: Code, dup_bound: int = DEFAULT_DUP_BOUND,
           budget: int = DEFAULT_BUDGET) -> DimensionVerdict:
    require_connected(code)
    empty = code.empty_neurons()
    word = search_word(code)
    if word is not None:
        assert verify_word(code, word)
        return DimensionVerdict(1, EXACT, dup_bound, word_to_grid(code, word),
                                word=word, empty_neurons=empty)

    outcome = search_planar_admissible(code, dup_bound, budget)
    if outcome.found:
        grid = fatten_embedding(code, outcome.graph, outcome.embedding)
        return DimensionVerdict(2, EXACT, dup_bound, grid, graph=outcome.graph,
                                embedding=outcome.embedding, search=outcome,
                                empty_neurons=empty)

    grid3 = build_3d(code).grid
    if outcome.status == BUDGET:
        raise SearchBudgetExceeded(outcome, grid3)
    report = verify_grid(grid3, code)
    if not report.ok:  # pragma: no cover - construction guarantees this
        raise RuntimeError(f"3D construction failed verification: {report}")
    return DimensionVerdict(3, CONDITIONAL, dup_bound, grid3, search=outcome,
                            empty_neurons=empty)
