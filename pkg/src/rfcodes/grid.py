"""Labeled-cell grids as realizations, and the checks that certify them.

A grid is a dense ``uint64`` array of codeword masks in 1, 2 or 3
dimensions. Cells outside the array are implicitly labeled with the empty
word. Two cells are adjacent when they share a face (orthogonal
neighbours only).
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Mapping

import numpy as np
from scipy.sparse import coo_matrix
from scipy.sparse.csgraph import connected_components

from .admissible import AdmissibleGraph
from .codes import Code, fmt_set

MAX_CELLS = 10**7


class GridError(ValueError):
    pass


@dataclass(frozen=True, eq=False)
class GridRealization:
    labels: np.ndarray
    n: int

    def __post_init__(self):
        arr = np.array(self.labels, dtype=np.uint64)
        if arr.ndim not in (1, 2, 3):
            raise GridError(f"grid dimension must be 1, 2 or 3, got {arr.ndim}")
        if arr.size == 0 or min(arr.shape) < 1:
            raise GridError("grid extents must be positive")
        if arr.size > MAX_CELLS:
            raise GridError(f"grid has {arr.size} cells, limit is {MAX_CELLS}")
        if self.n < 64 and arr.size and int(arr.max()) >> self.n:
            raise GridError(f"grid labels reference neurons above n={self.n}")
        arr.setflags(write=False)
        object.__setattr__(self, "labels", arr)

    @property
    def dim(self) -> int:
        return self.labels.ndim

    @property
    def extents(self) -> tuple[int, ...]:
        return self.labels.shape

    def __eq__(self, other):
        if not isinstance(other, GridRealization):
            return NotImplemented
        return self.n == other.n and np.array_equal(self.labels, other.labels)

    __hash__ = None


@dataclass(frozen=True)
class AdjacencyViolation:
    cell_a: tuple[int, ...]
    cell_b: tuple[int, ...]
    label_a: int
    label_b: int

    def __str__(self):
        return (f"cells {self.cell_a} {fmt_set(self.label_a)} and "
                f"{self.cell_b} {fmt_set(self.label_b)} are incomparable neighbours")


def extract_code(grid: GridRealization) -> Code:
    words = frozenset(int(w) for w in np.unique(grid.labels))
    return Code(grid.n, words | {0})


def fields_from_atoms(grid: GridRealization) -> dict[int, np.ndarray]:
    """Boolean cell mask of each receptive field: cells whose label contains ``i``."""
    lab = grid.labels
    return {
        i: (lab >> np.uint64(i - 1)) & np.uint64(1) == 1
        for i in range(1, grid.n + 1)
    }


def atoms_from_fields(fields: Mapping[int, object], extents, n: int | None = None
                      ) -> GridRealization:
    """Inverse of :func:`fields_from_atoms`.

    ``fields`` maps neuron -> boolean array of shape ``extents``, or an
    iterable of cell indices (ints in 1D, tuples otherwise).
    """
    extents = tuple(int(e) for e in np.atleast_1d(extents))
    labels = np.zeros(extents, dtype=np.uint64)
    for i, cells in fields.items():
        if isinstance(cells, np.ndarray) and cells.dtype == bool:
            if cells.shape != extents:
                raise GridError(f"field {i} has shape {cells.shape}, expected {extents}")
            mask = cells
        else:
            mask = np.zeros(extents, dtype=bool)
            for c in cells:
                mask[c] = True
        labels[mask] |= np.uint64(1 << (i - 1))
    if n is None:
        n = max(fields, default=1)
    return GridRealization(labels, n)


def _neighbour_pairs(lab: np.ndarray):
    """Yield ``(axis, a, b)`` views of all face-adjacent cell pairs."""
    for axis in range(lab.ndim):
        lo = [slice(None)] * lab.ndim
        hi = [slice(None)] * lab.ndim
        lo[axis] = slice(None, -1)
        hi[axis] = slice(1, None)
        yield axis, lab[tuple(lo)], lab[tuple(hi)]


def check_admissible(grid: GridRealization, limit: int | None = None
                     ) -> list[AdjacencyViolation]:
    """All face-adjacent cell pairs with incomparable labels (empty list: admissible).

    The empty word is comparable with every label, so the implicit empty
    cells around the grid never cause a violation.
    """
    out: list[AdjacencyViolation] = []
    for axis, a, b in _neighbour_pairs(grid.labels):
        both = a & b
        bad = (both != a) & (both != b)
        for idx in zip(*np.nonzero(bad)):
            ca = tuple(int(x) for x in idx)
            cb = list(ca)
            cb[axis] += 1
            out.append(AdjacencyViolation(ca, tuple(cb), int(a[idx]), int(b[idx])))
            if limit is not None and len(out) >= limit:
                return out
    return out


def is_admissible(grid: GridRealization) -> bool:
    return not check_admissible(grid, limit=1)


def _component_labels(mask: np.ndarray, same: np.ndarray | None = None):
    """Connected components of ``mask`` cells under face adjacency.

    When ``same`` is given, neighbouring cells are joined only if their
    ``same`` values are equal. Returns ``(count, comp)`` where ``comp`` is
    -1 off the mask and components are numbered by first cell in C order.
    """
    flat_ids = np.full(mask.shape, -1, dtype=np.int64)
    cells = np.flatnonzero(mask)
    flat_ids.reshape(-1)[cells] = np.arange(len(cells))
    rows, cols = [], []
    for axis in range(mask.ndim):
        lo = [slice(None)] * mask.ndim
        hi = [slice(None)] * mask.ndim
        lo[axis] = slice(None, -1)
        hi[axis] = slice(1, None)
        lo, hi = tuple(lo), tuple(hi)
        join = mask[lo] & mask[hi]
        if same is not None:
            join &= same[lo] == same[hi]
        rows.append(flat_ids[lo][join])
        cols.append(flat_ids[hi][join])
    r = np.concatenate(rows) if rows else np.empty(0, np.int64)
    c = np.concatenate(cols) if cols else np.empty(0, np.int64)
    m = len(cells)
    comp = np.full(mask.shape, -1, dtype=np.int64)
    if m == 0:
        return 0, comp
    graph = coo_matrix((np.ones(len(r), dtype=np.int8), (r, c)), shape=(m, m))
    count, lab = connected_components(graph, directed=False)
    # renumber by first appearance so the result is independent of scipy internals
    _, first = np.unique(lab, return_index=True)
    order = np.argsort(first)
    remap = np.empty(count, dtype=np.int64)
    remap[order] = np.arange(count)
    comp.reshape(-1)[cells] = remap[lab]
    return count, comp


def field_connected(grid: GridRealization, i: int) -> bool:
    mask = fields_from_atoms(grid)[i] if 1 <= i <= grid.n else None
    if mask is None:
        raise ValueError(f"neuron {i} out of range 1..{grid.n}")
    if not mask.any():
        return True
    count, _ = _component_labels(mask)
    return count == 1


def all_fields_connected(grid: GridRealization) -> bool:
    return all(field_connected(grid, i) for i in range(1, grid.n + 1))


def realization_graph(grid: GridRealization) -> AdmissibleGraph:
    """Graph of the realization: one vertex per component of each non-empty atom.

    Components are labeled with their codeword; two components are joined
    when some pair of their cells is face-adjacent.
    """
    lab = grid.labels
    count, comp = _component_labels(lab != 0, same=lab)
    flat = comp.reshape(-1)
    idx = np.flatnonzero(flat >= 0)
    labels_arr = np.zeros(count, dtype=np.uint64)
    labels_arr[flat[idx]] = lab.reshape(-1)[idx]
    labels = [int(x) for x in labels_arr]
    edges = set()
    for _, a, b in _neighbour_pairs(comp):
        join = (a >= 0) & (b >= 0) & (a != b)
        if join.any():
            pa, pb = a[join], b[join]
            pairs = np.unique(np.stack([np.minimum(pa, pb), np.maximum(pa, pb)], axis=1), axis=0)
            edges.update((int(u), int(v)) for u, v in pairs)
    return AdmissibleGraph(tuple(labels), tuple(sorted(edges)))


@dataclass(frozen=True)
class GridReport:
    """Outcome of the full oracle suite against a target code."""

    code_matches: bool
    admissible: bool
    disconnected_fields: tuple[int, ...]
    extracted: Code

    @property
    def ok(self) -> bool:
        return self.code_matches and self.admissible and not self.disconnected_fields


def verify_grid(grid: GridRealization, code: Code) -> GridReport:
    extracted = extract_code(grid)
    return GridReport(
        code_matches=extracted.words == code.words,
        admissible=is_admissible(grid),
        disconnected_fields=tuple(
            i for i in range(1, grid.n + 1) if not field_connected(grid, i)
        ),
        extracted=extracted,
    )
