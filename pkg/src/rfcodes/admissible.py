"""Codeword-labeled graphs standing in for the graph of a realization.

An admissible graph has one vertex per atom component (so a codeword may
label several vertices), edges only between strictly nested labels, and
for each neuron a connected subgraph on the vertices whose label contains
it. :func:`search_planar_admissible` looks for a planar one.
"""

from __future__ import annotations

import itertools
import json
from dataclasses import dataclass, field
from typing import Iterator, Sequence

from .codes import (Code, automorphisms, fmt_set, neurons_of, permute_word,
                    require_connected, strictly_comparable, word)
from .planarity import Embedding, is_planar, minimal_nonplanar_subset, planar

Edge = tuple[int, int]


@dataclass(frozen=True)
class AdmissibleGraph:
    labels: tuple[int, ...]
    edges: tuple[Edge, ...] = ()

    def __post_init__(self):
        es = set()
        for u, v in self.edges:
            u, v = int(u), int(v)
            if u == v or not (0 <= u < len(self.labels) and 0 <= v < len(self.labels)):
                raise ValueError(f"bad edge ({u}, {v})")
            es.add((min(u, v), max(u, v)))
        object.__setattr__(self, "labels", tuple(int(x) for x in self.labels))
        object.__setattr__(self, "edges", tuple(sorted(es)))

    @property
    def n_vertices(self) -> int:
        return len(self.labels)

    def without_edge(self, e: Edge) -> "AdmissibleGraph":
        e = (min(e), max(e))
        return AdmissibleGraph(self.labels, tuple(x for x in self.edges if x != e))

    def to_dict(self) -> dict:
        return {
            "vertices": [list(neurons_of(w)) for w in self.labels],
            "edges": [list(e) for e in self.edges],
        }

    @classmethod
    def from_dict(cls, doc: dict) -> "AdmissibleGraph":
        return cls(tuple(word(*v) for v in doc["vertices"]),
                   tuple(tuple(e) for e in doc["edges"]))

    def dumps(self) -> str:
        return json.dumps(self.to_dict())


# -- violations -------------------------------------------------------------

@dataclass(frozen=True)
class MissingCodeword:
    word: int

    def __str__(self):
        return f"codeword {fmt_set(self.word)} labels no vertex"


@dataclass(frozen=True)
class ForeignLabel:
    vertex: int
    word: int

    def __str__(self):
        return f"vertex {self.vertex} has label {fmt_set(self.word)} outside the code"


@dataclass(frozen=True)
class IncomparableEdge:
    edge: Edge
    words: tuple[int, int]

    def __str__(self):
        a, b = self.words
        return f"edge {self.edge} joins {fmt_set(a)} and {fmt_set(b)}, not strictly nested"


@dataclass(frozen=True)
class NeuronDisconnected:
    neuron: int

    def __str__(self):
        return f"vertices containing neuron {self.neuron} are not connected"


def _connected(verts: Sequence[int], adj: dict[int, list[int]]) -> bool:
    if len(verts) <= 1:
        return True
    inside = set(verts)
    seen = {verts[0]}
    stack = [verts[0]]
    while stack:
        x = stack.pop()
        for y in adj.get(x, ()):
            if y in inside and y not in seen:
                seen.add(y)
                stack.append(y)
    return len(seen) == len(inside)


def validate(graph: AdmissibleGraph, code: Code) -> list:
    """Every way ``graph`` fails to be admissible for ``code`` (empty list: valid)."""
    out: list = []
    present = set(graph.labels)
    for w in code.nonempty:
        if w not in present:
            out.append(MissingCodeword(w))
    for v, w in enumerate(graph.labels):
        if w == 0 or w not in code.words:
            out.append(ForeignLabel(v, w))
    adj: dict[int, list[int]] = {}
    for u, v in graph.edges:
        a, b = graph.labels[u], graph.labels[v]
        if not strictly_comparable(a, b):
            out.append(IncomparableEdge((u, v), (a, b)))
        adj.setdefault(u, []).append(v)
        adj.setdefault(v, []).append(u)
    for i in range(1, code.n + 1):
        bit = 1 << (i - 1)
        verts = [v for v, w in enumerate(graph.labels) if w & bit]
        if not _connected(verts, adj):
            out.append(NeuronDisconnected(i))
    return out


def canonical_graph(code: Code) -> AdmissibleGraph:
    """One vertex per non-empty codeword, an edge for every strict containment."""
    require_connected(code)
    labels = code.nonempty
    edges = [
        (u, v) for u, v in itertools.combinations(range(len(labels)), 2)
        if strictly_comparable(labels[u], labels[v])
    ]
    return AdmissibleGraph(labels, tuple(edges))


# -- search -----------------------------------------------------------------

FOUND = "found"
EXHAUSTED = "exhausted"
BUDGET = "budget"


@dataclass(frozen=True)
class SearchOutcome:
    """Result of :func:`search_planar_admissible`.

    ``status`` is ``"found"`` (``graph`` and ``embedding`` set),
    ``"exhausted"`` (no planar admissible graph with at most ``dup_bound``
    copies of any codeword) or ``"budget"`` (node budget ran out first).
    """

    status: str
    dup_bound: int
    nodes: int
    vectors: int
    graph: AdmissibleGraph | None = None
    embedding: Embedding | None = None
    multiplicities: tuple[int, ...] | None = None

    @property
    def found(self) -> bool:
        return self.status == FOUND


class _BudgetExceeded(Exception):
    pass


def multiplicity_vectors(k: int, bound: int) -> Iterator[tuple[int, ...]]:
    """All vectors in ``{1..bound}^k`` ordered by total, then lexicographically."""
    def rec(pos: int, remaining: int):
        if pos == k:
            if remaining == 0:
                yield ()
            return
        slots = k - pos - 1
        for m in range(1, bound + 1):
            rest = remaining - m
            if slots <= rest <= slots * bound:
                for tail in rec(pos + 1, rest):
                    yield (m,) + tail

    for total in range(k, k * bound + 1):
        yield from rec(0, total)


class _VectorSearch:
    """Branch-and-bound over edge subsets for one multiplicity vector.

    Each node holds the current edge set and a set of edges known to be in
    every admissible subgraph below it. Non-planar nodes branch on the
    optional edges of a Kuratowski subgraph: branch ``j`` deletes the
    ``j``-th such edge and fixes the earlier ones, so branches are disjoint
    and together cover every planar subgraph.
    """

    def __init__(self, labels, n_neurons, counter):
        self.labels = labels
        self.nv = len(labels)
        self.counter = counter
        self.groups = []
        for i in range(n_neurons):
            verts = [v for v, w in enumerate(labels) if w >> i & 1]
            if len(verts) > 1:
                self.groups.append(verts)
        self.all_edges = [
            (u, v) for u, v in itertools.combinations(range(self.nv), 2)
            if strictly_comparable(labels[u], labels[v])
        ]

    def _adj(self, edges):
        adj: dict[int, list[int]] = {}
        for u, v in edges:
            adj.setdefault(u, []).append(v)
            adj.setdefault(v, []).append(u)
        return adj

    def _bridges(self, edges, group) -> set[Edge] | None:
        """Edges of the induced subgraph on ``group`` whose loss disconnects it.

        Returns ``None`` when the induced subgraph is already disconnected.
        """
        inside = set(group)
        sub = [e for e in edges if e[0] in inside and e[1] in inside]
        adj = self._adj(sub)
        if not _connected(group, adj):
            return None
        # Tarjan bridge finding, iterative
        disc, low, out = {}, {}, set()
        t = 0
        root = group[0]
        disc[root] = low[root] = t
        stack = [(root, -1, iter(adj.get(root, ())))]
        while stack:
            x, parent, it = stack[-1]
            advanced = False
            for y in it:
                if y == parent:
                    continue
                if y in disc:
                    low[x] = min(low[x], disc[y])
                else:
                    t += 1
                    disc[y] = low[y] = t
                    stack.append((y, x, iter(adj.get(y, ()))))
                    advanced = True
                    break
            if not advanced:
                stack.pop()
                if parent >= 0:
                    low[parent] = min(low[parent], low[x])
                    if low[x] > disc[parent]:
                        out.add((min(x, parent), max(x, parent)))
        return out

    def _propagate(self, edges, required):
        required = set(required)
        for g in self.groups:
            b = self._bridges(edges, g)
            if b is None:
                return None
            required |= b
        return required

    def minimize(self, edges, required):
        """Drop optional edges while every neuron stays connected."""
        edges = list(edges)
        for e in [x for x in edges if x not in required]:
            trial = [x for x in edges if x != e]
            adj = self._adj(trial)
            if all(_connected(g, adj) for g in self.groups):
                edges = trial
        return edges

    def run(self):
        return self._node(self.all_edges, frozenset())

    def _node(self, edges, required):
        self.counter.tick()
        req = self._propagate(edges, required)
        if req is None:
            return None
        if planar(self.nv, edges):
            return self.minimize(edges, req)
        fixed = sorted(req)
        if not planar(self.nv, fixed):
            return None
        optional = [e for e in edges if e not in req]
        branch = minimal_nonplanar_subset(self.nv, fixed, optional)
        for j, e in enumerate(branch):
            rest = [x for x in edges if x != e]
            found = self._node(rest, req | set(branch[:j]))
            if found is not None:
                return found
        return None


class _Counter:
    def __init__(self, budget):
        self.budget = budget
        self.nodes = 0

    def tick(self):
        self.nodes += 1
        if self.nodes > self.budget:
            raise _BudgetExceeded


def search_planar_admissible(code: Code, dup_bound: int = 2, budget: int = 10**6
                             ) -> SearchOutcome:
    """Search for a planar admissible graph with at most ``dup_bound`` copies per codeword.

    Multiplicity vectors are tried smallest total first (all-ones first),
    then lexicographically. A vector that a code automorphism maps onto an
    earlier vector is skipped, since the earlier one already failed. Every
    search node counts against ``budget``.
    """
    require_connected(code)
    if dup_bound < 1:
        raise ValueError("dup_bound must be at least 1")
    words = code.nonempty
    k = len(words)
    counter = _Counter(budget)
    index = {w: j for j, w in enumerate(words)}
    perms = [
        [index[permute_word(w, p)] for w in words]
        for p in automorphisms(code)[1:]
    ]
    vectors = 0
    try:
        for mult in multiplicity_vectors(k, dup_bound):
            if any(_image(mult, p) < mult for p in perms):
                continue
            counter.tick()
            vectors += 1
            labels = tuple(w for w, m in zip(words, mult) for _ in range(m))
            search = _VectorSearch(labels, code.n, counter)
            edges = search.run()
            if edges is not None:
                graph = AdmissibleGraph(labels, tuple(edges))
                emb = is_planar(graph.n_vertices, graph.edges)
                if not isinstance(emb, Embedding):  # pragma: no cover
                    raise RuntimeError("search returned a non-planar graph")
                return SearchOutcome(FOUND, dup_bound, counter.nodes, vectors,
                                     graph, emb, mult)
    except _BudgetExceeded:
        return SearchOutcome(BUDGET, dup_bound, counter.budget, vectors)
    return SearchOutcome(EXHAUSTED, dup_bound, counter.nodes, vectors)


def _image(mult, perm):
    out = [0] * len(mult)
    for j, m in enumerate(mult):
        out[perm[j]] = m
    return tuple(out)
