"""Planarity with certificates: rotation-system embeddings or Kuratowski subgraphs.

The yes/no decision is delegated to networkx's left-right planarity test.
Both certificates are checked here without trusting that decision: an
embedding must satisfy Euler's formula under face tracing, and a witness
must reduce to K5 or K3,3 once degree-2 vertices are suppressed.
"""

from __future__ import annotations

import itertools
from collections import Counter
from dataclasses import dataclass
from typing import Iterable, Sequence

import networkx as nx
from networkx.algorithms.planar_drawing import combinatorial_embedding_to_pos

Edge = tuple[int, int]


class EmbeddingError(ValueError):
    pass


def _norm_edges(edges: Iterable[Sequence[int]]) -> list[Edge]:
    out = set()
    for u, v in edges:
        u, v = int(u), int(v)
        if u == v:
            raise ValueError(f"self-loop at vertex {u}")
        out.add((u, v) if u < v else (v, u))
    return sorted(out)


def _nx_graph(n: int, edges: Iterable[Edge]) -> nx.Graph:
    g = nx.Graph()
    g.add_nodes_from(range(n))
    g.add_edges_from(edges)
    return g


def planar(n: int, edges: Sequence[Edge]) -> bool:
    """Plain planarity decision (no certificate)."""
    touched = {x for e in edges for x in e}
    v = len(touched)
    if v >= 3 and len(edges) > 3 * v - 6:
        return False
    if len(edges) <= 8:
        return True
    return nx.check_planarity(_nx_graph(n, edges))[0]


def minimal_nonplanar_subset(n: int, fixed: Sequence[Edge], candidates: Sequence[Edge]
                             ) -> list[Edge]:
    """Inclusion-minimal ``S`` of ``candidates`` with ``fixed + S`` non-planar.

    ``fixed + candidates`` must be non-planar. Works by deleting chunks of
    halving size; since planarity is closed under edge deletion, a single
    pass at chunk size one leaves every kept edge essential.
    """
    fixed = list(fixed)
    keep = list(candidates)
    chunk = max(1, len(keep) // 2)
    while True:
        i = 0
        while i < len(keep):
            trial = keep[:i] + keep[i + chunk:]
            if not planar(n, fixed + trial):
                keep = trial
            else:
                i += chunk
        if chunk == 1:
            return keep
        chunk = max(1, chunk // 2)


# -- certificates -----------------------------------------------------------

@dataclass(frozen=True)
class Embedding:
    """Rotation system: ``rotation[v]`` lists v's neighbours in clockwise order."""

    rotation: tuple[tuple[int, ...], ...]

    @property
    def n(self) -> int:
        return len(self.rotation)

    @property
    def edges(self) -> list[Edge]:
        return sorted({(min(v, w), max(v, w)) for v, nb in enumerate(self.rotation) for w in nb})

    def check_structure(self) -> None:
        for v, nb in enumerate(self.rotation):
            if len(set(nb)) != len(nb):
                raise EmbeddingError(f"vertex {v} lists a neighbour twice")
            for w in nb:
                if not 0 <= w < self.n or w == v:
                    raise EmbeddingError(f"vertex {v} has bad neighbour {w}")
                if v not in self.rotation[w]:
                    raise EmbeddingError(f"half-edge {v}->{w} has no twin")

    def faces(self) -> list[list[Edge]]:
        """Trace faces as cycles of half-edges.

        From half-edge ``(v, w)`` the walk continues with ``(w, x)`` where
        ``x`` precedes ``v`` in w's clockwise rotation, so each face lies to
        the right of its half-edges.
        """
        self.check_structure()
        pos = [{w: k for k, w in enumerate(nb)} for nb in self.rotation]
        seen: set[Edge] = set()
        faces = []
        for v, nb in enumerate(self.rotation):
            for w in nb:
                if (v, w) in seen:
                    continue
                face = []
                a, b = v, w
                while (a, b) not in seen:
                    seen.add((a, b))
                    face.append((a, b))
                    rot = self.rotation[b]
                    a, b = b, rot[(pos[b][a] - 1) % len(rot)]
                if (a, b) != (v, w):
                    raise EmbeddingError("face walk did not close")
                faces.append(face)
        return faces

    def components(self) -> int:
        g = _nx_graph(self.n, self.edges)
        return nx.number_connected_components(g)

    def face_count(self) -> int:
        """Faces of the plane drawing (the outer face counted once)."""
        traced = len(self.faces())
        isolated = sum(1 for nb in self.rotation if not nb)
        c = self.components()
        return traced + isolated - (c - 1)

    def satisfies_euler(self) -> bool:
        """V - E + F = 1 + C, with faces from tracing this rotation system."""
        try:
            f = self.face_count()
        except EmbeddingError:
            return False
        return self.n - len(self.edges) + f == 1 + self.components()

    def to_networkx(self) -> nx.PlanarEmbedding:
        emb = nx.PlanarEmbedding()
        emb.add_nodes_from(range(self.n))
        emb.set_data({v: list(nb) for v, nb in enumerate(self.rotation)})
        return emb

    def to_dict(self) -> dict:
        return {"rotation": [list(nb) for nb in self.rotation]}


@dataclass(frozen=True)
class KuratowskiWitness:
    edges: tuple[Edge, ...]
    kind: str  # "K5" or "K3,3"

    def to_dict(self) -> dict:
        return {"kuratowski": self.kind, "edges": [list(e) for e in self.edges]}


def suppress_degree_two(edges: Iterable[Edge]) -> list[Edge] | None:
    """Contract every degree-2 vertex into a single edge.

    Returns the reduced edge list, or ``None`` if suppression creates a loop
    or a parallel edge (so the input is not a subdivision of a simple graph).
    """
    adj: dict[int, list[int]] = {}
    multi = Counter()
    for u, v in edges:
        adj.setdefault(u, []).append(v)
        adj.setdefault(v, []).append(u)
        multi[(min(u, v), max(u, v))] += 1
    if any(c > 1 for c in multi.values()):
        return None
    for x in sorted(adj):
        nb = adj[x]
        if len(nb) != 2:
            continue
        a, b = nb
        if a == b or a == x or b == x:
            return None
        adj[a][adj[a].index(x)] = b
        adj[b][adj[b].index(x)] = a
        del adj[x]
    out = []
    for u, nb in adj.items():
        if u in nb:
            return None
        for v in nb:
            if u < v:
                out.append((u, v))
    if len(out) != len(set(out)):
        return None
    return sorted(out)


def witness_kind(edges: Iterable[Edge]) -> str | None:
    """``"K5"`` or ``"K3,3"`` if ``edges`` is a subdivision of one, else ``None``."""
    core = suppress_degree_two(list(edges))
    if core is None:
        return None
    verts = sorted({x for e in core for x in e})
    es = set(core)
    if len(verts) == 5 and len(es) == 10:
        return "K5"
    if len(verts) == 6 and len(es) == 9:
        for side in itertools.combinations(verts[1:], 2):
            a = {verts[0], *side}
            b = set(verts) - a
            if all((min(x, y), max(x, y)) in es for x in a for y in b):
                return "K3,3"
    return None


def is_planar(n: int, edges: Iterable[Sequence[int]]) -> Embedding | KuratowskiWitness:
    """Planarity of the simple graph on vertices ``0..n-1`` with a certificate."""
    es = _norm_edges(edges)
    g = _nx_graph(n, es)
    ok, emb = nx.check_planarity(g)
    if ok:
        data = emb.get_data()
        return Embedding(tuple(tuple(data.get(v, ())) for v in range(n)))
    w = minimal_nonplanar_subset(n, [], es)
    kind = witness_kind(w)
    if kind is None:  # pragma: no cover - would contradict Kuratowski's theorem
        raise RuntimeError("minimal non-planar subgraph is not a Kuratowski subdivision")
    return KuratowskiWitness(tuple(w), kind)


# -- drawing ----------------------------------------------------------------

def planar_coordinates(embedding: Embedding) -> list[tuple[int, int]]:
    """Integer straight-line drawing, components placed side by side."""
    embedding.check_structure()
    g = _nx_graph(embedding.n, embedding.edges)
    full = embedding.to_networkx()
    coords: list[tuple[int, int]] = [(0, 0)] * embedding.n
    x_off = 0
    for comp in sorted(nx.connected_components(g), key=min):
        nodes = sorted(comp)
        sub = nx.PlanarEmbedding()
        sub.add_nodes_from(nodes)
        sub.set_data({v: list(full.neighbors_cw_order(v)) for v in nodes})
        try:
            sub.check_structure()
        except nx.NetworkXException as exc:
            raise EmbeddingError(str(exc)) from None
        pos = combinatorial_embedding_to_pos(sub)
        min_x = min(p[0] for p in pos.values())
        min_y = min(p[1] for p in pos.values())
        for v, (x, y) in pos.items():
            coords[v] = (int(x) - min_x + x_off, int(y) - min_y)
        x_off += max(int(p[0]) for p in pos.values()) - min_x + 2
    return coords


def _orient(a, b, c) -> int:
    d = (b[0] - a[0]) * (c[1] - a[1]) - (b[1] - a[1]) * (c[0] - a[0])
    return (d > 0) - (d < 0)


def _on_segment(a, b, p) -> bool:
    return (min(a[0], b[0]) <= p[0] <= max(a[0], b[0])
            and min(a[1], b[1]) <= p[1] <= max(a[1], b[1]))


def segments_touch(a, b, c, d) -> bool:
    """Closed segments ab and cd share at least one point."""
    o1, o2, o3, o4 = _orient(a, b, c), _orient(a, b, d), _orient(c, d, a), _orient(c, d, b)
    if o1 != o2 and o3 != o4:
        return True
    return ((o1 == 0 and _on_segment(a, b, c)) or (o2 == 0 and _on_segment(a, b, d))
            or (o3 == 0 and _on_segment(c, d, a)) or (o4 == 0 and _on_segment(c, d, b)))


def find_crossings(coords: Sequence[tuple[int, int]], edges: Iterable[Edge]) -> list:
    """Defects of a straight-line drawing.

    Reports coincident vertices, edges passing through a non-incident
    vertex, and edge pairs that meet anywhere other than a shared endpoint.
    """
    es = list(edges)
    bad = []
    seen = {}
    for v, p in enumerate(coords):
        if tuple(p) in seen:
            bad.append(("vertices", seen[tuple(p)], v))
        seen[tuple(p)] = v
    for (u, v) in es:
        for w, p in enumerate(coords):
            if w not in (u, v) and _orient(coords[u], coords[v], p) == 0 \
                    and _on_segment(coords[u], coords[v], p):
                bad.append(("vertex-on-edge", (u, v), w))
    for e, f in itertools.combinations(es, 2):
        shared = set(e) & set(f)
        a, b = coords[e[0]], coords[e[1]]
        c, d = coords[f[0]], coords[f[1]]
        if not shared:
            if segments_touch(a, b, c, d):
                bad.append(("cross", e, f))
        elif len(shared) == 1:
            s = shared.pop()
            x = e[0] if e[1] == s else e[1]
            y = f[0] if f[1] == s else f[1]
            p = coords[s]
            # overlap along a common ray from the shared endpoint
            if _orient(p, coords[x], coords[y]) == 0 and (
                    (coords[x][0] - p[0]) * (coords[y][0] - p[0])
                    + (coords[x][1] - p[1]) * (coords[y][1] - p[1])) > 0:
                bad.append(("overlap", e, f))
    return bad
