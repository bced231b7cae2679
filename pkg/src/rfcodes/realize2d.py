"""Planar admissible graph -> verified 2D grid realization.

Vertices become horizontal bars and edges vertical connectors of a
visibility representation of the planar embedding: triangulate, number the
vertices by a canonical ordering (an st-ordering), and place each edge at
the longest-path position of its left face in the dual. On the grid every
coordinate is doubled so that distinct bars and connectors are separated
by empty cells. A connector carries the label of the smaller endpoint, so
the only contacts are bar/connector pairs whose labels are nested.
"""

from __future__ import annotations

from dataclasses import dataclass

import networkx as nx
import numpy as np
from networkx.algorithms.planar_drawing import get_canonical_ordering, triangulate_embedding

from .admissible import AdmissibleGraph, validate
from .codes import Code
from .grid import GridRealization, verify_grid
from .planarity import Embedding, EmbeddingError


class FattenError(ValueError):
    pass


@dataclass(frozen=True)
class Visibility:
    """Bars ``(row, x_min, x_max)`` per vertex and a column per edge."""

    rows: tuple[int, ...]
    bars: tuple[tuple[int, int], ...]
    edge_columns: dict
    width: int
    height: int


def visibility_representation(embedding: Embedding) -> Visibility:
    embedding.check_structure()
    if not embedding.satisfies_euler():
        raise EmbeddingError("rotation system is not a planar embedding")
    n = embedding.n
    pad = max(0, 3 - n)
    emb = nx.PlanarEmbedding()
    emb.add_nodes_from(range(n + pad))
    emb.set_data({v: list(nb) for v, nb in enumerate(embedding.rotation)}
                 | {n + k: [] for k in range(pad)})
    tri, outer = triangulate_embedding(emb, fully_triangulate=True)
    order = [v for v, _ in get_canonical_ordering(tri, outer)]
    y = {v: k for k, v in enumerate(order)}

    data = tri.get_data()
    total = n + pad
    rot = Embedding(tuple(tuple(data[v]) for v in range(total)))
    face_of = {}
    outer_ids = []
    for fid, face in enumerate(rot.faces()):
        for he in face:
            face_of[he] = fid
        if {a for a, _ in face} == set(outer):
            outer_ids.append(fid)
    outer_id = outer_ids[0]

    src, snk = "s", "t"
    dual = nx.DiGraph()
    dual.add_nodes_from([src, snk])
    left_face = {}
    for u, w in rot.edges:
        lo, hi = (u, w) if y[u] < y[w] else (w, u)
        right = face_of[(lo, hi)]
        left = face_of[(hi, lo)]
        right = snk if right == outer_id else right
        left = src if left == outer_id else left
        dual.add_edge(left, right)
        left_face[(u, w)] = left
    xpos = {}
    for f in nx.topological_sort(dual):
        preds = list(dual.predecessors(f))
        xpos[f] = max((xpos[p] + 1 for p in preds), default=0)

    edge_x = {e: xpos[f] for e, f in left_face.items()}
    spans = {v: [] for v in range(total)}
    for (u, w), x in edge_x.items():
        spans[u].append(x)
        spans[w].append(x)
    bars = tuple((min(spans[v]), max(spans[v])) if spans[v] else (0, 0) for v in range(n))
    real = {e: x for e, x in edge_x.items() if e[0] < n and e[1] < n
            and e[1] in embedding.rotation[e[0]]}
    width = max(xpos.values()) + 1
    return Visibility(tuple(y[v] for v in range(n)), bars, real, width, total)


def fatten_embedding(code: Code, graph: AdmissibleGraph, embedding: Embedding
                     ) -> GridRealization:
    """Rasterize a planar admissible graph into a 2D grid realizing ``code``."""
    problems = validate(graph, code)
    if problems:
        raise FattenError(f"graph is not admissible: {problems[0]}")
    if embedding.n != graph.n_vertices or embedding.edges != list(graph.edges):
        raise FattenError("embedding does not match the graph")
    vis = visibility_representation(embedding)
    labels = np.zeros((2 * vis.height - 1, 2 * vis.width - 1), dtype=np.uint64)
    for v, (row, (x0, x1)) in enumerate(zip(vis.rows, vis.bars)):
        labels[2 * row, 2 * x0:2 * x1 + 1] = graph.labels[v]
    for (u, w), x in vis.edge_columns.items():
        r0, r1 = sorted((vis.rows[u], vis.rows[w]))
        labels[2 * r0 + 1:2 * r1, 2 * x] = graph.labels[u] & graph.labels[w]
    grid = GridRealization(_trim(labels), code.n)
    report = verify_grid(grid, code)
    if not report.ok:  # pragma: no cover - guarded by construction
        raise FattenError(f"rasterized grid failed verification: {report}")
    return grid


def _trim(labels: np.ndarray) -> np.ndarray:
    """Crop to the labeled cells plus a one-cell empty margin."""
    nz = np.argwhere(labels != 0)
    if len(nz) == 0:
        return labels[:1, :1]
    lo, hi = nz.min(axis=0), nz.max(axis=0) + 1
    return np.pad(labels[lo[0]:hi[0], lo[1]:hi[1]], 1)
