import random

import networkx as nx
import numpy as np
import pytest

from rfcodes.admissible import AdmissibleGraph, canonical_graph, search_planar_admissible, validate
from rfcodes.codes import parse_code, word
from rfcodes.grid import extract_code, realization_graph, verify_grid
from rfcodes.planarity import Embedding, is_planar
from rfcodes.realize2d import FattenError, fatten_embedding, visibility_representation


def fatten(code, graph):
    emb = is_planar(graph.n_vertices, graph.edges)
    assert isinstance(emb, Embedding)
    return fatten_embedding(code, graph, emb)


def test_nested(nested):
    grid = fatten(nested, canonical_graph(nested))
    assert grid.dim == 2
    rep = verify_grid(grid, nested)
    assert rep.ok and extract_code(grid) == nested
    assert validate(realization_graph(grid), nested) == []


def test_single_vertex():
    code = parse_code("e,1")
    grid = fatten(code, AdmissibleGraph((word(1),)))
    inner = grid.labels[1:-1, 1:-1]
    assert (inner == word(1)).all()
    assert grid.labels.sum() == inner.sum()


def test_path():
    code = parse_code("e,1,12,2")
    g = AdmissibleGraph((word(1), word(1, 2), word(2)), ((0, 1), (1, 2)))
    grid = fatten(code, g)
    assert verify_grid(grid, code).ok
    both = grid.labels == word(1, 2)
    assert both.sum() > 0


def test_rejects_invalid_graph():
    code = parse_code("e,1,12,2")
    g = AdmissibleGraph((word(1), word(1, 2)), ((0, 1),))
    with pytest.raises(FattenError):
        fatten_embedding(code, g, is_planar(2, g.edges))


def test_rejects_mismatched_embedding(nested):
    g = canonical_graph(nested)
    other = is_planar(5, g.edges[:-1])
    with pytest.raises(FattenError):
        fatten_embedding(nested, g, other)


def test_pairs5_with_two_copies(pairs5):
    out = search_planar_admissible(pairs5, dup_bound=2)
    grid = fatten_embedding(pairs5, out.graph, out.embedding)
    assert verify_grid(grid, pairs5).ok


def _check_visibility(n, edges):
    emb = is_planar(n, edges)
    vis = visibility_representation(emb)
    for v in range(n):
        assert vis.bars[v][0] <= vis.bars[v][1]
    for (u, w), x in vis.edge_columns.items():
        for end in (u, w):
            assert vis.bars[end][0] <= x <= vis.bars[end][1]
        lo, hi = sorted((vis.rows[u], vis.rows[w]))
        # no bar strictly between the two endpoints is pierced by the connector
        for v in range(n):
            if lo < vis.rows[v] < hi:
                assert not (vis.bars[v][0] <= x <= vis.bars[v][1])
    # bars on the same row do not overlap
    assert len(set(vis.rows)) == n
    assert len(vis.edge_columns) == len(emb.edges)


def test_visibility_random_planar():
    rng = random.Random(11)
    done = 0
    while done < 60:
        n = rng.randint(1, 25)
        g = nx.random_geometric_graph(n, 0.4, seed=rng.randint(0, 10**6))
        edges = list(g.edges)
        if not isinstance(is_planar(n, edges), Embedding):
            continue
        _check_visibility(n, edges)
        done += 1


def test_grid_size_polynomial(pairs5):
    out = search_planar_admissible(pairs5, dup_bound=2)
    grid = fatten_embedding(pairs5, out.graph, out.embedding)
    v = out.graph.n_vertices
    assert grid.labels.size <= (2 * v) ** 2 * 4
    assert np.count_nonzero(grid.labels) > 0
