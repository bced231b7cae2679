"""File formats: grids, words, graphs, scene documents and SVG."""

from __future__ import annotations

import colorsys
import json
from pathlib import Path
from xml.sax.saxutils import escape

import numpy as np

from .admissible import AdmissibleGraph
from .codes import Code, fmt_word, neurons_of, sort_key, word
from .grid import GridRealization


def grid_to_dict(grid: GridRealization) -> dict:
    return {
        "kind": "grid",
        "dim": grid.dim,
        "extents": list(grid.extents),
        "n": grid.n,
        "cells": [list(neurons_of(int(w))) for w in grid.labels.reshape(-1)],
    }


def grid_from_dict(doc: dict) -> GridRealization:
    extents = tuple(doc["extents"])
    if len(extents) != doc.get("dim", len(extents)):
        raise ValueError("grid 'dim' does not match 'extents'")
    cells = np.array([word(*c) for c in doc["cells"]], dtype=np.uint64)
    if cells.size != int(np.prod(extents)):
        raise ValueError(f"grid has {cells.size} cells, extents need {int(np.prod(extents))}")
    n = doc.get("n") or max(1, max((int(c).bit_length() for c in cells), default=1))
    return GridRealization(cells.reshape(extents), int(n))


def word_to_dict(code: Code, w) -> dict:
    return {"kind": "word", "n": code.n, "word": [list(neurons_of(x)) for x in w]}


def graph_to_dict(graph: AdmissibleGraph, embedding=None) -> dict:
    doc = {"kind": "graph", **graph.to_dict()}
    if embedding is not None:
        doc["rotation"] = [list(nb) for nb in embedding.rotation]
    return doc


def scene_document(grid: GridRealization) -> dict:
    """Unit cubes for every labeled cell of a 3D grid."""
    if grid.dim != 3:
        raise ValueError("scene documents need a 3D grid")
    cubes = [
        {"at": [int(x), int(y), int(z)], "label": list(neurons_of(int(grid.labels[x, y, z])))}
        for x, y, z in np.argwhere(grid.labels != 0)
    ]
    return {"kind": "scene", "unit": 1, "extents": list(grid.extents), "cubes": cubes}


def dump(doc: dict, path) -> Path:
    path = Path(path)
    path.parent.mkdir(parents=True, exist_ok=True)
    path.write_text(json.dumps(doc, separators=(",", ":")) + "\n")
    return path


def load(path) -> dict:
    return json.loads(Path(path).read_text())


def _colour(mask: int) -> str:
    h = ((mask * 2654435761) & 0xFFFFFFFF) / 2**32
    r, g, b = colorsys.hls_to_rgb(h, 0.6, 0.65)
    return "#%02x%02x%02x" % (int(r * 255), int(g * 255), int(b * 255))


def grid_svg(grid: GridRealization, cell: int = 12) -> str:
    """SVG for a 1D or 2D grid: one rectangle per labeled cell plus a legend."""
    lab = grid.labels
    if lab.ndim == 1:
        lab = lab[None, :]
    if lab.ndim != 2:
        raise ValueError("SVG export needs a 1D or 2D grid")
    rows, cols = lab.shape
    words = sorted({int(w) for w in np.unique(lab) if w}, key=sort_key)
    legend_h = 18 * len(words) + 10
    width = max(cols * cell, 160)
    height = rows * cell + legend_h
    out = [
        f'<svg xmlns="http://www.w3.org/2000/svg" width="{width}" height="{height}" '
        f'viewBox="0 0 {width} {height}">',
        f'<rect x="0" y="0" width="{cols * cell}" height="{rows * cell}" fill="#ffffff" '
        f'stroke="#999999"/>',
    ]
    for r, c in np.argwhere(lab != 0):
        w = int(lab[r, c])
        out.append(f'<rect x="{c * cell}" y="{r * cell}" width="{cell}" height="{cell}" '
                   f'fill="{_colour(w)}"><title>{escape(fmt_word(w))}</title></rect>')
    y0 = rows * cell + 10
    for k, w in enumerate(words):
        y = y0 + 18 * k
        out.append(f'<rect x="4" y="{y}" width="12" height="12" fill="{_colour(w)}"/>')
        out.append(f'<text x="22" y="{y + 11}" font-family="monospace" font-size="12">'
                   f'{escape(fmt_word(w))}</text>')
    out.append("</svg>")
    return "\n".join(out) + "\n"
