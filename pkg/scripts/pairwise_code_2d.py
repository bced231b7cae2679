"""Planar realization of the five-neuron code made of all singletons and pairs.

With a single copy of each codeword every admissible graph contains a
subdivision of K5. Allowing two copies of two singletons removes the
obstruction. This script finds that graph, rasterizes it, and re-checks the
grid with a plain scipy.ndimage pass that shares nothing with the package.

    python3 scripts/pairwise_code_2d.py [-o OUTDIR]
"""

import argparse
from pathlib import Path

import numpy as np
from scipy import ndimage

from rfcodes import gridio
from rfcodes.admissible import search_planar_admissible
from rfcodes.codes import fmt_set, parse_code
from rfcodes.realize2d import fatten_embedding

CODE = "e,1,2,3,4,5,12,13,14,15,23,24,25,34,35,45"


def independent_check(labels: np.ndarray, words: set[int], n: int) -> list[str]:
    problems = []
    found = {int(x) for x in np.unique(labels)}
    if found != words:
        problems.append(f"codewords differ: {sorted(found ^ words)}")
    for axis in range(labels.ndim):
        a = np.moveaxis(labels, axis, 0)
        x, y = a[:-1], a[1:]
        meet = x & y
        if not ((meet == x) | (meet == y)).all():
            problems.append(f"incomparable neighbours along axis {axis}")
    for i in range(n):
        _, k = ndimage.label((labels >> np.uint64(i)) & np.uint64(1))
        if k != 1:
            problems.append(f"neuron {i + 1} has {k} components")
    return problems


def main():
    ap = argparse.ArgumentParser()
    ap.add_argument("-o", "--output", default="out/pairwise")
    args = ap.parse_args()
    code = parse_code(CODE)

    single = search_planar_admissible(code, dup_bound=1)
    print(f"dup_bound=1: {single.status} after {single.nodes} nodes")

    out = search_planar_admissible(code, dup_bound=2)
    print(f"dup_bound=2: {out.status} after {out.nodes} nodes, {out.vectors} vectors")
    doubled = [fmt_set(w) for w, m in zip(code.nonempty, out.multiplicities) if m > 1]
    print(f"codewords used twice: {', '.join(doubled)}")
    g = out.graph
    print(f"graph: {g.n_vertices} vertices, {len(g.edges)} edges, "
          f"{out.embedding.face_count()} faces")
    for u, v in g.edges:
        print(f"  {u:2d} {fmt_set(g.labels[u]):>6} -- {v:2d} {fmt_set(g.labels[v])}")

    grid = fatten_embedding(code, g, out.embedding)
    problems = independent_check(grid.labels, set(code.words), code.n)
    print(f"grid {grid.extents}: {'independent check passed' if not problems else problems}")

    dest = Path(args.output)
    gridio.dump(gridio.grid_to_dict(grid), dest / "grid.json")
    gridio.dump(gridio.graph_to_dict(g, out.embedding), dest / "graph.json")
    (dest / "grid.svg").write_text(gridio.grid_svg(grid))
    print(f"wrote {dest}/grid.json, graph.json, grid.svg")


if __name__ == "__main__":
    main()
