"""Run the pipeline on the three reference codes and print each certificate summary."""

from rfcodes.admissible import canonical_graph
from rfcodes.codes import is_connected_code, parse_code
from rfcodes.dimension import d_star
from rfcodes.grid import verify_grid
from rfcodes.planarity import Embedding, is_planar
from rfcodes.realize3d import build_3d

CODES = {
    "four neurons, nine codewords": "e,1,2,3,4,12,13,23,24,123",
    "three neurons, nested pair": "e,1,2,3,12,123",
    "five neurons, all pairs": "e,1,2,3,4,5,12,13,14,15,23,24,25,34,35,45",
}


def main():
    for name, text in CODES.items():
        code = parse_code(text)
        print(f"== {name}: {text}")
        print(f"connected: {bool(is_connected_code(code))}")
        g = canonical_graph(code)
        cert = is_planar(g.n_vertices, g.edges)
        kind = "planar" if isinstance(cert, Embedding) else f"contains a {cert.kind} subdivision"
        print(f"canonical graph: {g.n_vertices} vertices, {len(g.edges)} edges, {kind}")
        r3 = build_3d(code)
        print(f"3D grid {r3.grid.extents}, {len(r3.tubes)} tubes, "
              f"verified={verify_grid(r3.grid, code).ok}")
        for bound in (1, 2):
            v = d_star(code, dup_bound=bound)
            print(f"dup_bound={bound}: {v.describe()}, {v.grid.dim}D grid {v.grid.extents}, "
                  f"verified={verify_grid(v.grid, code).ok}")
        print()


if __name__ == "__main__":
    main()
