"""Command-line entry point: ``rfcodes <subcommand> ...``."""

from __future__ import annotations

import argparse
import json
import sys
import warnings
from pathlib import Path

from . import gridio
from .admissible import AdmissibleGraph, canonical_graph, search_planar_admissible, validate
from .census import classify_all
from .codes import (Code, CodeParseError, NotConnectedError, fmt_set, fmt_word,
                    is_connected_code, neurons_of, parse_code, word)
from .dimension import (DEFAULT_BUDGET, DEFAULT_DUP_BOUND, SearchBudgetExceeded, d_star)
from .grid import verify_grid
from .planarity import Embedding, is_planar
from .realize1d import search_word, verify_word, word_to_grid
from .realize2d import fatten_embedding
from .realize3d import build_3d

EXIT_OK, EXIT_NO, EXIT_UNREALIZABLE = 0, 1, 2
EXIT_USAGE, EXIT_INTERNAL = 64, 70


class UsageError(Exception):
    pass


def _code(text: str, n=None) -> Code:
    path = Path(text)
    if text.endswith(".json") and path.exists():
        text = path.read_text()
    with warnings.catch_warnings(record=True) as caught:
        warnings.simplefilter("always")
        code = parse_code(text, n)
    for w in caught:
        print(f"warning: {w.message}", file=sys.stderr)
    return code


def _emit(args, text: str, doc: dict) -> None:
    print(json.dumps(doc, sort_keys=True) if args.json else text)


def _fmt_word(w) -> str:
    return "(" + ", ".join(fmt_word(x) if x else "∅" for x in w) + ")"


def cmd_check(args) -> int:
    code = _code(args.code, args.n)
    v = is_connected_code(code)
    if v:
        _emit(args, "CONNECTED", {"connected": True})
        return EXIT_OK
    i, a, b = v.witness
    _emit(args, f"NOT CONNECTED: neuron {i}, codewords {fmt_set(a)} and {fmt_set(b)}",
          {"connected": False, "witness": {"neuron": i, "sigma": list(_ns(a)),
                                           "tau": list(_ns(b))}})
    return EXIT_NO


def _ns(mask):
    return neurons_of(mask)


def cmd_dim(args) -> int:
    code = _code(args.code, args.n)
    try:
        v = d_star(code, args.dup_bound, args.budget)
    except SearchBudgetExceeded:
        _emit(args, f"d* in {{2, 3}} (search budget {args.budget} exhausted)",
              {"value": None, "partial": [2, 3], "budget": args.budget})
        return EXIT_OK
    doc = {"kind": "verdict", "code": code.to_dict(), "value": v.value,
           "exactness": v.exactness, "dup_bound": v.dup_bound,
           "empty_neurons": list(v.empty_neurons)}
    lines = [v.describe()]
    if v.word is not None:
        lines.append(f"word: {_fmt_word(v.word)}")
    if v.empty_neurons:
        lines.append(f"note: neurons with empty fields: {list(v.empty_neurons)}")
    if args.output:
        out = Path(args.output)
        certs = {"grid": "grid.json"}
        gridio.dump(gridio.grid_to_dict(v.grid), out / "grid.json")
        if v.word is not None:
            gridio.dump(gridio.word_to_dict(code, v.word), out / "word.json")
            certs["word"] = "word.json"
        if v.graph is not None:
            gridio.dump(gridio.graph_to_dict(v.graph, v.embedding), out / "graph.json")
            certs["graph"] = "graph.json"
        doc["certificates"] = certs
        gridio.dump(doc, out / "verdict.json")
        lines.append(f"certificates: {out / 'verdict.json'}")
    _emit(args, "\n".join(lines), doc)
    return EXIT_OK


def cmd_realize(args) -> int:
    code = _code(args.code, args.n)
    out = Path(args.output)
    if args.dim == 1:
        w = search_word(code)
        if w is None:
            _emit(args, "not realizable in dimension 1", {"realizable": False, "dim": 1})
            return EXIT_UNREALIZABLE
        grid = word_to_grid(code, w)
        gridio.dump(gridio.grid_to_dict(grid), out / "grid.json")
        gridio.dump(gridio.word_to_dict(code, w), out / "word.json")
        _emit(args, f"word: {_fmt_word(w)}\ngrid: {out / 'grid.json'}",
              {"realizable": True, "dim": 1, "word": [list(_ns(x)) for x in w],
               "grid": str(out / "grid.json")})
        return EXIT_OK
    if args.dim == 2:
        res = search_planar_admissible(code, args.dup_bound, args.budget)
        if not res.found:
            _emit(args, f"no planar certificate found ({res.status}, dup_bound={args.dup_bound})",
                  {"realizable": None, "dim": 2, "status": res.status})
            return EXIT_UNREALIZABLE
        grid = fatten_embedding(code, res.graph, res.embedding)
        gridio.dump(gridio.grid_to_dict(grid), out / "grid.json")
        gridio.dump(gridio.graph_to_dict(res.graph, res.embedding), out / "graph.json")
        (out / "grid.svg").write_text(gridio.grid_svg(grid))
        _emit(args, f"grid: {out / 'grid.json'} {grid.extents}\nsvg: {out / 'grid.svg'}",
              {"realizable": True, "dim": 2, "grid": str(out / "grid.json"),
               "svg": str(out / "grid.svg"), "extents": list(grid.extents)})
        return EXIT_OK
    real = build_3d(code)
    gridio.dump(gridio.grid_to_dict(real.grid), out / "grid.json")
    gridio.dump(gridio.scene_document(real.grid), out / "scene.json")
    _emit(args, f"grid: {out / 'grid.json'} {real.grid.extents}\nscene: {out / 'scene.json'}",
          {"realizable": True, "dim": 3, "grid": str(out / "grid.json"),
           "scene": str(out / "scene.json"), "tubes": len(real.tubes)})
    return EXIT_OK


def cmd_graph(args) -> int:
    code = _code(args.code, args.n)
    g = canonical_graph(code)
    doc = gridio.graph_to_dict(g)
    if args.output:
        gridio.dump(doc, args.output)
    print(json.dumps(doc))
    return EXIT_OK


def _load_json(path) -> dict:
    try:
        return gridio.load(path)
    except (OSError, json.JSONDecodeError) as exc:
        raise UsageError(f"cannot read {path}: {exc}") from None


def cmd_planar(args) -> int:
    doc = _load_json(args.graphfile)
    try:
        nv = len(doc["vertices"]) if "vertices" in doc else int(doc["n"])
        edges = [tuple(e) for e in doc["edges"]]
    except (KeyError, TypeError, ValueError) as exc:
        raise UsageError(f"malformed graph file: {exc}") from None
    cert = is_planar(nv, edges)
    if isinstance(cert, Embedding):
        faces = cert.face_count()
        _emit(args, f"planar: {nv} vertices, {len(cert.edges)} edges, {faces} faces",
              {"planar": True, "faces": faces, **cert.to_dict()})
        return EXIT_OK
    _emit(args, f"not planar: subdivision of {cert.kind} on {len(cert.edges)} edges "
                f"{[list(e) for e in cert.edges]}",
          {"planar": False, **cert.to_dict()})
    return EXIT_NO


def cmd_enumerate(args) -> int:
    census = classify_all(args.n_neurons, args.dup_bound, args.budget, args.jobs, args.cert_dir)
    if args.json:
        text = json.dumps({
            "n": census.n,
            "rows": [{"code": r.code.shorthand(), "connected": r.connected,
                      "d_star": r.value, "exactness": r.exactness} for r in census.rows],
        }, sort_keys=True) + "\n"
    else:
        text = census.table()
    if args.output:
        Path(args.output).write_text(text)
    else:
        sys.stdout.write(text)
    return EXIT_OK


def cmd_render(args) -> int:
    try:
        grid = gridio.grid_from_dict(_load_json(args.gridfile))
    except (KeyError, ValueError) as exc:
        raise UsageError(f"malformed grid file: {exc}") from None
    if grid.dim == 3:
        gridio.dump(gridio.scene_document(grid), args.output)
    else:
        Path(args.output).parent.mkdir(parents=True, exist_ok=True)
        Path(args.output).write_text(gridio.grid_svg(grid))
    _emit(args, f"wrote {args.output}", {"output": str(args.output)})
    return EXIT_OK


def verify_certificate(code: Code, doc: dict, base: Path = Path(".")) -> tuple[bool, str]:
    kind = doc.get("kind") or ("grid" if "cells" in doc else "graph" if "vertices" in doc
                               else "word" if "word" in doc else None)
    if kind == "grid":
        r = verify_grid(gridio.grid_from_dict(doc), code)
        msg = (f"grid dim={len(doc['extents'])}: code {'matches' if r.code_matches else 'differs'}, "
               f"{'admissible' if r.admissible else 'NOT admissible'}, "
               f"disconnected fields {list(r.disconnected_fields)}")
        return r.ok, msg
    if kind == "word":
        w = [word(*x) for x in doc["word"]]
        ok = verify_word(code, w)
        return ok, f"word {_fmt_word(w)}: {'valid' if ok else 'INVALID'}"
    if kind == "graph":
        g = AdmissibleGraph.from_dict(doc)
        problems = validate(g, code)
        if problems:
            return False, f"graph: {problems[0]}"
        if "rotation" in doc:
            emb = Embedding(tuple(tuple(nb) for nb in doc["rotation"]))
            if emb.edges != list(g.edges) or not emb.satisfies_euler():
                return False, "graph: rotation system is not a planar embedding of the graph"
            return True, "graph: admissible, planar embedding verified"
        planar = isinstance(is_planar(g.n_vertices, g.edges), Embedding)
        return True, f"graph: admissible, {'planar' if planar else 'not planar'}"
    if kind == "verdict":
        if Code.from_sets(doc["code"]["codewords"], doc["code"]["n"]) != code:
            return False, "verdict is for a different code"
        msgs = []
        ok = True
        for name in doc.get("certificates", {}).values():
            sub = _load_json(base / name)
            good, m = verify_certificate(code, sub, base)
            if sub.get("kind") == "grid" and len(sub["extents"]) != doc["value"]:
                good, m = False, m + f" (expected dimension {doc['value']})"
            ok &= good
            msgs.append(m)
        if not msgs:
            return False, "verdict lists no certificates"
        return ok, "; ".join(msgs)
    raise UsageError("unrecognized certificate file")


def cmd_verify(args) -> int:
    code = _code(args.code, args.n)
    path = Path(args.certfile)
    try:
        ok, msg = verify_certificate(code, _load_json(path), path.parent)
    except (KeyError, TypeError, ValueError) as exc:
        raise UsageError(f"malformed certificate: {exc}") from None
    _emit(args, ("OK: " if ok else "FAILED: ") + msg, {"ok": ok, "detail": msg})
    return EXIT_OK if ok else EXIT_NO


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="rfcodes", description=__doc__)
    p.add_argument("--json", action="store_true", help="structured JSON output")
    sub = p.add_subparsers(dest="command", required=True)

    def with_code(sp):
        sp.add_argument("code", help='code text, e.g. "e,1,12,2", or a .json code file')
        sp.add_argument("-n", type=int, default=None, help="neuron count")

    def with_search(sp):
        sp.add_argument("--dup-bound", type=int, default=DEFAULT_DUP_BOUND)
        sp.add_argument("--budget", type=int, default=DEFAULT_BUDGET)

    sp = sub.add_parser("check", help="connectivity verdict")
    with_code(sp)
    sp.set_defaults(func=cmd_check)

    sp = sub.add_parser("dim", help="minimal embedding dimension")
    with_code(sp)
    with_search(sp)
    sp.add_argument("-o", "--output", help="directory for certificate files")
    sp.set_defaults(func=cmd_dim)

    sp = sub.add_parser("realize", help="grid realization in a given dimension")
    with_code(sp)
    with_search(sp)
    sp.add_argument("--dim", type=int, choices=(1, 2, 3), required=True)
    sp.add_argument("-o", "--output", required=True)
    sp.set_defaults(func=cmd_realize)

    sp = sub.add_parser("graph", help="canonical admissible graph")
    with_code(sp)
    sp.add_argument("-o", "--output")
    sp.set_defaults(func=cmd_graph)

    sp = sub.add_parser("planar", help="planarity certificate for a graph file")
    sp.add_argument("graphfile")
    sp.set_defaults(func=cmd_planar)

    sp = sub.add_parser("enumerate", help="census of all codes on n neurons")
    sp.add_argument("-n", dest="n_neurons", type=int, required=True)
    with_search(sp)
    sp.add_argument("--jobs", type=int, default=1)
    sp.add_argument("--cert-dir")
    sp.add_argument("-o", "--output")
    sp.set_defaults(func=cmd_enumerate)

    sp = sub.add_parser("render", help="SVG (1D/2D) or scene document (3D) for a grid file")
    sp.add_argument("gridfile")
    sp.add_argument("-o", "--output", required=True)
    sp.set_defaults(func=cmd_render)

    sp = sub.add_parser("verify", help="re-check a certificate file against a code")
    with_code(sp)
    sp.add_argument("certfile")
    sp.set_defaults(func=cmd_verify)
    return p


def run(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_USAGE if exc.code else EXIT_OK
    try:
        return args.func(args)
    except (CodeParseError, UsageError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except NotConnectedError as exc:
        print(f"NOT CONNECTED: {exc}", file=sys.stderr)
        return EXIT_NO
    except Exception as exc:  # noqa: BLE001
        print(f"internal error: {type(exc).__name__}: {exc}", file=sys.stderr)
        return EXIT_INTERNAL


def main() -> None:
    sys.exit(run())
