import numpy as np
import pytest
from hypothesis import given, settings, strategies as st

from oracles import labeled_isomorphic
from rfcodes.admissible import canonical_graph
from rfcodes.codes import Code, NotConnectedError, is_connected_code, parse_code, word
from rfcodes.grid import extract_code, realization_graph, verify_grid
from rfcodes.realize3d import build_3d, containment_pairs


def _fmt(p):
    return tuple("".join(str(i + 1) for i in range(8) if w >> i & 1) for w in p)


def test_single_ball():
    r = build_3d(parse_code("e,1"))
    assert r.tubes == () and r.grid.labels.shape == (1, 1, 1)
    assert r.grid.labels[0, 0, 0] == word(1)


def test_four_neuron(four_neuron):
    r = build_3d(four_neuron)
    assert len(r.ball_x) == 9
    pairs = {_fmt(p) for p in containment_pairs(four_neuron)}
    assert pairs == {("1", "12"), ("1", "13"), ("1", "123"), ("2", "12"), ("2", "23"),
                     ("2", "24"), ("2", "123"), ("3", "13"), ("3", "23"), ("3", "123"),
                     ("4", "24"), ("12", "123"), ("13", "123"), ("23", "123")}
    assert len(r.tubes) == 14
    assert verify_grid(r.grid, four_neuron).ok


def test_pairs5(pairs5):
    r = build_3d(pairs5)
    assert len(r.ball_x) == 15 and len(r.tubes) == 20
    assert verify_grid(r.grid, pairs5).ok
    assert labeled_isomorphic(realization_graph(r.grid), canonical_graph(pairs5))


def test_heights_strictly_increase(four_neuron):
    hs = [t.height for t in build_3d(four_neuron).tubes]
    assert hs == sorted(set(hs))


def test_disconnected_rejected():
    with pytest.raises(NotConnectedError):
        build_3d(parse_code("e,12,13"))


def test_empty_code():
    r = build_3d(parse_code("e"))
    assert not r.grid.labels.any()


def test_scene(four_neuron):
    doc = build_3d(four_neuron).scene()
    assert doc["kind"] == "scene"
    assert len(doc["cubes"]) == int(np.count_nonzero(build_3d(four_neuron).grid.labels))


def _audit(code):
    r = build_3d(code)
    assert verify_grid(r.grid, code).ok
    seen = set()
    for t in r.tubes:
        cells = set(t.cells)
        assert not cells & seen
        seen |= cells
    # tube cells touch only sigma, tau, their own label or empty
    lab = r.grid.labels
    for t in r.tubes:
        for c in t.cells:
            for axis in range(3):
                for d in (-1, 1):
                    nb = list(c)
                    nb[axis] += d
                    if 0 <= nb[axis] < lab.shape[axis]:
                        assert int(lab[tuple(nb)]) in (0, t.sigma, t.tau)
    assert labeled_isomorphic(realization_graph(r.grid), canonical_graph(code))


def _connected_codes(n):
    for bits in range(1 << ((1 << n) - 1)):
        c = Code(n, frozenset(w + 1 for w in range((1 << n) - 1) if bits >> w & 1))
        if is_connected_code(c):
            yield c


def test_exhaustive_small():
    for n in (1, 2, 3):
        for c in _connected_codes(n):
            _audit(c)


@settings(max_examples=40, deadline=None)
@given(st.integers(4, 5).flatmap(
    lambda n: st.sets(st.integers(1, (1 << n) - 1), min_size=1).map(
        lambda ws: Code(n, frozenset(ws)))).filter(is_connected_code))
def test_random_codes(code):
    _audit(code)
