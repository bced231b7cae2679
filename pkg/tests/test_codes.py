import itertools
import warnings

import networkx as nx
import pytest
from hypothesis import given, settings, strategies as st

from oracles import chain_oracle
from rfcodes.codes import (Code, CodeParseError, CodeWarning, automorphisms,
                           is_connected_code, neuron_graph, parse_code, word)


def W(s):
    return word(*map(int, s)) if s != "e" else 0


def all_codes(n):
    words = list(range(1, 1 << n))
    for bits in range(1 << len(words)):
        yield Code(n, frozenset(w for k, w in enumerate(words) if bits >> k & 1))


def test_parse_four_neuron(four_neuron):
    assert four_neuron.n == 4
    assert len(four_neuron) == 10
    assert {W(t) for t in "e,1,2,3,4,12,13,23,24,123".split(",")} == four_neuron.words


def test_parse_pairs5(pairs5):
    assert pairs5.n == 5 and len(pairs5) == 16


def test_parse_empty_only():
    c = parse_code("e", n=3)
    assert c.words == {0} and c.n == 3


def test_brace_and_json_syntax():
    a = parse_code("{}, {1}, {1,2}")
    b = parse_code('{"n": 2, "codewords": [[], [1], [1, 2]]}')
    assert a == b == parse_code("e,1,12")
    big = parse_code("{}, {10}, {3,10}")
    assert big.n == 10 and word(3, 10) in big


def test_missing_empty_word_warns():
    with pytest.warns(CodeWarning):
        c = parse_code("1,2")
    assert 0 in c


def test_duplicates_warn_and_dedupe():
    with pytest.warns(CodeWarning):
        c = parse_code("e,12,21")
    assert len(c) == 2


@pytest.mark.parametrize("text", ["e,1x", "e,0", "e,11", "{1,a}", "{65}", "e,{1"])
def test_parse_errors(text):
    with pytest.raises(CodeParseError):
        with warnings.catch_warnings():
            warnings.simplefilter("ignore")
            parse_code(text)


def test_shorthand_rejected_for_large_n():
    with pytest.raises(CodeParseError):
        parse_code("e,1", n=12)


def test_neuron_outside_n_rejected():
    with pytest.raises(CodeParseError):
        parse_code("e,1,3", n=2)


def test_neuron_graph_examples(four_neuron):
    verts, edges = neuron_graph(four_neuron, 4)
    assert verts == (W("4"), W("24")) and edges == [(W("4"), W("24"))]
    verts, edges = neuron_graph(four_neuron, 1)
    assert set(verts) == {W("1"), W("12"), W("13"), W("123")}
    assert {frozenset(e) for e in edges} == {
        frozenset((W(a), W(b))) for a, b in
        [("1", "12"), ("1", "13"), ("1", "123"), ("12", "123"), ("13", "123")]
    }
    verts, edges = neuron_graph(parse_code("e,1"), 1)
    assert verts == (1,) and edges == []


def test_connectivity_examples(four_neuron, pairs5):
    assert is_connected_code(four_neuron)
    assert is_connected_code(pairs5)
    assert is_connected_code(parse_code("e,1"))
    v = is_connected_code(parse_code("e,12,13"))
    assert not v and v.witness == (1, W("12"), W("13"))


def test_empty_field_neuron_is_connected():
    c = parse_code("e,1", n=3)
    assert is_connected_code(c)
    assert c.empty_neurons() == (2, 3)


def test_connectivity_matches_chain_oracle_exhaustive():
    for n in (1, 2, 3):
        for code in all_codes(n):
            assert bool(is_connected_code(code)) == chain_oracle(code), code


codes3 = st.sets(st.integers(1, 7)).map(lambda s: Code(3, frozenset(s)))
codes4 = st.sets(st.integers(1, 15)).map(lambda s: Code(4, frozenset(s)))


@given(codes4, st.permutations([1, 2, 3, 4]))
def test_connectivity_permutation_invariant(code, perm):
    assert bool(is_connected_code(code)) == bool(is_connected_code(code.permute(perm)))


@given(codes4)
def test_serialize_roundtrip(code):
    assert parse_code(code.serialize()) == code
    assert parse_code(code.shorthand(), n=code.n) == code


def _neuron_connected(code, i):
    verts, edges = neuron_graph(code, i)
    g = nx.Graph(edges)
    g.add_nodes_from(verts)
    return len(verts) < 2 or nx.is_connected(g)


@settings(max_examples=200)
@given(codes4, st.data())
def test_superset_insertion_keeps_connectivity(code, data):
    # a strict superset of an existing word sigma touches sigma, so every
    # neuron of sigma that was connected stays connected
    base = [w for w in code.words if w and w != 15]
    if not base:
        return
    sigma = data.draw(st.sampled_from(sorted(base)))
    extra = data.draw(st.integers(1, 15).filter(lambda x: x & ~sigma))
    bigger = Code(4, code.words | {sigma | extra})
    for i in range(1, 5):
        if sigma >> (i - 1) & 1 and _neuron_connected(code, i):
            assert _neuron_connected(bigger, i)


def test_witness_is_lexicographically_smallest():
    c = parse_code("e,3,12,13,24,34")
    v = is_connected_code(c)
    assert v.witness == (1, W("12"), W("13"))


def test_automorphisms_of_pairs5(pairs5):
    assert len(automorphisms(pairs5)) == 120
    assert automorphisms(parse_code("e,1,12"))[0] == (1, 2)
    assert len(automorphisms(parse_code("e,1,12"))) == 1


def test_code_validation():
    with pytest.raises(ValueError):
        Code(2, frozenset({4}))
    with pytest.raises(ValueError):
        Code(0, frozenset())
    assert 0 in Code(2, frozenset({1}))
