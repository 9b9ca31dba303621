import math

import numpy as np
import pytest
from hypothesis import given

from lrbhom.corpus import free_with_zero, left_zero_with_identity, word_closure
from lrbhom.monoid import (Caps, CapExceeded, Graph, LRBError, cycle_graph, empty_graph,
                           complete_graph, format_sign, fpc_lrb, free_lrb, free_lrb_size,
                           free_word_product, parse_sign, path_graph, sign_closure, sign_compose,
                           three_element_lrb, validate_lrb)
from lrbhom.topology import count_acyclic_orientations
from strategies import graphs, lrbs

FIG2_SIGNS = {"000", "+++", "0++", "-++", "-+0", "-+-", "-0-", "---", "0--", "+--", "+-0",
              "+-+", "+0+"}


def check_axioms(B):
    t = B.table
    n = B.size
    e = B.identity
    assert all(t[e, a] == a == t[a, e] for a in range(n))
    assert all(t[a, a] == a for a in range(n))
    for a in range(n):
        for b in range(n):
            assert t[t[a, b], a] == t[a, b]
            for c in range(n):
                assert t[t[a, b], c] == t[a, t[b, c]]


@given(lrbs)
def test_constructed_monoids_satisfy_axioms(B):
    check_axioms(B)


@pytest.mark.parametrize("n", range(0, 5))
def test_free_lrb_size(n):
    assert free_lrb(n).size == free_lrb_size(n) == sum(math.perm(n, k) for k in range(n + 1))


def test_free_lrb_three_has_sixteen_elements():
    assert free_lrb(3).size == 16


def test_free_word_product_keeps_first_occurrences():
    assert free_word_product("523", "13245") == tuple("52314")
    assert free_word_product("", "ab") == tuple("ab")
    assert free_word_product("ab", "ab") == tuple("ab")


def test_free_lrb_cap():
    with pytest.raises(CapExceeded):
        free_lrb(8)
    with pytest.raises(CapExceeded):
        free_lrb(7)          # 13700 elements > default table cap
    assert free_lrb(5, Caps(table_size=400)).size == 326


@pytest.mark.parametrize("graph, size", [
    (empty_graph(3), 16), (complete_graph(3), 8), (cycle_graph(4), 25),
    (cycle_graph(5), 121), (path_graph(3), 10), (complete_graph(4), 16),
])
def test_fpc_sizes(graph, size):
    assert fpc_lrb(graph).size == size


def subset_orientation_sum(G):
    comp = G.complement()
    total = 0
    for mask in range(1 << G.vertex_count):
        sub = [v for v in range(G.vertex_count) if mask >> v & 1]
        total += count_acyclic_orientations(comp.induced(sub))
    return total


@given(graphs(max_n=4))
def test_fpc_size_is_sum_of_acyclic_orientations(G):
    assert fpc_lrb(G).size == subset_orientation_sum(G)


def test_fpc_of_edgeless_graph_is_free():
    F, B = free_lrb(3), fpc_lrb(empty_graph(3))
    assert F.labels == B.labels
    assert np.array_equal(F.table, B.table)


def test_fpc_commuting_generators():
    B = fpc_lrb(path_graph(3))
    a, b, c = (B.index(x) for x in "abc")
    assert B.mul(a, b) == B.mul(b, a)
    assert B.mul(a, c) != B.mul(c, a)


def test_fpc_vertex_cap():
    with pytest.raises(CapExceeded):
        fpc_lrb(empty_graph(11))


def test_graph_validation():
    with pytest.raises(ValueError):
        Graph.from_edges(3, [(0, 1), (1, 0)])
    with pytest.raises(ValueError):
        Graph.from_edges(2, [(0, 0)])
    with pytest.raises(ValueError):
        Graph.from_edges(2, [(0, 2)])


def test_sign_parsing_round_trip():
    assert format_sign(parse_sign("+0-")) == "+0-"
    with pytest.raises(ValueError):
        parse_sign("+x")
    assert sign_compose((0, 1, -1), (1, -1, 1)) == (1, 1, -1)


def test_fig2_sign_closure():
    B = sign_closure(["0++", "0--", "+0+", "-0-", "+-0", "-+0"], name="fig2")
    assert set(B.labels) == FIG2_SIGNS


def test_three_element_lrb():
    B = three_element_lrb()
    assert set(B.labels) == {"0", "+", "-"}
    assert B.labels[B.identity] == "0"


@pytest.mark.parametrize("table, message", [
    ([[0, 1], [1, 0]], "idempotence"),
    ([[0, 1, 2], [1, 1, 2], [2, 1, 2]], "left regularity"),     # xy = y
    ([[1, 1], [1, 1]], "identity"),
])
def test_validate_names_the_broken_axiom(table, message):
    labels = [str(i) for i in range(len(table))]
    with pytest.raises(LRBError, match=message):
        validate_lrb(labels, table, 0)


def test_validate_rejects_corrupted_table():
    F = free_lrb(2)
    table = F.table.tolist()
    a, b = F.index("a"), F.index("b")
    table[a][b] = F.index("ba")
    with pytest.raises(LRBError):
        validate_lrb(F.labels, table, F.identity)


def test_validate_shape_errors():
    with pytest.raises(LRBError):
        validate_lrb(["1", "a"], [[0, 1]], 0)
    with pytest.raises(LRBError):
        validate_lrb(["1", "1"], [[0, 1], [1, 1]], 0)
    with pytest.raises(LRBError):
        validate_lrb(["1", "a"], [[0, 5], [1, 1]], 0)


def test_table_built_examples_are_lrbs():
    for B in (left_zero_with_identity(3), free_with_zero(2), word_closure(["ab", "c", "ba"])):
        check_axioms(B)
