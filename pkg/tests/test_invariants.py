import itertools

import pytest
from hypothesis import given, settings

from lrbhom import io
from lrbhom.corpus import free_with_zero, left_zero_with_identity, word_closure
from lrbhom.invariants import (VerificationError, chain_bound_check, context,
                               contraction_acyclicity_check, crosscut_check, ext_dimension,
                               ext_table, fpc_ext_check, global_dimension, invariants_summary,
                               leray_bound_check, main_result_check, quiver, relation_counts,
                               tree_quiver, tree_quiver_check)
from lrbhom.monoid import complete_graph, cycle_graph, fpc_lrb, free_lrb, path_graph, sign_closure
from lrbhom.order import is_geometric, is_right_hereditary
from lrbhom.topology import RATIONALS, Field, clique_complex, is_chordal, leray_number
from strategies import graphs, lrbs, sign_vectors

FIELDS = (RATIONALS, Field(2), Field(3))


def supports(B):
    """Lattice index -> set of letters of a representative word."""
    ctx = context(B)
    return {c: set(B.labels[r]) - {"1"} for c, r in enumerate(ctx.reps)}


@pytest.mark.parametrize("n", [2, 3])
def test_free_quiver_counts(n):
    B = free_lrb(n)
    supp = supports(B)
    for f in FIELDS:
        q = quiver(B, f)
        for X, Y in itertools.product(supp, repeat=2):
            want = len(supp[X] - supp[Y]) - 1 if supp[X] > supp[Y] else 0
            assert q.arrows[X, Y] == want
        assert not relation_counts(B, f).any()
        assert global_dimension(B, f) == 1


def test_free_three_has_double_arrow_from_bottom_to_top():
    B = free_lrb(3)
    L = context(B).L
    assert quiver(B).arrows[L.bottom, L.top] == 2
    assert quiver(B).total_arrows() == 8      # 3 + 2 + 3


@pytest.mark.parametrize("n", [0, 1])
def test_small_free_are_semisimple(n):
    assert global_dimension(free_lrb(n)) == 0


def test_ext_zero_is_identity_matrix():
    B = free_lrb(2)
    k = len(context(B).L)
    for X, Y in itertools.product(range(k), repeat=2):
        assert ext_dimension(B, X, Y, 0) == int(X == Y)


def test_ext_vanishes_unless_below():
    B = free_lrb(3)
    L = context(B).L
    for X, Y in itertools.product(range(len(L)), repeat=2):
        if not L.lt(X, Y):
            assert all(ext_dimension(B, X, Y, n) == 0 for n in range(1, 4))


def test_ext_argument_errors():
    B = free_lrb(2)
    with pytest.raises(IndexError):
        ext_dimension(B, 0, 99, 1)
    with pytest.raises(ValueError):
        ext_dimension(B, 0, 0, -1)


def test_ext_table_lookup():
    B = free_lrb(2)
    t = ext_table(B)
    L = context(B).L
    assert t[L.bottom, L.top, 1] == 1
    with pytest.raises(KeyError):
        t[0, 0, t.max_n + 1]


def test_fig2_global_dimension_and_quiver():
    B = io.builtin_monoid("fig2-three-lines")
    ctx = context(B)
    assert ctx.betti(ctx.L.bottom, ctx.L.top).nonzero() == {1: 1}
    assert global_dimension(B) == 2 == ctx.L.longest_chain()
    assert quiver(B).total_arrows() == 6


@pytest.mark.parametrize("G", [cycle_graph(4), path_graph(3), complete_graph(4), cycle_graph(5),
                               complete_graph(3)])
def test_fpc_global_dimension_is_leray_number(G):
    B = fpc_lrb(G)
    for f in (RATIONALS, Field(2)):
        g = global_dimension(B, f)
        assert g == leray_number(clique_complex(G), f)
        assert (g <= 1) == is_chordal(G)


@given(graphs(min_n=1, max_n=4))
def test_fpc_global_dimension_random(G):
    B = fpc_lrb(G)
    g = global_dimension(B)
    assert g == leray_number(clique_complex(G))
    assert (g <= 1) == is_chordal(G)


def test_fpc_ext_examples():
    G = cycle_graph(4)
    assert fpc_ext_check(G, {0, 1, 2, 3}, set(), 2).details["ext"] == 1
    assert fpc_ext_check(G, {0, 2}, set(), 1).details["ext"] == 1
    assert fpc_ext_check(G, {0, 1}, set(), 1).details["ext"] == 0
    with pytest.raises(ValueError):
        fpc_ext_check(G, {0}, {0}, 1)


@given(lrbs)
@settings(max_examples=40)
def test_main_result_consistency(B):
    # quiver = Ext^1, choice of y immaterial, intervals nonempty
    assert main_result_check(B).passed


@given(lrbs)
@settings(max_examples=40)
def test_bounds(B):
    assert chain_bound_check(B).passed
    assert leray_bound_check(B, max_vertices=12).passed


@given(lrbs)
@settings(max_examples=40)
def test_contractions_are_acyclic(B):
    for X in range(len(context(B).L)):
        assert contraction_acyclicity_check(B, X).passed


@given(sign_vectors)
@settings(max_examples=40)
def test_crosscut_on_sign_closures(gens):
    B = sign_closure(gens)
    if B.size > 1:
        assert is_geometric(B)
        assert crosscut_check(B).passed


@given(graphs(min_n=1, max_n=4))
@settings(max_examples=30)
def test_crosscut_on_fpc(G):
    assert crosscut_check(fpc_lrb(G)).passed


def test_crosscut_rejects_non_geometric():
    with pytest.raises(ValueError):
        crosscut_check(free_with_zero(2))


@pytest.mark.parametrize("B", [free_lrb(2), free_lrb(3), left_zero_with_identity(3),
                               word_closure(["ab", "c", "ba"]), sign_closure(["++", "+-", "-0"])],
                         ids=lambda B: B.name)
def test_tree_quiver_matches_quiver(B):
    assert is_right_hereditary(B)
    assert tree_quiver_check(B, FIELDS).passed
    assert tree_quiver(B) == quiver(B)


def test_tree_quiver_requires_tree():
    with pytest.raises(ValueError):
        tree_quiver(io.builtin_monoid("fig2-three-lines"))


def test_strict_mode_raises_with_witness():
    rep = chain_bound_check(free_lrb(2))
    rep.passed = False
    rep.witnesses.append({"x": 1})
    from lrbhom.invariants import _require
    with pytest.raises(VerificationError) as err:
        _require(rep, strict=True)
    assert err.value.report.witnesses == [{"x": 1}]


def test_leray_bound_certificate_mode():
    B = fpc_lrb(cycle_graph(4))
    rep = leray_bound_check(B)
    assert rep.passed and rep.details["method"] == "certificate"
    assert rep.details["leray_lower"] == 2


def test_summary_is_deterministic():
    a = io.dumps(invariants_summary(free_lrb(3)))
    b = io.dumps(invariants_summary(free_lrb(3)))
    assert a == b


def test_relation_counts_of_boolean_square():
    # the square's face monoid has one relation from bottom to top
    B = io.builtin_monoid("boolean-2")
    L = context(B).L
    rel = relation_counts(B)
    assert rel[L.bottom, L.top] == 1 and rel.sum() == 1
