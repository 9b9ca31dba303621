import itertools
import random

import networkx as nx
import pytest
from hypothesis import given, strategies as st

from lrbhom.monoid import CapExceeded, Graph, complete_graph, cycle_graph, path_graph
from lrbhom.order import Poset
from lrbhom.topology import (RATIONALS, BettiVector, Field, SimplicialComplex, bron_kerbosch,
                             chromatic_polynomial, clique_complex, complex_components,
                             count_acyclic_orientations, count_acyclic_orientations_brute,
                             graph_components, induced_subcomplex, is_chordal, is_cone,
                             is_perfect_elimination_ordering, lex_bfs, leray_number, order_complex,
                             reduced_betti, reduced_betti_homology)
from strategies import graphs

F2 = Field(2)

# six-vertex triangulation of the real projective plane
RP2 = SimplicialComplex.from_faces(6, [
    (0, 1, 2), (0, 2, 3), (0, 3, 4), (0, 4, 5), (0, 1, 5),
    (1, 2, 4), (2, 3, 5), (1, 3, 4), (2, 4, 5), (1, 3, 5)])


def to_nx(G):
    H = nx.Graph()
    H.add_nodes_from(range(G.vertex_count))
    H.add_edges_from(G.sorted_edges())
    return H


def sphere_boundary(d):
    """Boundary of the (d+1)-simplex, a d-sphere."""
    return SimplicialComplex.from_faces(d + 2, list(itertools.combinations(range(d + 2), d + 1)))


@st.composite
def complexes(draw, max_n=7):
    n = draw(st.integers(1, max_n))
    faces = draw(st.lists(st.sets(st.integers(0, n - 1), min_size=1, max_size=4),
                          min_size=1, max_size=8))
    return SimplicialComplex.from_faces(n, [tuple(sorted(f)) for f in faces])


@pytest.mark.parametrize("d", range(0, 4))
def test_sphere_cohomology(d):
    K = sphere_boundary(d)
    for f in (RATIONALS, F2, Field(3)):
        assert reduced_betti(K, f) == BettiVector.sphere(d)


def test_field_dependence_on_projective_plane():
    assert reduced_betti(RP2, RATIONALS).is_zero()
    assert reduced_betti(RP2, F2).nonzero() == {1: 1, 2: 1}
    assert reduced_betti_homology(RP2, F2) == reduced_betti(RP2, F2)


def test_empty_and_void_like_complexes():
    empty = SimplicialComplex.from_faces(0, [])
    assert reduced_betti(empty).nonzero() == {-1: 1}
    point = SimplicialComplex.from_faces(1, [(0,)])
    assert reduced_betti(point).is_zero()


@given(complexes())
def test_reduced_euler_characteristic(K):
    # sum (-1)^i f_i, counting the empty face in degree -1
    chi = -1 + sum((-1) ** i * f for i, f in enumerate(K.f_vector()))
    for f in (RATIONALS, F2):
        assert reduced_betti(K, f).euler() == chi


@given(complexes())
def test_cohomology_equals_homology(K):
    for f in (RATIONALS, Field(3)):
        assert reduced_betti(K, f) == reduced_betti_homology(K, f)


@given(complexes(max_n=6), st.data())
def test_leray_monotone_under_induced_subcomplexes(K, data):
    W = data.draw(st.sets(st.integers(0, K.vertex_count - 1)))
    assert leray_number(induced_subcomplex(K, W)) <= leray_number(K)


def test_leray_examples():
    simplex = SimplicialComplex.from_faces(4, [(0, 1, 2, 3)])
    assert leray_number(simplex) == 0
    assert leray_number(clique_complex(cycle_graph(4))) == 2
    assert leray_number(clique_complex(path_graph(3))) == 1
    assert leray_number(sphere_boundary(2)) == 3


def test_leray_witness():
    L, W = leray_number(clique_complex(cycle_graph(5)), return_witness=True)
    assert L == 2 and len(W) == 5


def test_leray_cap():
    with pytest.raises(CapExceeded):
        leray_number(SimplicialComplex.from_faces(30, [(i,) for i in range(30)]))


def test_cone_detection():
    assert is_cone(SimplicialComplex.from_faces(3, [(0, 1), (0, 2)]))
    assert not is_cone(clique_complex(cycle_graph(4)))


def test_order_complex_of_chain_is_simplex():
    leq = [[i <= j for j in range(4)] for i in range(4)]
    import numpy as np
    K = order_complex(Poset(tuple(range(4)), np.array(leq), tuple("abcd")))
    assert K.facets == ((0, 1, 2, 3),) or list(K.facets) == [(0, 1, 2, 3)]


@given(graphs(max_n=8))
def test_cliques_match_networkx(G):
    ours = {frozenset(c) for c in bron_kerbosch(G.adjacency())}
    # with no vertices the only clique is the empty one
    theirs = {frozenset(c) for c in nx.find_cliques(to_nx(G))} if G.vertex_count else {frozenset()}
    assert ours == theirs


@given(graphs(max_n=8))
def test_components_match_networkx(G):
    H = to_nx(G)
    assert graph_components(G)[0] == nx.number_connected_components(H)
    if G.vertex_count:
        assert complex_components(clique_complex(G)) == nx.number_connected_components(H)


@given(graphs(max_n=8))
def test_lex_bfs_recognises_chordal_graphs(G):
    chordal = nx.is_chordal(to_nx(G))
    assert is_chordal(G) == chordal
    if chordal:
        order = lex_bfs(G)
        assert is_perfect_elimination_ordering(G, order[::-1])


def random_graph(rng, max_n):
    n = rng.randint(1, max_n)
    p = rng.random()
    return Graph.from_edges(n, [e for e in itertools.combinations(range(n), 2) if rng.random() < p])


def test_chordal_iff_leray_at_most_one():
    """50 random graphs, up to 9 vertices, two fields."""
    rng = random.Random(20261018)
    for _ in range(50):
        G = random_graph(rng, 9)
        K = clique_complex(G)
        chordal = nx.is_chordal(to_nx(G))
        assert is_chordal(G) == chordal
        for f in (RATIONALS, F2):
            assert (leray_number(K, f) <= 1) == chordal


def test_acyclic_orientations_against_brute_force():
    """30 random graphs, up to 8 vertices."""
    rng = random.Random(7)
    for _ in range(30):
        G = random_graph(rng, 8)
        if len(G.edges) > 20:
            G = Graph.from_edges(G.vertex_count, G.sorted_edges()[:20])
        assert count_acyclic_orientations(G) == count_acyclic_orientations_brute(G)


@pytest.mark.parametrize("G, count", [
    (complete_graph(4), 24), (cycle_graph(4), 14), (path_graph(3), 4), (Graph(3), 1),
])
def test_acyclic_orientation_counts(G, count):
    assert count_acyclic_orientations(G) == count


def test_chromatic_polynomial_of_triangle():
    # x(x-1)(x-2) = x^3 - 3x^2 + 2x, coefficients low degree first
    assert tuple(chromatic_polynomial(complete_graph(3))) == (0, 2, -3, 1)


def test_field_parse():
    assert Field.parse("Q") == RATIONALS
    assert Field.parse("F101") == Field(101)
    assert str(Field.parse("gf(3)")) == "F3"
    with pytest.raises(ValueError):
        Field.parse("F4")
    with pytest.raises(ValueError):
        Field.parse("R")
