import math

import networkx as nx
import numpy as np
import pytest
from hypothesis import given, settings

from src.signs import Sign, SignVector, POS, NEG
from src.mappings import Mapping
from src.exceptions import GraphStructureError, InvalidWalkError, UnderlyingGraphMismatch
from src.signed_graph_model import SignedGraph, build_graph, switch, walk_sign, is_switch_equivalent, girth
from src.signed_graph_gears.switching import anti_twin
from src.generators.enumeration import complete_targets
from src.solver.homomorphism import sp_hom, hom

from conftest import signed_graphs, graphs_with_subset, brute_switch_equivalent, positive_cycle, positive_path


def test_sign_algebra():
    assert -POS is NEG
    assert NEG * NEG is POS
    assert Sign.parse('-') is NEG and Sign.parse(1) is POS
    assert str(SignVector('+-+')) == '+-+'
    assert NEG.symbol == '-' and f"{POS:>2}" == ' +'
    assert -SignVector('+-') == SignVector('-+')
    assert len(SignVector.all_of_length(3)) == 8
    with pytest.raises(ValueError):
        Sign.parse(0)


def test_build_graph_basic():
    g = build_graph(3, [(0, 1, '+'), (1, 2, '-')])
    assert g.order == 3
    assert g.num_edges == 2
    assert g.sign(0, 1) is POS and g.sign(2, 1) is NEG
    assert g.sign(0, 2) is None
    assert g.edges() == [(0, 1, POS), (1, 2, NEG)]
    assert g.labels == ('0', '1', '2')
    assert not g.has_labels


@pytest.mark.parametrize('edges', [
    [(0, 0, '+')],
    [(0, 1, '+'), (1, 0, '-')],
    [(0, 3, '+')],
    [(0, 1, 'x')],
])
def test_build_graph_rejects(edges):
    with pytest.raises(GraphStructureError):
        build_graph(3, edges)


def test_matrix_validation():
    with pytest.raises(GraphStructureError):
        SignedGraph(np.array([[0, 1], [-1, 0]], dtype=np.int8))
    with pytest.raises(GraphStructureError):
        SignedGraph(np.array([[1, 0], [0, 0]], dtype=np.int8))
    with pytest.raises(GraphStructureError):
        SignedGraph(np.zeros((2, 2), dtype=np.int8), labels=['a', 'a'])


def test_switch_flips_cut_edges():
    g = build_graph(3, [(0, 1, '+'), (1, 2, '+'), (0, 2, '-')])
    h = switch(g, {0})
    assert h.sign(0, 1) is NEG
    assert h.sign(0, 2) is POS
    assert h.sign(1, 2) is POS
    with pytest.raises(GraphStructureError):
        switch(g, {5})


@given(graphs_with_subset(max_order=7))
@settings(max_examples=60, deadline=None)
def test_switch_is_an_involution(case):
    g, subset = case
    h = g.switch(subset)
    assert h.switch(subset) == g
    assert h.same_underlying(g)
    assert is_switch_equivalent(g, h)
    witness = g.switching_witness(h)
    assert g.switch(witness) == h


@given(graphs_with_subset(min_order=3, max_order=7))
@settings(max_examples=60, deadline=None)
def test_switch_keeps_cycle_signs(case):
    g, subset = case
    h = g.switch(subset)
    for u, v, _ in g.edges():
        for w in range(g.order):
            if w not in (u, v) and g.adjacent(u, w) and g.adjacent(v, w):
                walk = [u, v, w, u]
                assert walk_sign(g, walk) is walk_sign(h, walk)


@given(signed_graphs(max_order=5), signed_graphs(max_order=5))
@settings(max_examples=80, deadline=None)
def test_switch_equivalence_matches_brute_force(g1, g2):
    if g1.order != g2.order:
        return
    # Keep the underlying graph of g1 and take the signs of g2 where possible.
    mat = g1.sign_matrix.copy()
    other = g2.sign_matrix
    mat[(mat != 0) & (other != 0)] = other[(mat != 0) & (other != 0)]
    h = SignedGraph(mat)
    assert g1.is_switch_equivalent(h) == brute_switch_equivalent(g1, h)


def test_switch_equivalence_needs_same_underlying():
    with pytest.raises(UnderlyingGraphMismatch):
        is_switch_equivalent(positive_path(3), positive_cycle(3))


def test_walk_sign():
    g = build_graph(3, [(0, 1, '+'), (1, 2, '-'), (0, 2, '+')])
    assert walk_sign(g, [0, 1, 2, 0]) is NEG
    assert walk_sign(g, [0, 1, 0]) is POS
    assert walk_sign(g, [1, 2, 1, 0, 1]) is POS
    with pytest.raises(InvalidWalkError):
        walk_sign(g, [0, 1, 2])
    with pytest.raises(InvalidWalkError):
        walk_sign(build_graph(3, [(0, 1, '+')]), [0, 2, 0])


def test_girth_and_components():
    assert girth(positive_cycle(3)) == 3
    assert girth(positive_cycle(5)) == 5
    assert girth(positive_path(4)) == math.inf
    g = build_graph(5, [(0, 1, '+'), (3, 4, '-')])
    assert g.components() == [[0, 1], [2], [3, 4]]
    assert not g.is_connected()
    assert positive_cycle(4).is_bipartite()
    assert not positive_cycle(5).is_bipartite()


@given(signed_graphs(max_order=7))
@settings(max_examples=60, deadline=None)
def test_bfs_forest_spans_components(g):
    comps = g.components()
    assert sorted(v for c in comps for v in c) == list(range(g.order))
    assert [c[0] for c in comps] == sorted(c[0] for c in comps)
    tree = g.bfs_forest()
    assert len(tree) == g.order - len(comps)
    reached = {c[0] for c in comps}
    for parent, child in tree:
        assert g.adjacent(parent, child)
        assert parent in reached and child not in reached
        reached.add(child)
    if g.girth() == math.inf:
        assert g.num_edges == len(tree)
    else:
        assert 3 <= g.girth() <= g.order
    if g.is_bipartite():
        assert g.girth() == math.inf or g.girth() % 2 == 0


def test_girth_of_named_graphs():
    assert girth(SignedGraph.from_networkx(nx.petersen_graph())) == 5
    assert girth(SignedGraph.from_networkx(nx.cubical_graph())) == 4
    assert girth(SignedGraph.complete(4)) == 3
    assert isinstance(girth(positive_cycle(6)), int)


def test_double_switching_layout():
    g = build_graph(3, [(0, 1, '+'), (1, 2, '-')])
    d = g.double_switching()
    assert d.order == 6
    assert d.is_double_switching_graph()
    for v in range(3):
        assert anti_twin(v, 3) == v + 3
        assert anti_twin(v + 3, 3) == v
        assert d.sign(v, v + 3) is None
    assert d.sign(0, 1) is POS and d.sign(0, 4) is NEG and d.sign(3, 4) is POS
    assert d.labels[3] == '0^'


def test_forced_distinct_pairs():
    # 0 and 2 are joined by a positive and a negative 2-path.
    g = build_graph(4, [(0, 1, '+'), (1, 2, '+'), (0, 3, '+'), (3, 2, '-')])
    pairs = g.forced_distinct_pairs()
    assert (0, 2) in pairs
    assert (1, 3) not in pairs
    assert {(0, 1), (1, 2), (0, 3), (2, 3)} <= pairs


@given(signed_graphs(max_order=6))
@settings(max_examples=25, deadline=None)
def test_forced_distinct_pairs_never_identified(g):
    # Every signed graph of order <= 4 is a subgraph of a complete one, so
    # homomorphisms into the complete order-4 targets cover all of them.
    pairs = g.forced_distinct_pairs()
    for target in complete_targets(4, 'signed'):
        found = hom(g, target)
        if found is not None:
            assert all(found.image[u] != found.image[v] for u, v in pairs)
        double = target.double_switching()
        for u, v in pairs:
            for t in range(target.order):
                both = {u: (t, t + target.order), v: (t, t + target.order)}
                assert sp_hom(g, double, domains=both) is None, (u, v, t)


def test_relabel_and_induced_subgraph():
    g = build_graph(3, [(0, 1, '+'), (1, 2, '-')], labels=['a', 'b', 'c'])
    h = g.relabel([2, 0, 1])
    assert h.sign(2, 0) is POS
    assert h.sign(0, 1) is NEG
    assert h.labels[2] == 'a'
    sub = g.induced_subgraph([2, 1])
    assert sub.sign(0, 1) is NEG
    assert list(sub.labels) == ['c', 'b']


def test_networkx_round_trip():
    g = build_graph(4, [(0, 1, '+'), (1, 2, '-'), (2, 3, '-')])
    assert SignedGraph.from_networkx(g.to_networkx()).without_labels() == g


def test_edits_return_new_graphs():
    g = positive_path(3)
    h = g.with_edge(0, 2, '-')
    assert h.sign(0, 2) is NEG and not g.adjacent(0, 2)
    with pytest.raises(GraphStructureError):
        h.with_edge(0, 2, '+')
    bigger = g.add_vertices(2)
    assert bigger.order == 5 and bigger.degree(4) == 0
    assert not bigger.has_labels
    named = g.with_labels(['a', 'b', 'c']).add_vertices(1, labels=['d'])
    assert named.labels == ('a', 'b', 'c', 'd')
    assert named.without_labels() == g.add_vertices(1)


def test_mapping():
    m = Mapping([2, 0, 2], switch_witness=[1])
    assert m.image == (2, 0, 2) and m[0] == 2 and len(m) == 3
    assert not m.is_injective()
    assert Mapping((1, 0)).is_injective()
    m.check_target(SignedGraph.empty(3))
    with pytest.raises(AssertionError):
        m.check_target(SignedGraph.empty(2))
    assert m.as_dict() == {'image': [2, 0, 2], 'switch_witness': [1]}
    assert Mapping((0,)).as_dict()['switch_witness'] is None
