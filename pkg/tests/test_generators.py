import numpy as np
import pytest

from src.signs import POS, NEG
from src.exceptions import FieldOrderError, UnknownNameError, GraphStructureError
from src.signed_graph_model import SignedGraph, sp_isomorphic
from src.generators.finite_field import make_field, FiniteField
from src.generators.paley import paley, paley_plus, paley_plus_double, infinity_vertex
from src.generators.gadgets import h_gadget, pin, glue, build_tower, GadgetTemplate
from src.generators.named_graphs import named_graph, NAMED_GRAPHS, as_graph, x_structure, y_structure, switched_at_w
from src.generators.constructions import (
    disjoint_union, star_construction, iterated_star, attach_vertex_gadgets,
    attach_edge_gadgets, glue_star_copies, enhanced_star_construction)
from src.generators.configurations import config_pattern, find_configuration, contains_any_configuration

from conftest import positive_cycle, positive_path


@pytest.mark.parametrize('q', [1, 6, 12, 256])
def test_field_rejects_bad_orders(q):
    with pytest.raises(FieldOrderError):
        FiniteField(q)


@pytest.mark.parametrize('q', [2, 4, 5, 8, 9, 25, 27])
def test_field_axioms(q):
    field = make_field(q)
    assert field.q == q and field.p ** field.k == q
    for a in field.elements:
        assert field.add(a, 0) == a
        assert field.mul(a, 1) == a
        assert field.add(a, field.neg(a)) == 0
        assert field.sub(a, a) == 0
        if a:
            assert any(field.mul(a, b) == 1 for b in field.elements)
    if q % 2:
        assert len(field.squares) == (q - 1) // 2
    else:
        assert len(field.squares) == q - 1


def test_field_is_cached():
    assert make_field(9) is make_field(9)
    # x^2 + 1 is the least monic irreducible quadratic over GF(3).
    assert make_field(9).modulus_coeffs == (1, 0, 1)


def test_paley5_signs():
    t = paley(5)
    assert t.order == 5 and t.is_complete()
    assert t.labels == ('0', '1', '2', '3', '4')
    for i in range(5):
        assert t.sign(i, (i + 1) % 5) is POS
        assert t.sign(i, (i + 2) % 5) is NEG


@pytest.mark.parametrize('q', [3, 7, 11, 6])
def test_paley_rejects_bad_orders(q):
    with pytest.raises(FieldOrderError):
        paley(q)


@pytest.mark.parametrize('q', [5, 9, 13, 17])
def test_paley_is_regular_and_self_negating(q):
    t = paley(q)
    half = (q - 1) // 2
    assert all(t.degree(v, POS) == half and t.degree(v, NEG) == half for v in range(q))
    negated = SignedGraph(-t.sign_matrix)
    assert sp_isomorphic(t, negated) is not None


def test_paley_plus_layout():
    g = paley_plus(5)
    inf = infinity_vertex(5)
    assert inf == 5 and g.order == 6
    assert g.label(inf) == 'inf'
    assert g.neighbors(inf, POS) == frozenset(range(5))
    assert g.induced_subgraph(range(5)) == paley(5)

    d = paley_plus_double(5)
    assert d.order == 12
    assert d.is_double_switching_graph()
    assert d.neighbors(inf + 6, NEG) == frozenset(range(5))


def test_h_gadget():
    template = h_gadget()
    g = template.graph
    assert g.order == 8
    assert g.num_edges == 12 and g.num_positive_edges == 8
    assert template.port('x') == g.vertex_of('x')
    with pytest.raises(GraphStructureError):
        template.port('z')


def test_template_ports_must_be_distinct():
    with pytest.raises(GraphStructureError):
        GadgetTemplate(positive_path(3), {'a': 0, 'b': 0})


def test_pin_and_glue():
    base = positive_path(2)
    out = pin(base, h_gadget(), {'x': 0, 'y': 1})
    assert out.order == 2 + 6
    assert out.sign(0, 1) is POS
    assert out.vertex_of('a1^{0,1}') >= 2
    with pytest.raises(GraphStructureError):
        pin(base, h_gadget(), {'x': 0, 'y': 0})
    h = h_gadget().graph
    wide = GadgetTemplate(h, {'x': h.vertex_of('x'), 'a1': h.vertex_of('a1')})
    with pytest.raises(GraphStructureError):
        pin(base, wide, {'x': 0, 'a1': 1})

    glued = glue(base, h_gadget(), 'x')
    assert glued.order == 2 + 2 * 7


@pytest.mark.parametrize('level, order', [(0, 8), (1, 14), (2, 112), (3, 32), (4, 80), (5, 640)])
def test_tower_orders(level, order):
    assert build_tower(level).order == order


@pytest.mark.parametrize('level', [-1, 6])
def test_tower_level_range(level):
    with pytest.raises(ValueError):
        build_tower(level)


def test_named_graphs():
    for name in NAMED_GRAPHS:
        g = as_graph(named_graph(name))
        assert isinstance(g, SignedGraph)
    p5 = named_graph('P5_M')
    assert p5.order == 6 and p5.num_negative_edges == 3
    k6 = named_graph('K6_M')
    assert k6.is_complete() and k6.num_negative_edges == 3
    assert named_graph('K6_Mbar').num_positive_edges == 3
    assert named_graph('K4_Mplus').num_negative_edges == 4
    with pytest.raises(UnknownNameError):
        named_graph('Petersen')
    with pytest.raises(KeyError):
        named_graph('Petersen')


def test_structures():
    x = x_structure(('+', '-', '+', '-'))
    assert x.graph.sign(0, 1) is POS and x.graph.sign(1, 2) is NEG
    assert x.graph.sign(2, 3) is NEG
    y = y_structure()
    assert y.graph.order == 5 and y.graph.sign(3, 4) is POS
    flipped = switched_at_w(y)
    w = y.port('w')
    for u in flipped.graph.neighbors(w):
        assert flipped.graph.sign(w, u) is -y.graph.sign(w, u)
    assert flipped.graph.sign(3, 4) is POS


def test_disjoint_union():
    g = disjoint_union([positive_path(2), positive_cycle(3)])
    assert g.order == 5 and g.num_edges == 4
    assert len(g.components()) == 2
    assert g.labels[2] == '1.0'


def test_star_construction():
    s = star_construction(SignedGraph.empty(1))
    assert s.order == 3
    assert s.sign(0, 2) is POS and s.sign(1, 2) is NEG and not s.adjacent(0, 1)
    assert iterated_star(SignedGraph.empty(1), 3).order == 15


def test_gadget_attachments():
    g = positive_path(2)
    a = positive_path(2)
    vg = attach_vertex_gadgets(g, a)
    assert vg.order == 2 * (1 + 2 * 2)
    assert vg.num_negative_edges == 2 * 2
    eg = attach_edge_gadgets(g, a)
    assert eg.order == 2 + 4 * 2
    assert eg.num_edges == 1 + 4 * (1 + 2 * 2)

    h = SignedGraph.empty(1)
    glued = glue_star_copies(g, h)
    assert glued.order == 2 + 2 * 2
    enhanced = enhanced_star_construction(g, h, a)
    assert enhanced.order == glued.order + 4 * glued.num_edges * 2


def test_configuration_in_prism():
    prism = SignedGraph.from_edges(6, [
        (0, 1, POS), (1, 2, POS), (0, 2, POS), (3, 4, POS), (4, 5, POS), (3, 5, POS),
        (0, 3, POS), (1, 4, POS), (2, 5, POS)])
    found = find_configuration(prism, config_pattern('b'))
    assert found is not None
    black = [found[b] for b in config_pattern('b').black]
    assert len(set(black)) == 3
    name, _ = contains_any_configuration(prism)
    assert name in ('a', 'b', 'c', 'd')


def test_configuration_whites_may_coincide():
    # All three white neighbours of the triangle land on the fourth vertex.
    found = find_configuration(SignedGraph.complete(4), config_pattern('b'))
    assert found is not None
    assert len({found[w] for w in config_pattern('b').white}) == 1
    assert contains_any_configuration(positive_cycle(5)) is None
    with pytest.raises(UnknownNameError):
        config_pattern('z')
