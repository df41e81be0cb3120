import math

import networkx as nx
import pytest
from hypothesis import given, settings

from src.exceptions import SizeCapError, FormulaDomainError
from src.signed_graph_model import SignedGraph
from src.generators.constructions import star_construction
from src.solver.minors import has_clique_minor, connected_sets
from src.solver.bounds import (
    kn_lower_bound_formulas, kn_upper_bound_formulas, acyclic_bound_formulas,
    max_degree_bound_formulas, chi_s_lower_from_sp)

from conftest import signed_graphs, positive_cycle, positive_path


def from_nx(graph):
    return SignedGraph.from_networkx(graph)


@pytest.mark.parametrize('g, n, expected', [
    (SignedGraph.empty(0), 1, False),
    (SignedGraph.empty(1), 1, True),
    (SignedGraph.empty(3), 2, False),
    (positive_path(4), 3, False),
    (positive_cycle(5), 3, True),
    (positive_cycle(5), 4, False),
    (SignedGraph.complete(4), 4, True),
    (from_nx(nx.complete_bipartite_graph(3, 3)), 4, True),
    (from_nx(nx.complete_bipartite_graph(3, 3)), 5, False),
    (from_nx(nx.petersen_graph()), 5, True),
    (from_nx(nx.cubical_graph()), 4, True),
    (from_nx(nx.cubical_graph()), 5, False),
])
def test_clique_minors(g, n, expected):
    assert has_clique_minor(g, n) is expected


def test_minor_caps():
    with pytest.raises(SizeCapError):
        has_clique_minor(positive_cycle(13), 3)
    with pytest.raises(SizeCapError):
        has_clique_minor(positive_cycle(5), 7)


def test_connected_sets_of_a_path():
    g = positive_path(4)
    nbr = [g.neighbor_bits(v) for v in range(4)]
    sets = list(connected_sets(0, 0b1111, nbr))
    assert sorted(sets) == [0b0001, 0b0011, 0b0111, 0b1111]
    sets = list(connected_sets(1, 0b1110, nbr))
    assert sorted(sets) == [0b0010, 0b0110, 0b1110]


def test_connected_sets_are_unique():
    g = SignedGraph.complete(5)
    nbr = [g.neighbor_bits(v) for v in range(5)]
    sets = list(connected_sets(0, 0b11111, nbr))
    assert len(sets) == len(set(sets)) == 16


@pytest.mark.parametrize('n, expected', [(3, (4, 2)), (4, (9, 5)), (5, (20, 10)), (6, (41, 21))])
def test_kn_lower_bounds(n, expected):
    assert kn_lower_bound_formulas(n) == expected


def test_kn_upper_bounds():
    assert kn_upper_bound_formulas(3) == (5 * 2 ** 3, 5 * 2 ** 4)
    m = 5 * math.comb(4, 2)
    assert kn_upper_bound_formulas(5) == (m * 2 ** (m - 2), m * 2 ** (m - 1))
    with pytest.raises(FormulaDomainError):
        kn_upper_bound_formulas(2)
    with pytest.raises(FormulaDomainError):
        kn_lower_bound_formulas(1)


def test_acyclic_bounds():
    assert acyclic_bound_formulas(1) == (1, 1)
    assert acyclic_bound_formulas(2) == (2, 4)
    assert acyclic_bound_formulas(3) == (6, 12)
    with pytest.raises(FormulaDomainError):
        acyclic_bound_formulas(0)


def test_max_degree_bounds():
    odd = max_degree_bound_formulas(29)
    assert odd.lower_floor == 11585
    assert odd.lower == pytest.approx(2 ** 13.5)
    assert odd.upper == 26 * 28 * 2 ** 28 + 2
    even = max_degree_bound_formulas(30)
    assert even.lower_floor == 2 ** 14 and even.lower == 2.0 ** 14
    with pytest.raises(FormulaDomainError):
        max_degree_bound_formulas(28)


def test_chi_s_lower_from_sp():
    assert chi_s_lower_from_sp(4) == 2
    assert chi_s_lower_from_sp(5) == 3
    assert chi_s_lower_from_sp(1) == 1


@given(signed_graphs(max_order=5))
@settings(max_examples=20, deadline=None)
def test_star_adds_at_most_one_to_clique_minors(g):
    star = star_construction(g)
    for t in range(1, 4):
        if not has_clique_minor(g, t + 1):
            assert not has_clique_minor(star, t + 2), t


@pytest.mark.parametrize('g, t', [
    (positive_path(4), 2),
    (positive_cycle(5), 3),
    (SignedGraph.complete(4), 4),
])
def test_star_of_minor_free_graphs(g, t):
    assert not has_clique_minor(g, t + 1)
    assert not has_clique_minor(star_construction(g), t + 2)
    assert has_clique_minor(star_construction(g), t + 1)
