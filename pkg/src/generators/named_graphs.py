# Copyright (c) 2025, sghom developers.  All rights reserved.
#
# Use of this source code is governed by an MIT-style license that can be
# found in the LICENSE file at the root of this source tree.

from src.signs import Sign, POS, NEG
from src.exceptions import UnknownNameError
from src.signed_graph_model import SignedGraph
from src.generators.gadgets import GadgetTemplate, h_gadget


def k4_with_negatives(negatives):
    negatives = {frozenset(e) for e in negatives}
    edges = [
        (u, v, NEG if frozenset((u, v)) in negatives else POS)
        for u in range(4) for v in range(u + 1, 4)]
    return SignedGraph.from_edges(4, edges)


def k6_matching(negative_matching=True):
    '''
    K6 with the perfect matching {01, 23, 45} as its negative edges, or as
    its only positive edges when negative_matching is False.
    '''
    matching = {frozenset((0, 1)), frozenset((2, 3)), frozenset((4, 5))}
    edges = []
    for u in range(6):
        for v in range(u + 1, 6):
            in_m = frozenset((u, v)) in matching
            edges.append((u, v, NEG if in_m == negative_matching else POS))
    return SignedGraph.from_edges(6, edges)


def p5_matching():
    # Path on 6 vertices, the negative edges form a maximum matching.
    signs = [NEG, POS, NEG, POS, NEG]
    return SignedGraph.from_edges(6, [(i, i + 1, s) for i, s in enumerate(signs)])


X_NAMES = ('u', 'v', 'w', 'x')
Y_NAMES = X_NAMES + ('y',)


def x_structure(signs=(POS, POS, POS, POS)):
    '''
    Triangle uvw with a pendant x at w.
    Input:
        @signs:  signs of (uv, vw, wu, wx)
    '''
    s_uv, s_vw, s_wu, s_wx = (Sign.parse(s) for s in signs)
    graph = SignedGraph.from_edges(
        4, [(0, 1, s_uv), (1, 2, s_vw), (2, 0, s_wu), (2, 3, s_wx)], labels=X_NAMES)
    return GadgetTemplate(graph, {name: i for i, name in enumerate(X_NAMES)})


def y_structure(signs=(POS, POS, POS, POS)):
    '''
    x_structure plus a vertex y joined positively to x.
    '''
    base = x_structure(signs).graph
    graph = SignedGraph.from_edges(
        5, [(u, v, s) for u, v, s in base.edges()] + [(3, 4, POS)], labels=Y_NAMES)
    return GadgetTemplate(graph, {name: i for i, name in enumerate(Y_NAMES)})


def switched_at_w(template):
    return GadgetTemplate(template.graph.switch({template.port('w')}), template.ports)


NAMED_GRAPHS = {
    'K4_bad_positive': lambda: SignedGraph.complete(4, POS),
    'K4_bad_negative': lambda: SignedGraph.complete(4, NEG),
    'K4_Mminus': lambda: k4_with_negatives([(0, 1), (2, 3)]),
    'K4_Mplus': lambda: k4_with_negatives([(0, 1), (1, 2), (2, 3), (0, 3)]),
    'K6_M': lambda: k6_matching(True),
    'K6_Mbar': lambda: k6_matching(False),
    'P5_M': p5_matching,
    'H_gadget': h_gadget,
    'X_phi': lambda: x_structure(),
    'X_phi_prime': lambda: switched_at_w(x_structure()),
    'Y_phi': lambda: y_structure(),
    'Y_phi_prime': lambda: switched_at_w(y_structure()),
}


def named_graph(name):
    if name not in NAMED_GRAPHS:
        raise UnknownNameError(
            f"Unknown graph name {name!r}; known names: {', '.join(sorted(NAMED_GRAPHS))}.")
    return NAMED_GRAPHS[name]()


def as_graph(item):
    # Templates carry a graph; named graphs may be either.
    return item.graph if isinstance(item, GadgetTemplate) else item
