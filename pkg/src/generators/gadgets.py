# Copyright (c) 2025, sghom developers.  All rights reserved.
#
# Use of this source code is governed by an MIT-style license that can be
# found in the LICENSE file at the root of this source tree.

from dataclasses import dataclass, field
from typing import Dict

import numpy as np

from src.signs import POS, NEG
from src.exceptions import GraphStructureError
from src.signed_graph_model import SignedGraph


@dataclass(frozen=True)
class GadgetTemplate:
    '''
    A signed graph with named distinguished vertices (ports).
    '''
    graph: SignedGraph
    ports: Dict[str, int] = field(default_factory=dict)

    def __post_init__(self):
        ports = dict(self.ports)
        if len(set(ports.values())) != len(ports):
            raise GraphStructureError("Ports must name distinct vertices.")
        for name, v in ports.items():
            self.graph.check_vertex(v)
        object.__setattr__(self, 'ports', ports)

    def port(self, name):
        if name not in self.ports:
            raise GraphStructureError(f"Unknown port {name!r}.")
        return self.ports[name]


H_NAMES = ('x', 'y', 'a1', 'a', 'a2', 'd1', 'd', 'd2')
H_POSITIVE = [('x', 'a1'), ('a1', 'a'), ('x', 'a2'), ('a2', 'y'), ('a1', 'y'), ('x', 'd1'), ('d1', 'd'), ('x', 'd2')]
H_NEGATIVE = [('a', 'a2'), ('d', 'd2'), ('d2', 'y'), ('y', 'd1')]


def h_gadget():
    '''
    The main gadget. x and y agree on a1, a2 and disagree on d1, d2.
    '''
    idx = {name: i for i, name in enumerate(H_NAMES)}
    edges = [(idx[u], idx[v], POS) for u, v in H_POSITIVE]
    edges += [(idx[u], idx[v], NEG) for u, v in H_NEGATIVE]
    graph = SignedGraph.from_edges(len(H_NAMES), edges, labels=H_NAMES)
    return GadgetTemplate(graph, {'x': idx['x'], 'y': idx['y']})


def pin(g, template, binding):
    '''
    Disjoint union of g and the template, then each bound port is identified
    with its vertex of g. Fresh vertices are appended in template order and
    labelled `<label>^{<bound labels>}`.

    Input:
        @binding:  {port name: vertex of g}
    '''
    binding = dict(binding)
    bound = {}
    for name, v in binding.items():
        bound[template.port(name)] = g.check_vertex(v)
    if len(set(bound.values())) != len(bound):
        raise GraphStructureError("Ports must be bound to distinct vertices.")

    t = template.graph
    fresh = [v for v in range(t.order) if v not in bound]
    n = g.order
    where = dict(bound)
    for i, v in enumerate(fresh):
        where[v] = n + i

    mat = np.zeros((n + len(fresh), n + len(fresh)), dtype=np.int8)
    mat[:n, :n] = g.sign_matrix
    for u, v, s in t.edges():
        a, b = where[u], where[v]
        if mat[a, b] != 0:
            raise GraphStructureError(f"Pinning would create a second edge between {a} and {b}.")
        mat[a, b] = mat[b, a] = int(s)

    suffix = '^{' + ','.join(g.label(binding[name]) for name in binding) + '}'
    labels = list(g.labels) + [t.label(v) + suffix for v in fresh]
    return SignedGraph(mat, labels=labels)


def glue(g, template, port, vertices=None):
    '''
    For every listed vertex v of g (all by default), add a copy of the
    template whose given port is identified with v.
    '''
    vertices = range(g.order) if vertices is None else list(vertices)
    out = g
    for v in vertices:
        out = pin(out, template, {port: v})
    return out


TOWER_PAIRS = [('x', 'a'), ('x', 'd'), ('y', 'a'), ('y', 'd')]


def _h0():
    return h_gadget().graph


def _h1():
    h0 = _h0()
    return pin(h0, h_gadget(), {'x': h0.vertex_of('x'), 'y': h0.vertex_of('a')})


def _h3():
    g = _h0()
    for u, v in TOWER_PAIRS:
        g = pin(g, h_gadget(), {'x': g.vertex_of(u), 'y': g.vertex_of(v)})
    return g


def _h4():
    g = _h3()
    for u, v in TOWER_PAIRS:
        tag = '^{' + f"{u},{v}" + '}'
        for first, second in (('a1', 'a2'), ('d1', 'd2')):
            g = pin(g, h_gadget(), {
                'x': g.vertex_of(first + tag),
                'y': g.vertex_of(second + tag)})
    return g


def build_tower(level):
    '''
    The gadget tower H0..H5. H2 and H5 glue a copy of H1 and H4, by its
    vertex x, at every vertex of H0.
    '''
    if level not in range(6):
        raise ValueError(f"Tower level must be in 0..5, got {level}.")
    if level == 0:
        return _h0()
    if level == 1:
        return _h1()
    if level == 2:
        h1 = _h1()
        return glue(_h0(), GadgetTemplate(h1, {'x': h1.vertex_of('x')}), 'x')
    if level == 3:
        return _h3()
    if level == 4:
        return _h4()
    h4 = _h4()
    return glue(_h0(), GadgetTemplate(h4, {'x': h4.vertex_of('x')}), 'x')
