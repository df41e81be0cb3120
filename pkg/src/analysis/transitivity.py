# Copyright (c) 2025, sghom developers.  All rights reserved.
#
# Use of this source code is governed by an MIT-style license that can be
# found in the LICENSE file at the root of this source tree.

import networkx as nx
import numpy as np

from src.signs import SIGNS

KINDS = ('sp_vertex', 'sp_edge', 'vertex', 'edge')


def _sp_vertex(t, deadline):
    return all(
        t.automorphism_with_pins([(0, v)], deadline=deadline) is not None
        for v in range(1, t.order))


def _sp_edge(t, deadline):
    # Orbit of one reference edge per sign.
    edges = t.edges()
    for s in SIGNS:
        same = [(u, v) for u, v, sign in edges if sign is s]
        if not same:
            continue
        a, b = same[0]
        for c, d in same[1:]:
            if (t.automorphism_with_pins([(a, c), (b, d)], deadline=deadline) is None and
                    t.automorphism_with_pins([(a, d), (b, c)], deadline=deadline) is None):
                return False
    return True


def _vertex(t, deadline):
    return all(
        t.switching_automorphism_with_pins([(0, v)], deadline=deadline) is not None
        for v in range(1, t.order))


def _edge(t, deadline):
    # Switching may flip the image edge, so b may land on either copy of
    # its image; a is kept on an original.
    n = t.order
    edges = t.edges()
    if not edges:
        return True
    a, b, _ = edges[0]
    for c, d, _ in edges[1:]:
        options = [
            [(a, c), (b, d)], [(a, c), (b, d + n)],
            [(a, d), (b, c)], [(a, d), (b, c + n)]]
        if all(t.switching_automorphism_with_pins(p, deadline=deadline) is None for p in options):
            return False
    return True


def transitivity(t, kind, deadline=None):
    '''
    sp kinds quantify over sign-preserving automorphisms, the others over
    switching automorphisms. sp_edge compares edges of the same sign only.
    '''
    if kind not in KINDS:
        raise ValueError(f"Unknown transitivity kind {kind!r}, expected one of {KINDS}.")
    if t.order <= 1:
        return True
    return {
        'sp_vertex': _sp_vertex,
        'sp_edge': _sp_edge,
        'vertex': _vertex,
        'edge': _edge,
    }[kind](t, deadline)


def anti_twin_pairs(t):
    '''
    Non-adjacent pairs {u, v} with sign(u, w) = -sign(v, w) for every other w.
    '''
    n = t.order
    mat = t.sign_matrix
    pairs = []
    for u in range(n):
        for v in range(u + 1, n):
            if mat[u, v] != 0:
                continue
            mask = np.ones(n, dtype=bool)
            mask[[u, v]] = False
            if np.array_equal(mat[u, mask], -mat[v, mask]):
                pairs.append((u, v))
    return pairs


def anti_twin_matching(t):
    '''
    A perfect matching of anti-twin pairs, or None. One exists iff t is the
    double switching graph of its restriction to one vertex of each pair.
    '''
    if t.order % 2:
        return None
    graph = nx.Graph()
    graph.add_nodes_from(range(t.order))
    graph.add_edges_from(anti_twin_pairs(t))
    matching = nx.max_weight_matching(graph, maxcardinality=True)
    if 2 * len(matching) != t.order:
        return None
    return sorted(tuple(sorted(e)) for e in matching)


def is_double_switching_graph(t):
    return anti_twin_matching(t) is not None


def non_edges_form_anti_twin_matching(t):
    '''
    True iff the non-adjacent pairs are exactly a perfect matching of
    anti-twins, i.e. t is the double switching graph of a complete graph.
    '''
    n = t.order
    non_edges = [(u, v) for u in range(n) for v in range(u + 1, n) if t.sign_matrix[u, v] == 0]
    if 2 * len(non_edges) != n:
        return False
    covered = {x for e in non_edges for x in e}
    return len(covered) == n and set(non_edges) <= set(anti_twin_pairs(t))
