# Copyright (c) 2025, sghom developers.  All rights reserved.
#
# Use of this source code is governed by an MIT-style license that can be
# found in the LICENSE file at the root of this source tree.

import numpy as np

from src.signs import SIGNS
from src.signed_graph_model import SignedGraph
from src.generators.gadgets import GadgetTemplate, glue

INF_LABEL = 'inf'


def disjoint_union(graphs):
    '''
    Vertices of graphs[i] follow those of graphs[i-1]; labels get an `i.` prefix.
    '''
    graphs = list(graphs)
    total = sum(g.order for g in graphs)
    mat = np.zeros((total, total), dtype=np.int8)
    labels = []
    offset = 0
    for i, g in enumerate(graphs):
        mat[offset:offset + g.order, offset:offset + g.order] = g.sign_matrix
        labels += [f"{i}.{lab}" for lab in g.labels]
        offset += g.order
    return SignedGraph(mat, labels=labels)


def star_construction(g):
    '''
    Two copies of g and a vertex inf (the last vertex), positive to every
    vertex of the first copy and negative to every vertex of the second.
    '''
    n = g.order
    mat = np.zeros((2 * n + 1, 2 * n + 1), dtype=np.int8)
    mat[:n, :n] = g.sign_matrix
    mat[n:2 * n, n:2 * n] = g.sign_matrix
    mat[2 * n, :n] = mat[:n, 2 * n] = 1
    mat[2 * n, n:2 * n] = mat[n:2 * n, 2 * n] = -1
    labels = [f"{lab}_1" for lab in g.labels] + [f"{lab}_2" for lab in g.labels] + [INF_LABEL]
    return SignedGraph(mat, labels=labels)


def iterated_star(g, times):
    for _ in range(times):
        g = star_construction(g)
    return g


def attach_vertex_gadgets(g, a):
    '''
    For every vertex v, one copy of a joined positively to v and another
    joined negatively to v.
    '''
    n, k = g.order, a.order
    total = n * (1 + 2 * k)
    mat = np.zeros((total, total), dtype=np.int8)
    mat[:n, :n] = g.sign_matrix
    labels = list(g.labels)
    offset = n
    for v in range(n):
        for s in SIGNS:
            mat[offset:offset + k, offset:offset + k] = a.sign_matrix
            mat[v, offset:offset + k] = mat[offset:offset + k, v] = int(s)
            labels += [f"{lab}^{{{g.label(v)},{s}}}" for lab in a.labels]
            offset += k
    return SignedGraph(mat, labels=labels)


def attach_edge_gadgets(g, a):
    '''
    For every edge xy and every sign pair (alpha, beta), one copy of a whose
    vertices are joined to x with sign alpha and to y with sign beta.
    '''
    n, k = g.order, a.order
    edges = g.edges()
    total = n + 4 * len(edges) * k
    mat = np.zeros((total, total), dtype=np.int8)
    mat[:n, :n] = g.sign_matrix
    labels = list(g.labels)
    offset = n
    for x, y, _ in edges:
        for alpha in SIGNS:
            for beta in SIGNS:
                block = slice(offset, offset + k)
                mat[block, block] = a.sign_matrix
                mat[x, block] = mat[block, x] = int(alpha)
                mat[y, block] = mat[block, y] = int(beta)
                labels += [
                    f"{lab}^{{{g.label(x)},{g.label(y)},{alpha}{beta}}}" for lab in a.labels]
                offset += k
    return SignedGraph(mat, labels=labels)


def glue_star_copies(g, h):
    '''
    For every vertex v of g, a fresh copy of star_construction(h) whose inf
    is identified with v.
    '''
    star = star_construction(h)
    return glue(g, GadgetTemplate(star, {INF_LABEL: star.order - 1}), INF_LABEL)


def enhanced_star_construction(g, h, a):
    return attach_edge_gadgets(glue_star_copies(g, h), a)
