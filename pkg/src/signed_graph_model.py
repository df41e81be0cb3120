# Copyright (c) 2025, sghom developers.  All rights reserved.
#
# Use of this source code is governed by an MIT-style license that can be
# found in the LICENSE file at the root of this source tree.

import numpy as np

from src.signs import Sign
from src.exceptions import GraphStructureError
from src.signed_graph_gears.constructor import SGConstructor
from src.signed_graph_gears.properties import SGProperties
from src.signed_graph_gears.switching import SGSwitching
from src.signed_graph_gears.isomorphism import SGIsomorphism
from src.signed_graph_gears.io import SGInOut


class SignedGraph(SGConstructor, SGProperties, SGSwitching, SGIsomorphism, SGInOut):

    def __init__(self,
                 sign_matrix,        # [N, N] symmetric, entries in {-1, 0, +1}, zero diagonal
                 labels=None,        # Optional N distinct display labels
                 ):
        '''
        Immutable simple signed graph on vertices 0..N-1.
        Every operation returning a graph builds a new instance.

        Use the following to build graphs.

        1. `build_graph` or `SignedGraph.from_edges` defined in
           `src/signed_graph_gears/constructor.py` from an edge list.

        2. `SignedGraph.load` defined in `src/signed_graph_gears/io.py`
           from a graph file.
        '''
        mat = np.array(sign_matrix, dtype=np.int8, copy=True)
        if mat.size == 0:
            mat = np.zeros((0, 0), dtype=np.int8)
        if mat.ndim != 2 or mat.shape[0] != mat.shape[1]:
            raise GraphStructureError(f"Sign matrix must be square, got shape {mat.shape}.")
        if not np.isin(mat, (-1, 0, 1)).all():
            raise GraphStructureError("Sign matrix entries must be -1, 0 or +1.")
        if np.any(np.diag(mat) != 0):
            raise GraphStructureError("Loops are not allowed.")
        if not np.array_equal(mat, mat.T):
            raise GraphStructureError("Sign matrix must be symmetric.")
        mat.flags.writeable = False
        self._sign = mat

        n = mat.shape[0]
        if labels is not None:
            labels = tuple(str(l) for l in labels)
            if len(labels) != n:
                raise GraphStructureError(f"Expected {n} labels, got {len(labels)}.")
            if len(set(labels)) != n:
                raise GraphStructureError("Vertex labels must be distinct.")
        self._labels = labels

        # Bitset adjacency per sign, bit u of row v set iff uv carries the sign
        self._pos_bits = tuple(self._row_bits(mat[v] == 1) for v in range(n))
        self._neg_bits = tuple(self._row_bits(mat[v] == -1) for v in range(n))

        # Lazily computed derived data (canonical labelings, components)
        self._derived = {}

    @staticmethod
    def _row_bits(mask):
        bits = 0
        for u in np.flatnonzero(mask).tolist():
            bits |= 1 << u
        return bits

    def __eq__(self, other):
        if not isinstance(other, SignedGraph):
            return NotImplemented
        return (
            self.order == other.order and
            np.array_equal(self._sign, other._sign) and
            self._labels == other._labels)

    def __hash__(self):
        return hash((self.order, self._sign.tobytes(), self._labels))

    def __repr__(self):
        return (f"SignedGraph(order={self.order}, edges={self.num_edges}, "
                f"negative={self.num_negative_edges})")


def build_graph(order, edges, labels=None):
    return SignedGraph.from_edges(order, edges, labels=labels)


def switch(g, vertex_set):
    return g.switch(vertex_set)


def walk_sign(g, walk):
    return g.walk_sign(walk)


def is_switch_equivalent(g1, g2):
    return g1.is_switch_equivalent(g2)


def double_switching(g):
    return g.double_switching()


def forced_distinct_pairs(g):
    return g.forced_distinct_pairs()


def sp_isomorphic(g1, g2):
    return g1.sp_isomorphic(g2)


def signed_isomorphic(g1, g2):
    return g1.signed_isomorphic(g2)


def canonical_key(g, mode='sp'):
    return g.canonical_key(mode)


def neighbors(g, v, sign_filter=None):
    return g.neighbors(v, sign_filter)


def girth(g):
    return g.girth()


__all__ = [
    'SignedGraph', 'Sign', 'build_graph', 'switch', 'walk_sign', 'is_switch_equivalent',
    'double_switching', 'forced_distinct_pairs', 'sp_isomorphic', 'signed_isomorphic',
    'canonical_key', 'neighbors', 'girth',
]
