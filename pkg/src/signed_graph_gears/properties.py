# Copyright (c) 2025, sghom developers.  All rights reserved.
#
# Use of this source code is governed by an MIT-style license that can be
# found in the LICENSE file at the root of this source tree.

import math
import operator

import networkx as nx

from src.signs import Sign
from src.exceptions import GraphStructureError


class SGProperties:

    @property
    def order(self):
        return self._sign.shape[0]

    @property
    def sign_matrix(self):
        return self._sign

    @property
    def labels(self):
        if self._labels is None:
            return tuple(str(v) for v in range(self.order))
        return self._labels

    @property
    def has_labels(self):
        return self._labels is not None

    @property
    def num_edges(self):
        return int((self._sign != 0).sum()) // 2

    @property
    def num_negative_edges(self):
        return int((self._sign == -1).sum()) // 2

    @property
    def num_positive_edges(self):
        return int((self._sign == 1).sum()) // 2

    def label(self, v):
        return self.labels[self.check_vertex(v)]

    def vertex_of(self, label):
        try:
            return self.labels.index(str(label))
        except ValueError:
            raise KeyError(f"No vertex labelled {label!r}.") from None

    def check_vertex(self, v):
        try:
            v = operator.index(v)
        except TypeError:
            raise GraphStructureError(f"Vertex must be an integer, got {v!r}.") from None
        if not 0 <= v < self.order:
            raise GraphStructureError(f"Vertex {v} outside 0..{self.order - 1}.")
        return v

    def check_vertex_set(self, vertices):
        return frozenset(self.check_vertex(v) for v in vertices)

    def sign(self, u, v):
        s = int(self._sign[self.check_vertex(u), self.check_vertex(v)])
        return None if s == 0 else Sign(s)

    def adjacent(self, u, v):
        return self._sign[self.check_vertex(u), self.check_vertex(v)] != 0

    def edges(self):
        '''
        All edges as (u, v, Sign) with u < v, in lexicographic order.
        '''
        n = self.order
        return [
            (u, v, Sign(int(self._sign[u, v])))
            for u in range(n) for v in range(u + 1, n)
            if self._sign[u, v] != 0]

    def underlying_edges(self):
        return frozenset((u, v) for u, v, _ in self.edges())

    def same_underlying(self, other):
        return (self.order == other.order and
                ((self._sign != 0) == (other._sign != 0)).all())

    def neighbor_bits(self, v, sign_filter=None):
        v = self.check_vertex(v)
        if sign_filter is None:
            return self._pos_bits[v] | self._neg_bits[v]
        return self._pos_bits[v] if Sign.parse(sign_filter) is Sign.POS else self._neg_bits[v]

    def neighbors(self, v, sign_filter=None):
        bits = self.neighbor_bits(v, sign_filter)
        return frozenset(u for u in range(self.order) if (bits >> u) & 1)

    def degree(self, v, sign_filter=None):
        return bin(self.neighbor_bits(v, sign_filter)).count('1')

    def degrees(self):
        return [self.degree(v) for v in range(self.order)]

    @property
    def max_degree(self):
        return max(self.degrees(), default=0)

    def is_complete(self):
        n = self.order
        return self.num_edges == n * (n - 1) // 2

    def underlying_networkx(self):
        if 'networkx' not in self._derived:
            self._derived['networkx'] = self.to_networkx()
        return self._derived['networkx']

    def components(self):
        '''
        Connected components as sorted vertex lists, ordered by least vertex.
        '''
        if 'components' not in self._derived:
            comps = [sorted(c) for c in nx.connected_components(self.underlying_networkx())]
            self._derived['components'] = sorted(comps, key=lambda c: c[0])
        return self._derived['components']

    def is_connected(self):
        return len(self.components()) <= 1

    def bfs_forest(self):
        '''
        Breadth-first spanning forest, rooted at the least vertex of each
        component, neighbours visited in increasing order.
        Output:
            list of (parent, child) tree edges
        '''
        graph = self.underlying_networkx()
        return [
            edge for comp in self.components()
            for edge in nx.bfs_edges(graph, comp[0], sort_neighbors=sorted)]

    def girth(self):
        '''
        Length of a shortest cycle, math.inf for forests.
        '''
        g = nx.girth(self.underlying_networkx())
        return math.inf if g == math.inf else int(g)

    def is_bipartite(self):
        return nx.is_bipartite(self.underlying_networkx())

    def forced_distinct_pairs(self):
        '''
        Pairs {u, v} that no homomorphism may identify: adjacent pairs, and
        pairs joined by a positive and a negative 2-path.
        Output:
            frozenset of (u, v) with u < v
        '''
        n = self.order
        pairs = set()
        for u in range(n):
            for v in range(u + 1, n):
                if self._sign[u, v] != 0:
                    pairs.add((u, v))
                    continue
                # 2-path u-w-v is positive iff both edges carry the same sign
                same = (self._pos_bits[u] & self._pos_bits[v]) | (self._neg_bits[u] & self._neg_bits[v])
                diff = (self._pos_bits[u] & self._neg_bits[v]) | (self._neg_bits[u] & self._pos_bits[v])
                if same and diff:
                    pairs.add((u, v))
        return frozenset(pairs)
