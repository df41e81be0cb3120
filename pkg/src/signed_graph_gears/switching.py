# Copyright (c) 2025, sghom developers.  All rights reserved.
#
# Use of this source code is governed by an MIT-style license that can be
# found in the LICENSE file at the root of this source tree.

import numpy as np

from src.signs import Sign
from src.exceptions import InvalidWalkError, UnderlyingGraphMismatch


def anti_twin(v, order):
    '''
    Anti-twin of vertex v in the double switching graph of an order-N graph.
    Originals are 0..N-1 and their twins N..2N-1.
    '''
    return (v + order) % (2 * order)


class SGSwitching:

    def switch(self, vertex_set):
        '''
        Flip the sign of every edge with exactly one endpoint in vertex_set.
        '''
        members = self.check_vertex_set(vertex_set)
        flip = np.ones(self.order, dtype=np.int8)
        flip[list(members)] = -1
        mat = self._sign * np.outer(flip, flip).astype(np.int8)
        return type(self)(mat, labels=self._labels)

    def walk_sign(self, walk):
        walk = [self.check_vertex(v) for v in walk]
        if len(walk) == 0:
            raise InvalidWalkError("Walk must visit at least one vertex.")
        if walk[0] != walk[-1]:
            raise InvalidWalkError(f"Walk {walk} is not closed.")
        negatives = 0
        for u, v in zip(walk[:-1], walk[1:]):
            s = self._sign[u, v]
            if s == 0:
                raise InvalidWalkError(f"Vertices {u} and {v} are not adjacent.")
            negatives += int(s == -1)
        return Sign.POS if negatives % 2 == 0 else Sign.NEG

    def switching_normal_form(self):
        '''
        Switch so every edge of the breadth-first spanning forest is positive.
        Roots are never switched.

        Output:
            @graph:       the normalized graph
            @switch_set:  frozenset of switched vertices
        '''
        flip = [1] * self.order
        for parent, child in self.bfs_forest():
            flip[child] = flip[parent] * int(self._sign[parent, child])
        switch_set = frozenset(v for v in range(self.order) if flip[v] == -1)
        return self.switch(switch_set), switch_set

    def is_switch_equivalent(self, other):
        if not self.same_underlying(other):
            raise UnderlyingGraphMismatch(
                "Switching equivalence needs graphs with the same underlying graph.")
        return self.switching_witness(other) is not None

    def switching_witness(self, other):
        '''
        A vertex set S with switch(self, S) == other (signs only), or None.
        '''
        if not self.same_underlying(other):
            raise UnderlyingGraphMismatch(
                "Switching equivalence needs graphs with the same underlying graph.")
        # Both normal forms share the spanning forest, since it ignores signs.
        norm1, s1 = self.switching_normal_form()
        norm2, s2 = other.switching_normal_form()
        if not np.array_equal(norm1.sign_matrix, norm2.sign_matrix):
            return None
        return s1 ^ s2

    def double_switching(self):
        '''
        Double switching graph: each vertex v gets an anti-twin at v + N with
        the opposite sign on every edge, and no edge to v itself.
        '''
        n = self.order
        mat = np.block([[self._sign, -self._sign], [-self._sign, self._sign]]).astype(np.int8)
        labels = list(self.labels) + [f"{lab}^" for lab in self.labels]
        return type(self)(mat, labels=labels)

    def is_double_switching_graph(self):
        '''
        True iff v -> v + N/2 is a fixed-point-free involution with no edge
        v, v^ and opposite signs, i.e. the graph is D(G) for its first half.
        '''
        if self.order % 2:
            return False
        half = self.order // 2
        block = self._sign[:half, :half]
        expected = np.block([[block, -block], [-block, block]])
        return np.array_equal(self._sign, expected)
