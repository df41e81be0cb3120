# Copyright (c) 2025, sghom developers.  All rights reserved.
#
# Use of this source code is governed by an MIT-style license that can be
# found in the LICENSE file at the root of this source tree.

import numpy as np
import networkx as nx

from src.signs import Sign, POS
from src.exceptions import GraphStructureError


class SGConstructor:

    @classmethod
    def from_edges(cls,
                   order,          # Number of vertices
                   edges,          # Iterable of (u, v, sign)
                   labels=None,    # Optional display labels
                   ):
        if int(order) < 0:
            raise GraphStructureError(f"Order must be non-negative, got {order}.")
        order = int(order)
        mat = np.zeros((order, order), dtype=np.int8)
        for edge in edges:
            if len(edge) != 3:
                raise GraphStructureError(f"Edge must be (u, v, sign), got {edge!r}.")
            u, v, s = edge
            u, v = int(u), int(v)
            if not (0 <= u < order and 0 <= v < order):
                raise GraphStructureError(f"Edge {u}{v} has an endpoint outside 0..{order - 1}.")
            if u == v:
                raise GraphStructureError(f"Loop at vertex {u} is not allowed.")
            if mat[u, v] != 0:
                raise GraphStructureError(f"Duplicate edge {min(u, v)}{max(u, v)}.")
            try:
                s = Sign.parse(s)
            except ValueError as e:
                raise GraphStructureError(str(e)) from e
            mat[u, v] = mat[v, u] = int(s)
        return cls(mat, labels=labels)

    @classmethod
    def empty(cls, order, labels=None):
        return cls(np.zeros((order, order), dtype=np.int8), labels=labels)

    @classmethod
    def complete(cls, order, sign=POS, labels=None):
        mat = np.full((order, order), int(Sign.parse(sign)), dtype=np.int8)
        np.fill_diagonal(mat, 0)
        return cls(mat, labels=labels)

    @classmethod
    def from_networkx(cls, graph, sign_attr='sign'):
        '''
        Nodes are taken in sorted order when sortable; missing signs are positive.
        '''
        try:
            nodes = sorted(graph.nodes())
        except TypeError:
            nodes = list(graph.nodes())
        index = {node: i for i, node in enumerate(nodes)}
        edges = [
            (index[a], index[b], data.get(sign_attr, POS))
            for a, b, data in graph.edges(data=True)]
        return cls.from_edges(len(nodes), edges, labels=[str(node) for node in nodes])

    def to_networkx(self, sign_attr='sign'):
        graph = nx.Graph()
        graph.add_nodes_from(range(self.order))
        for u, v, s in self.edges():
            graph.add_edge(u, v, **{sign_attr: int(s)})
        return graph

    def relabel(self, perm):
        '''
        Isomorphic copy where vertex v becomes perm[v]. Labels travel with vertices.
        '''
        perm = np.asarray(perm, dtype=np.int64)
        n = self.order
        if perm.shape != (n,) or sorted(perm.tolist()) != list(range(n)):
            raise GraphStructureError("perm must be a permutation of 0..N-1.")
        inv = np.argsort(perm)
        mat = self.sign_matrix[np.ix_(inv, inv)]
        labels = None
        if self._labels is not None:
            labels = [self._labels[v] for v in inv.tolist()]
        return type(self)(mat, labels=labels)

    def with_labels(self, labels):
        return type(self)(self.sign_matrix, labels=labels)

    def without_labels(self):
        return type(self)(self.sign_matrix)

    def with_edge(self, u, v, sign):
        if self._sign[u, v] != 0 or u == v:
            raise GraphStructureError(f"Cannot add edge {u}{v}.")
        mat = self.sign_matrix.copy()
        mat[u, v] = mat[v, u] = int(Sign.parse(sign))
        return type(self)(mat, labels=self._labels)

    def add_vertices(self, count, labels=None):
        '''
        Append isolated vertices count times; new labels default to their ids.
        '''
        n = self.order
        mat = np.zeros((n + count, n + count), dtype=np.int8)
        mat[:n, :n] = self._sign
        new_labels = None
        if self._labels is not None or labels is not None:
            extra = list(labels) if labels is not None else [str(v) for v in range(n, n + count)]
            new_labels = list(self.labels) + extra
        return type(self)(mat, labels=new_labels)

    def induced_subgraph(self, vertices):
        '''
        Subgraph induced on the listed vertices, renumbered in the given order.
        '''
        vertices = [self.check_vertex(v) for v in vertices]
        if len(set(vertices)) != len(vertices):
            raise GraphStructureError("Repeated vertex in induced_subgraph.")
        mat = self._sign[np.ix_(vertices, vertices)] if vertices else np.zeros((0, 0), np.int8)
        labels = None if self._labels is None else [self._labels[v] for v in vertices]
        return type(self)(mat, labels=labels)
