# Copyright (c) 2025, sghom developers.  All rights reserved.
#
# Use of this source code is governed by an MIT-style license that can be
# found in the LICENSE file at the root of this source tree.

import numpy as np

from src.exceptions import FieldOrderError
from src.signed_graph_model import SignedGraph
from src.generators.finite_field import make_field

INF_LABEL = 'inf'


def paley(q):
    '''
    Signed Paley graph SP_q: complete on GF(q), uv positive iff u - v is a
    nonzero square. Vertex v is the field element encoded by v.
    '''
    field = make_field(q)
    if q % 4 != 1:
        raise FieldOrderError(f"Signed Paley graphs need q = 1 mod 4, got {q}.")
    diff = field.add_table[:, field.neg_table]
    is_square = np.isin(diff, list(field.squares))
    mat = np.where(is_square, 1, -1).astype(np.int8)
    np.fill_diagonal(mat, 0)
    return SignedGraph(mat, labels=[str(v) for v in range(q)])


def paley_plus(q):
    '''
    SP_q plus a vertex `inf` (the last vertex) joined positively to all others.
    '''
    base = paley(q)
    mat = np.ones((q + 1, q + 1), dtype=np.int8)
    mat[:q, :q] = base.sign_matrix
    mat[q, q] = 0
    return SignedGraph(mat, labels=list(base.labels) + [INF_LABEL])


def paley_plus_double(q):
    return paley_plus(q).double_switching()


def infinity_vertex(q):
    return q
