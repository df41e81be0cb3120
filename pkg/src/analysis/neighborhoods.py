# Copyright (c) 2025, sghom developers.  All rights reserved.
#
# Use of this source code is governed by an MIT-style license that can be
# found in the LICENSE file at the root of this source tree.

import itertools

from src.signs import Sign, SignVector, SIGNS
from src.exceptions import GraphStructureError


def _bits_to_set(bits):
    out = set()
    while bits:
        low = bits & -bits
        bits ^= low
        out.add(low.bit_length() - 1)
    return frozenset(out)


def _alpha_bits(t, vertices, alphas):
    bits = (1 << t.order) - 1
    for v, a in zip(vertices, alphas):
        bits &= t.neighbor_bits(v, a)
    return bits


def alpha_neighborhood(t, vertices, alphas):
    '''
    Common neighbours w with sign(v_i, w) = alpha_i for every i.
    '''
    vertices = [t.check_vertex(v) for v in vertices]
    alphas = SignVector(alphas)
    if len(vertices) != len(alphas):
        raise GraphStructureError(
            f"Got {len(vertices)} vertices but {len(alphas)} signs.")
    if len(set(vertices)) != len(vertices):
        raise GraphStructureError("Vertices of an alpha-neighbourhood must be distinct.")
    return _bits_to_set(_alpha_bits(t, vertices, alphas))


def hat_neighborhood(t, vertices, alphas):
    '''
    Union of the alpha- and (-alpha)-neighbourhoods.
    '''
    alphas = SignVector(alphas)
    return alpha_neighborhood(t, vertices, alphas) | alpha_neighborhood(t, vertices, -alphas)


def _check_kl(t, k, l):
    if k < 1:
        raise ValueError(f"k must be >= 1, got {k}.")
    if l < 0:
        raise ValueError(f"l must be >= 0, got {l}.")
    if k > t.order:
        raise ValueError(f"k must not exceed the order {t.order}, got {k}.")


def property_P_violation(t, k, l, hat=False):
    '''
    First (vertices, signs) whose (hat) neighbourhood has fewer than l
    vertices, or None. Distinct vertices are taken as sorted k-subsets: an
    ordered tuple and its signs permuted together give the same set.
    '''
    _check_kl(t, k, l)
    for vertices in itertools.combinations(range(t.order), k):
        for alphas in itertools.product(SIGNS, repeat=k):
            bits = _alpha_bits(t, vertices, alphas)
            if hat:
                bits |= _alpha_bits(t, vertices, [-a for a in alphas])
            if bin(bits).count('1') < l:
                return vertices, SignVector(alphas)
    return None


def has_property_P(t, k, l):
    return property_P_violation(t, k, l) is None


def has_property_Phat(t, k, l):
    return property_P_violation(t, k, l, hat=True) is None


def agrees_on(t, u, v, w):
    '''
    True iff uw and vw carry the same sign.
    '''
    su, sv = t.sign(u, w), t.sign(v, w)
    if su is None or sv is None:
        raise GraphStructureError(f"Vertex {w} is not a common neighbour of {u} and {v}.")
    return su is sv


def induced_signed_subgraph(t, vertex_set):
    '''
    Subgraph induced on the vertex set, renumbered in increasing id order.
    Labels are kept.
    '''
    members = sorted(t.check_vertex_set(vertex_set))
    return t.induced_subgraph(members)


def sign_degree_vector(t):
    return [(t.degree(v, Sign.POS), t.degree(v, Sign.NEG)) for v in range(t.order)]


def common_neighborhood_sizes(t):
    '''
    Minimum over edges uv and sign pairs (alpha, beta) of the size of the
    (alpha, beta)-neighbourhood of (u, v); None for edgeless graphs.
    '''
    best = None
    for u, v, _ in t.edges():
        for alpha in SIGNS:
            for beta in SIGNS:
                size = bin(_alpha_bits(t, (u, v), (alpha, beta))).count('1')
                best = size if best is None else min(best, size)
    return best
