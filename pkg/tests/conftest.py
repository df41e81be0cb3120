# Copyright (c) 2025, sghom developers.  All rights reserved.
#
# Use of this source code is governed by an MIT-style license that can be
# found in the LICENSE file at the root of this source tree.

import itertools

import numpy as np
import pytest
from hypothesis import strategies as st

from src.config import reset_config
from src.signed_graph_model import SignedGraph


@st.composite
def signed_graphs(draw, min_order=0, max_order=6, density=None):
    n = draw(st.integers(min_order, max_order))
    mat = np.zeros((n, n), dtype=np.int8)
    entries = st.sampled_from([0, 1, -1]) if density is None else st.sampled_from([1, -1])
    for u in range(n):
        for v in range(u + 1, n):
            if density is not None and not draw(st.booleans()):
                continue
            s = draw(entries)
            mat[u, v] = mat[v, u] = s
    return SignedGraph(mat)


@st.composite
def graphs_with_subset(draw, **kwargs):
    g = draw(signed_graphs(**kwargs))
    subset = draw(st.sets(st.integers(0, max(g.order - 1, 0)), max_size=g.order)) if g.order else set()
    return g, subset


@st.composite
def graphs_with_permutation(draw, **kwargs):
    g = draw(signed_graphs(**kwargs))
    perm = draw(st.permutations(list(range(g.order))))
    return g, perm


def brute_sp_isomorphic(g1, g2):
    if g1.order != g2.order:
        return False
    m1, m2 = g1.sign_matrix, g2.sign_matrix
    for perm in itertools.permutations(range(g1.order)):
        p = list(perm)
        # vertex v of g1 -> p[v] of g2
        if np.array_equal(m1, m2[np.ix_(p, p)]):
            return True
    return False


def brute_signed_isomorphic(g1, g2):
    # Some switching of g1 followed by a bijection onto g2.
    if g1.order != g2.order:
        return False
    for flips in itertools.product((1, -1), repeat=g1.order):
        f = np.array(flips, dtype=np.int8)
        if brute_sp_isomorphic(SignedGraph(g1.sign_matrix * np.outer(f, f)), g2):
            return True
    return False


def brute_switch_equivalent(g1, g2):
    n = g1.order
    for flips in itertools.product((1, -1), repeat=n):
        f = np.array(flips, dtype=np.int8)
        if np.array_equal(g1.sign_matrix * np.outer(f, f), g2.sign_matrix):
            return True
    return False


def positive_cycle(n):
    return SignedGraph.from_edges(n, [(i, (i + 1) % n, 1) for i in range(n)])


def positive_path(n):
    return SignedGraph.from_edges(n, [(i, i + 1, 1) for i in range(n - 1)])


@pytest.fixture(autouse=True)
def fresh_config(monkeypatch):
    monkeypatch.delenv('SG_THREADS', raising=False)
    monkeypatch.delenv('SG_CACHE', raising=False)
    reset_config()
    yield
    reset_config()
