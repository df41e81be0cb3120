# Copyright (c) 2025, sghom developers.  All rights reserved.
#
# Use of this source code is governed by an MIT-style license that can be
# found in the LICENSE file at the root of this source tree.

import itertools
import threading
from dataclasses import dataclass
from typing import Tuple

import numpy as np
from tqdm import tqdm

from src.signs import SIGNS, POS
from src.exceptions import CatalogCapError, GraphStructureError
from src.signed_graph_model import SignedGraph
from src.signed_graph_gears.isomorphism import check_mode
from src.utils.system_utils import ordered_parallel_map

MAX_ORDER_SP = 7
MAX_ORDER_SIGNED = 6
POLICIES = ('all', 'complete')


def enumerate_signatures_mod_switching(g):
    '''
    One signature per switching class of the underlying graph of g: the
    breadth-first spanning forest is positive and the non-tree edges take
    every sign pattern, '+' first.
    '''
    tree = {(min(u, v), max(u, v)) for u, v in g.bfs_forest()}
    edges = sorted(g.underlying_edges())
    free = [e for e in edges if e not in tree]
    for pattern in itertools.product(SIGNS, repeat=len(free)):
        signs = dict(zip(free, pattern))
        yield SignedGraph.from_edges(
            g.order, [(u, v, signs.get((u, v), POS)) for u, v in edges],
            labels=g.labels if g.has_labels else None)


def enumerate_all_signatures(g):
    edges = sorted(g.underlying_edges())
    for pattern in itertools.product(SIGNS, repeat=len(edges)):
        yield SignedGraph.from_edges(g.order, [(u, v, s) for (u, v), s in zip(edges, pattern)])


@dataclass(frozen=True)
class TargetCatalog:
    '''
    Representatives of all signed graphs of one order, up to sp-isomorphism
    (mode sp) or signed isomorphism (mode signed), sorted by canonical key.
    '''
    order: int
    mode: str
    policy: str
    graphs: Tuple[SignedGraph, ...]
    keys: Tuple[bytes, ...]

    def __len__(self):
        return len(self.graphs)

    def __iter__(self):
        return iter(self.graphs)

    def __getitem__(self, i):
        return self.graphs[i]


def connection_patterns(n, mode, policy):
    '''
    Sign rows joining a new vertex to n existing ones. In signed mode a
    pattern and its negation are switching-equivalent, so only patterns whose
    first nonzero entry is positive are kept.
    '''
    values = (1, -1) if policy == 'complete' else (0, 1, -1)
    for pattern in itertools.product(values, repeat=n):
        if mode == 'signed':
            nonzero = [s for s in pattern if s != 0]
            if nonzero and nonzero[0] == -1:
                continue
        yield pattern


def extend(g, pattern):
    n = g.order
    mat = np.zeros((n + 1, n + 1), dtype=np.int8)
    mat[:n, :n] = g.sign_matrix
    mat[n, :n] = mat[:n, n] = pattern
    return SignedGraph(mat)


def _check_cap(order, mode, max_order):
    cap = max_order
    if cap is None:
        cap = MAX_ORDER_SP if mode == 'sp' else MAX_ORDER_SIGNED
    if order > cap:
        raise CatalogCapError(
            f"Target catalog of order {order} exceeds the {mode} cap {cap}; pass a larger max_order to override.")


_CATALOGS = {}
_CATALOG_LOCK = threading.Lock()


def _catalog(order, mode, policy, n_workers=1, verbose=False):
    with _CATALOG_LOCK:
        if (order, mode, policy) in _CATALOGS:
            return _CATALOGS[(order, mode, policy)]
    if order <= 1:
        g = SignedGraph.empty(order)
        catalog = TargetCatalog(order, mode, policy, (g,), (g.canonical_key(mode),))
    else:
        catalog = _augment(order, mode, policy, n_workers, verbose)
    with _CATALOG_LOCK:
        return _CATALOGS.setdefault((order, mode, policy), catalog)


def _augment(order, mode, policy, n_workers, verbose):
    parents = _catalog(order - 1, mode, policy, n_workers, verbose)
    patterns = list(connection_patterns(order - 1, mode, policy))

    def children(parent):
        out = []
        for pattern in patterns:
            child = extend(parent, pattern)
            out.append((child.canonical_key(mode), child))
        return out

    desc = f"Catalog order {order} ({mode}, {policy})"
    if n_workers <= 1:
        batches = (children(p) for p in tqdm(parents.graphs, desc=desc, disable=not verbose))
    else:
        batches = ordered_parallel_map(children, parents.graphs, n_workers=n_workers)

    seen = {}
    for batch in batches:
        for key, child in batch:
            if key not in seen:
                seen[key] = child
    keys = tuple(sorted(seen))
    return TargetCatalog(order, mode, policy, tuple(seen[k] for k in keys), keys)


def enumerate_targets(order, mode='sp', policy='all', max_order=None, n_workers=1, verbose=False):
    check_mode(mode)
    if policy not in POLICIES:
        raise ValueError(f"Unknown catalog policy {policy!r}, expected one of {POLICIES}.")
    if order < 0:
        raise ValueError(f"Order must be non-negative, got {order}.")
    _check_cap(order, mode, max_order)
    return _catalog(order, mode, policy, n_workers, verbose)


def complete_targets(order, mode='sp', max_order=None, n_workers=1, verbose=False):
    return enumerate_targets(order, mode, policy='complete', max_order=max_order,
                             n_workers=n_workers, verbose=verbose)


def _unsigned_key(adj):
    n = len(adj)
    mat = np.zeros((n, n), dtype=np.int8)
    for v, row in enumerate(adj):
        for u in row:
            mat[v, u] = 1
    return SignedGraph(mat).canonical_key('sp'), mat


def enumerate_cubic_graphs(n, verbose=False):
    '''
    All connected 3-regular graphs on n vertices up to isomorphism, sorted by
    canonical key.

    States are a connected core plus isolated fresh vertices. Each step
    saturates one deficit core vertex of maximum degree with every choice of
    partners among the other deficit core vertices and the lowest fresh
    vertices. States are deduplicated up to isomorphism.
    '''
    if n % 2 or n < 4:
        raise GraphStructureError(f"Connected cubic graphs need an even order >= 4, got {n}.")

    found = {}
    seen = set()
    start = [set() for _ in range(n)]
    start[0] = {1, 2, 3}
    for v in (1, 2, 3):
        start[v] = {0}
    stack = [start]
    progress = tqdm(desc=f"Cubic graphs on {n} vertices", disable=not verbose)
    while stack:
        adj = stack.pop()
        key, mat = _unsigned_key(adj)
        if key in seen:
            continue
        seen.add(key)
        progress.update(1)

        degrees = [len(row) for row in adj]
        core = [v for v in range(n) if degrees[v] > 0]
        fresh = [v for v in range(n) if degrees[v] == 0]
        deficit = [v for v in core if degrees[v] < 3]
        if not deficit:
            if not fresh:
                found[key] = SignedGraph(mat)
            continue

        v = max(deficit, key=lambda u: (degrees[u], -u))
        need = 3 - degrees[v]
        partners = [u for u in deficit if u != v and u not in adj[v]]
        for n_fresh in range(need + 1):
            if n_fresh > len(fresh):
                break
            for combo in itertools.combinations(partners, need - n_fresh):
                child = [set(row) for row in adj]
                for u in list(combo) + fresh[:n_fresh]:
                    child[v].add(u)
                    child[u].add(v)
                stack.append(child)
    progress.close()
    for key in sorted(found):
        yield found[key]
