# Copyright (c) 2025, sghom developers.  All rights reserved.
#
# Use of this source code is governed by an MIT-style license that can be
# found in the LICENSE file at the root of this source tree.

import networkx as nx

from src.exceptions import SizeCapError

MINOR_MAX_ORDER = 12
MINOR_MAX_CLIQUE = 6


def connected_sets(root, allowed, nbr):
    '''
    Every connected vertex set containing root inside `allowed`, as bitmasks,
    each produced once: the lowest extension vertex is either taken or
    excluded for good.
    '''
    def grow(current, ext, excluded):
        yield current
        while ext:
            low = ext & -ext
            ext ^= low
            v = low.bit_length() - 1
            nxt = current | low
            new_ext = (ext | (nbr[v] & allowed)) & ~nxt & ~excluded
            yield from grow(nxt, new_ext, excluded)
            excluded |= low

    start = 1 << root
    yield from grow(start, nbr[root] & allowed & ~start, 0)


def has_clique_minor(g, n):
    '''
    True iff K_n is a minor of the underlying graph: n disjoint connected
    branch sets, pairwise joined by an edge. Branch sets are ordered by
    their least vertex.
    '''
    if g.order > MINOR_MAX_ORDER:
        raise SizeCapError(f"has_clique_minor supports at most {MINOR_MAX_ORDER} vertices, got {g.order}.")
    if n > MINOR_MAX_CLIQUE:
        raise SizeCapError(f"has_clique_minor supports K_n with n <= {MINOR_MAX_CLIQUE}, got {n}.")
    if n <= 0:
        return True
    if n == 1:
        return g.order >= 1
    if n == 2:
        return g.num_edges >= 1
    if n == 3:
        return g.num_edges > g.order - len(g.components())
    if g.order < n or g.num_edges < n * (n - 1) // 2:
        return False
    if any(len(c) >= n for c in nx.find_cliques(g.to_networkx())):
        return True

    size = g.order
    nbr = [g.neighbor_bits(v) for v in range(size)]
    full = (1 << size) - 1

    def touches(a, b):
        v_bits = a
        while v_bits:
            low = v_bits & -v_bits
            v_bits ^= low
            if nbr[low.bit_length() - 1] & b:
                return True
        return False

    def search(chosen, used, min_root):
        if len(chosen) == n:
            return True
        remaining = n - len(chosen)
        for root in range(min_root, size):
            if (used >> root) & 1:
                continue
            if size - root < remaining:
                break
            allowed = full & ~used & ~((1 << root) - 1)
            for branch in connected_sets(root, allowed, nbr):
                if all(touches(branch, other) for other in chosen):
                    if search(chosen + [branch], used | branch, root + 1):
                        return True
        return False

    return search([], 0, 0)
