# Copyright (c) 2025, sghom developers.  All rights reserved.
#
# Use of this source code is governed by an MIT-style license that can be
# found in the LICENSE file at the root of this source tree.

import itertools
from collections import deque
from dataclasses import dataclass
from typing import FrozenSet

from src.signs import POS
from src.exceptions import UnknownNameError
from src.signed_graph_model import SignedGraph


@dataclass(frozen=True)
class ConfigPattern:
    '''
    Unsigned pattern graph. Black vertices have their whole neighbourhood in
    the pattern; white vertices are boundary vertices.
    '''
    name: str
    graph: SignedGraph
    black: FrozenSet[int]

    @property
    def white(self):
        return frozenset(range(self.graph.order)) - self.black


def _pattern(name, order, edges, black):
    # Vertices are numbered from 1 as v1, v2, ...
    graph = SignedGraph.from_edges(
        order, [(u - 1, v - 1, POS) for u, v in edges],
        labels=[f"v{i}" for i in range(1, order + 1)])
    return ConfigPattern(name, graph, frozenset(b - 1 for b in black))


CONFIG_PATTERNS = {
    'a': _pattern('a', 6,
                  [(1, 3), (3, 5), (3, 6), (5, 6), (5, 4), (6, 4), (4, 2)],
                  [3, 4, 5, 6]),
    'b': _pattern('b', 6,
                  [(4, 5), (5, 6), (4, 6), (1, 4), (2, 5), (3, 6)],
                  [4, 5, 6]),
    'c': _pattern('c', 8,
                  [(5, 6), (6, 7), (7, 8), (5, 8), (1, 5), (2, 6), (3, 7), (4, 8)],
                  [5, 6, 7, 8]),
    'd': _pattern('d', 14,
                  [(9, 14), (14, 12), (10, 13), (13, 11), (14, 13),
                   (9, 1), (9, 2), (12, 8), (12, 7), (10, 3), (10, 4), (11, 6), (11, 5)],
                  [9, 14, 12, 10, 13, 11]),
}


def config_pattern(name):
    if name not in CONFIG_PATTERNS:
        raise UnknownNameError(f"Unknown configuration {name!r}; known: {', '.join(sorted(CONFIG_PATTERNS))}.")
    return CONFIG_PATTERNS[name]


def _black_order(pattern):
    # Breadth-first over black vertices, so each black after the first is
    # usually a pattern neighbour of an earlier vertex.
    black = sorted(pattern.black)
    order, seen = [], set()
    for root in black:
        if root in seen:
            continue
        seen.add(root)
        queue = deque([root])
        while queue:
            b = queue.popleft()
            order.append(b)
            for u in sorted(pattern.graph.neighbors(b)):
                if u in pattern.black and u not in seen:
                    seen.add(u)
                    queue.append(u)
    return order


def find_configuration(g, pattern):
    '''
    A map of the pattern into the underlying graph of g, or None. Black images
    are distinct and never shared with white images; for every black b the
    pattern neighbours of b map bijectively onto N(f(b)). White images may
    coincide.

    Output:
        @image:  dict pattern vertex -> vertex of g
    '''
    p = pattern.graph
    blacks = _black_order(pattern)
    image = {}
    black_images = set()
    white_count = {}

    def can_take(z, t):
        if z in pattern.black:
            return t not in black_images and t not in white_count
        return t not in black_images

    def assign(z, t, trail):
        image[z] = t
        if z in pattern.black:
            black_images.add(t)
        else:
            white_count[t] = white_count.get(t, 0) + 1
        trail.append(z)

    def undo(trail):
        for z in reversed(trail):
            t = image.pop(z)
            if z in pattern.black:
                black_images.discard(t)
            else:
                white_count[t] -= 1
                if white_count[t] == 0:
                    del white_count[t]
        trail.clear()

    def neighbourhood_maps(b, t, trail):
        # Every bijection of N_p(b) onto N_g(t) consistent with `image`.
        nbrs = sorted(p.neighbors(b))
        targets = sorted(g.neighbors(t))
        if len(nbrs) != len(targets):
            return
        for perm in itertools.permutations(targets):
            ok = True
            for z, s in zip(nbrs, perm):
                if z in image:
                    if image[z] != s:
                        ok = False
                        break
                elif not can_take(z, s):
                    ok = False
                    break
                else:
                    assign(z, s, trail)
            if ok:
                yield
            undo(trail)

    def search(i):
        if i == len(blacks):
            return True
        b = blacks[i]
        candidates = [image[b]] if b in image else [
            t for t in range(g.order) if can_take(b, t)]
        for t in candidates:
            trail = []
            if b not in image:
                assign(b, t, trail)
            for _ in neighbourhood_maps(b, t, []):
                if search(i + 1):
                    return True
            undo(trail)
        return False

    if search(0):
        return dict(image)
    return None


def contains_any_configuration(g, names=('a', 'b', 'c', 'd')):
    for name in names:
        found = find_configuration(g, config_pattern(name))
        if found is not None:
            return name, found
    return None
