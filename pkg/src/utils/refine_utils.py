# Copyright (c) 2025, sghom developers.  All rights reserved.
#
# Use of this source code is governed by an MIT-style license that can be
# found in the LICENSE file at the root of this source tree.

import numpy as np

'''
Low-level canonical labeling and isomorphism search for 2-edge-coloured graphs.
The graphs are given as dense sign matrices (int8, entries in {-1, 0, +1}).
Some notes
1. Colourings are integer vectors; only the order of the values matters.
2. `refine` returns dense ranks 0..k-1, ordered consistently with the input.
3. Canonical keys are bytes; equal keys iff isomorphic (colour-preserving).
'''


def dense_ranks(keys):
    distinct = sorted(set(keys))
    index = {k: i for i, k in enumerate(distinct)}
    return np.array([index[k] for k in keys], dtype=np.int64), len(distinct)


def refine(sign_matrix, colors):
    '''
    Colour refinement until the partition is equitable for both edge signs.

    Input:
        @sign_matrix:  [N, N] int8
        @colors:       [N] any integers
    Output:
        @ranks:        [N] int64 dense ranks of the stable colouring
    '''
    n = sign_matrix.shape[0]
    pos = (sign_matrix == 1).astype(np.int64)
    neg = (sign_matrix == -1).astype(np.int64)
    ranks, k = dense_ranks([int(c) for c in colors])
    while True:
        onehot = np.zeros((n, k), dtype=np.int64)
        onehot[np.arange(n), ranks] = 1
        pos_cnt = pos @ onehot
        neg_cnt = neg @ onehot
        keys = [
            (int(ranks[v]),) + tuple(pos_cnt[v].tolist()) + tuple(neg_cnt[v].tolist())
            for v in range(n)]
        new_ranks, new_k = dense_ranks(keys)
        if new_k == k:
            return new_ranks
        ranks, k = new_ranks, new_k


def twin_representatives(sign_matrix, colors):
    '''
    rep[v] is the least vertex u such that swapping u and v is an automorphism
    fixing every other vertex (same colour, same relation to every third vertex).
    '''
    n = sign_matrix.shape[0]
    rep = np.arange(n)
    for v in range(n):
        for u in range(v):
            if rep[u] != u or colors[u] != colors[v]:
                continue
            mask = np.ones(n, dtype=bool)
            mask[[u, v]] = False
            if np.array_equal(sign_matrix[u, mask], sign_matrix[v, mask]):
                rep[v] = u
                break
    return rep


def canonical_labeling(sign_matrix, colors=None, deadline=None):
    '''
    Canonical form by refinement and individualization over the whole search
    tree, keeping the least leaf encoding. Twins are branched on once.

    Output:
        @order:  tuple, order[i] is the vertex placed at position i
        @key:    bytes
    '''
    n = sign_matrix.shape[0]
    if colors is None:
        colors = np.zeros(n, dtype=np.int64)
    base_ranks, _ = dense_ranks([int(c) for c in colors])
    code = (sign_matrix.astype(np.int16) % 3).astype(np.uint8)
    iu = np.triu_indices(n, k=1)
    header = n.to_bytes(2, 'big')
    twin_rep = twin_representatives(sign_matrix, base_ranks)
    best = {'key': None, 'order': None}

    def leaf(ranks):
        order = np.argsort(ranks, kind='stable')
        sub = code[np.ix_(order, order)]
        key = header + bytes(base_ranks[order].astype(np.uint8).tolist()) + sub[iu].tobytes()
        if best['key'] is None or key < best['key']:
            best['key'] = key
            best['order'] = tuple(int(v) for v in order)

    def visit(ranks):
        if deadline is not None:
            deadline.tick()
        ranks = refine(sign_matrix, ranks)
        if n == 0 or ranks.max() + 1 == n:
            leaf(ranks)
            return
        counts = np.bincount(ranks)
        cell_color = int(np.flatnonzero(counts > 1)[0])
        cell = np.flatnonzero(ranks == cell_color)
        branched = set()
        for v in cell.tolist():
            if int(twin_rep[v]) in branched:
                continue
            branched.add(int(twin_rep[v]))
            child = 2 * ranks + (ranks == cell_color)
            child[v] = 2 * cell_color
            visit(child)

    visit(base_ranks)
    return best['order'], best['key']


def find_isomorphism(m1, m2, pins=(), pairing=None, deadline=None):
    '''
    Backtracking search of a sign-preserving bijection from graph 1 onto
    graph 2, preserving non-adjacency as well.
    Source vertices are assigned in id order and images tried in increasing
    order, so the first solution is the lexicographically least image array.

    Input:
        @pins:     pairs (u, t) forcing image[u] = t.
        @pairing:  optional (inv1, inv2), fixed-point-free involutions on the
                   two vertex sets; the bijection must satisfy
                   image[inv1[u]] = inv2[image[u]].
    Output:
        @image:    tuple or None
    '''
    n = m1.shape[0]
    if m2.shape[0] != n:
        return None
    if n == 0:
        return ()

    # Joint refinement of the disjoint union. An isomorphism preserves the
    # joint stable colouring, and so does every pin.
    joint = np.zeros((2 * n, 2 * n), dtype=np.int8)
    joint[:n, :n] = m1
    joint[n:, n:] = m2
    colors = np.zeros(2 * n, dtype=np.int64)
    for i, (u, t) in enumerate(pins):
        colors[u] = i + 1
        colors[n + t] = i + 1
    colors = refine(joint, colors)
    c1, c2 = colors[:n], colors[n:]
    if sorted(c1.tolist()) != sorted(c2.tolist()):
        return None

    code1 = (m1.astype(np.int16) % 3).tolist()
    code2 = (m2.astype(np.int16) % 3).tolist()
    rel2 = [[0, 0, 0] for _ in range(n)]
    for t in range(n):
        for w in range(n):
            if w != t:
                rel2[t][code2[t][w]] |= 1 << w
    cand0 = [0] * n
    for x in range(n):
        for t in np.flatnonzero(c2 == c1[x]).tolist():
            cand0[x] |= 1 << t

    image = [-1] * n
    state = {'used': 0}

    def candidates(x):
        bits = cand0[x] & ~state['used']
        row = code1[x]
        for y in range(n):
            if image[y] >= 0:
                bits &= rel2[image[y]][row[y]]
                if not bits:
                    break
        return bits

    def place(x, t, trail):
        # Assign x -> t (and its pair), recording the undo trail.
        if not (candidates(x) >> t) & 1:
            return False
        image[x] = t
        state['used'] |= 1 << t
        trail.append(x)
        if pairing is not None:
            x2, t2 = pairing[0][x], pairing[1][t]
            if image[x2] >= 0:
                return image[x2] == t2
            return place(x2, t2, trail)
        return True

    def undo(trail):
        for x in reversed(trail):
            state['used'] &= ~(1 << image[x])
            image[x] = -1
        trail.clear()

    trail = []
    for u, t in pins:
        if image[u] >= 0:
            if image[u] != t:
                return None
            continue
        if not place(u, t, trail):
            return None

    def search(x):
        if deadline is not None:
            deadline.tick()
        while x < n and image[x] >= 0:
            x += 1
        if x == n:
            return True
        bits = candidates(x)
        while bits:
            low = bits & -bits
            bits ^= low
            t = low.bit_length() - 1
            step = []
            if place(x, t, step) and search(x + 1):
                return True
            undo(step)
        return False

    if search(0):
        return tuple(image)
    return None
