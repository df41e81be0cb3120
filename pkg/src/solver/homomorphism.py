# Copyright (c) 2025, sghom developers.  All rights reserved.
#
# Use of this source code is governed by an MIT-style license that can be
# found in the LICENSE file at the root of this source tree.

import itertools
from dataclasses import dataclass
from typing import Optional

from src.mappings import Mapping
from src.exceptions import SizeCapError
from src.utils.system_utils import Deadline, ordered_parallel_map

ORACLE_MAX_ORDER = 12


@dataclass(frozen=True)
class SearchOptions:
    deterministic: bool = True            # Return the first witness of the fixed search order
    time_budget: Optional[float] = None   # Wall-clock seconds, None or <= 0 for unlimited
    parallel: int = 1                     # Workers splitting the root branching

    @classmethod
    def from_cfg(cls, cfg_search):
        return cls(
            deterministic=cfg_search.deterministic,
            time_budget=cfg_search.time_budget,
            parallel=cfg_search.n_workers)

    def deadline(self):
        return Deadline(self.time_budget)


DEFAULT_OPTIONS = SearchOptions()


def degeneracy_order(g):
    '''
    Repeatedly remove a vertex of minimum remaining degree (least id first),
    then reverse, so densely connected vertices are assigned first.
    '''
    n = g.order
    nbr = [g.neighbor_bits(v) for v in range(n)]
    alive = (1 << n) - 1
    removed = []
    for _ in range(n):
        best, best_deg = -1, n + 1
        for v in range(n):
            if (alive >> v) & 1:
                d = bin(nbr[v] & alive).count('1')
                if d < best_deg:
                    best, best_deg = v, d
        removed.append(best)
        alive &= ~(1 << best)
    return removed[::-1]


def sp_hom(source, target, opts=None, fixed=None, domains=None, deadline=None):
    '''
    Sign-preserving homomorphism by backtracking with forward checking.

    Source vertices are assigned in a fixed order (fixed vertices by id, then
    the degeneracy order) and candidates are tried in increasing order, so the
    witness is the first solution of that order. Each assignment v -> t
    shrinks the candidate bitsets of the unassigned neighbours of v to the
    sign-filtered target neighbourhood of t.

    Input:
        @fixed:    optional {source vertex: target vertex}
        @domains:  optional {source vertex: iterable of allowed target vertices}
    Output:
        @mapping:  Mapping or None
    '''
    opts = opts or DEFAULT_OPTIONS
    deadline = deadline or opts.deadline()
    n, m = source.order, target.order
    if n == 0:
        return Mapping(())
    if m == 0:
        return None

    tp = [target.neighbor_bits(t, '+') for t in range(m)]
    tn = [target.neighbor_bits(t, '-') for t in range(m)]
    has_pos = sum(1 << t for t in range(m) if tp[t])
    has_neg = sum(1 << t for t in range(m) if tn[t])

    dom = [(1 << m) - 1] * n
    for v in range(n):
        if source.neighbor_bits(v, '+'):
            dom[v] &= has_pos
        if source.neighbor_bits(v, '-'):
            dom[v] &= has_neg
    for v, allowed in (domains or {}).items():
        bits = 0
        for t in allowed:
            bits |= 1 << target.check_vertex(t)
        dom[source.check_vertex(v)] &= bits
    fixed = {source.check_vertex(v): target.check_vertex(t) for v, t in (fixed or {}).items()}
    for v, t in fixed.items():
        dom[v] &= 1 << t

    order = sorted(fixed) + [v for v in degeneracy_order(source) if v not in fixed]
    pos = {v: i for i, v in enumerate(order)}
    sign = source.sign_matrix
    later = [
        [(u, int(sign[v, u])) for u in sorted(source.neighbors(v)) if pos[u] > pos[v]]
        for v in range(n)]

    def search(i, dom, image):
        if i == n:
            return True
        deadline.tick()
        v = order[i]
        bits = dom[v]
        while bits:
            low = bits & -bits
            bits ^= low
            t = low.bit_length() - 1
            trail = []
            ok = True
            for u, s in later[v]:
                nd = dom[u] & (tp[t] if s == 1 else tn[t])
                if nd != dom[u]:
                    trail.append((u, dom[u]))
                    dom[u] = nd
                if not nd:
                    ok = False
                    break
            if ok:
                image[v] = t
                if search(i + 1, dom, image):
                    return True
            for u, old in reversed(trail):
                dom[u] = old
        return False

    if any(d == 0 for d in dom):
        return None

    if opts.parallel <= 1 or n == 1:
        image = [-1] * n
        if search(0, dom, image):
            return Mapping(image)
        return None

    # Root split: one subsearch per root candidate, first success in
    # candidate order wins.
    root = order[0]
    roots = [t for t in range(m) if (dom[root] >> t) & 1]

    def branch(t):
        sub = list(dom)
        sub[root] = 1 << t
        image = [-1] * n
        return Mapping(image) if search(0, sub, image) else None

    for result in ordered_parallel_map(branch, roots, n_workers=opts.parallel):
        if result is not None:
            return result
    return None


def hom(source, target, opts=None, deadline=None):
    '''
    Homomorphism of signed graphs, as an sp-homomorphism into the double
    switching graph of the target folded back onto the target.
    The returned switch_witness S makes the mapping an sp-homomorphism of
    the source switched at S.
    '''
    n_t = target.order
    if source.order == 0:
        return Mapping((), frozenset())
    if n_t == 0:
        return None
    # Swapping originals with anti-twins is an automorphism of the double,
    # so the first vertex of every component may map to an original.
    domains = {comp[0]: range(n_t) for comp in source.components()}
    found = sp_hom(source, target.double_switching(), opts=opts, domains=domains, deadline=deadline)
    if found is None:
        return None
    return Mapping(
        [t % n_t for t in found.image],
        frozenset(v for v, t in enumerate(found.image) if t >= n_t))


def hom_oracle(source, target):
    '''
    Independent homomorphism test: try sp_hom on every switching of the
    source that keeps the first vertex of each component unswitched.
    '''
    if source.order > ORACLE_MAX_ORDER:
        raise SizeCapError(f"hom_oracle supports at most {ORACLE_MAX_ORDER} source vertices, got {source.order}.")
    roots = {comp[0] for comp in source.components()}
    free = [v for v in range(source.order) if v not in roots]
    for mask in itertools.product((False, True), repeat=len(free)):
        switched = source.switch({v for v, on in zip(free, mask) if on})
        if sp_hom(switched, target) is not None:
            return True
    return False


def validate_sp_hom(source, target, mapping):
    '''
    Edge-by-edge check that mapping is a sign-preserving homomorphism.
    '''
    image = mapping.image if isinstance(mapping, Mapping) else tuple(mapping)
    if len(image) != source.order:
        return False
    if any(not 0 <= t < target.order for t in image):
        return False
    tsign = target.sign_matrix
    for u, v, s in source.edges():
        if tsign[image[u], image[v]] != int(s):
            return False
    return True


def validate_hom(source, target, mapping):
    '''
    Check a homomorphism of signed graphs. With a switch witness the switched
    source must sp-map; without one, the product of source and image signs
    must be balanced (switching-equivalent to all positive).
    '''
    if mapping.switch_witness is not None:
        return validate_sp_hom(source.switch(mapping.switch_witness), target, mapping)
    image = mapping.image
    if len(image) != source.order or any(not 0 <= t < target.order for t in image):
        return False
    tsign = target.sign_matrix
    product = []
    for u, v, s in source.edges():
        ts = int(tsign[image[u], image[v]])
        if ts == 0:
            return False
        product.append((u, v, int(s) * ts))
    balanced = type(source).from_edges(source.order, product)
    positive = type(source).from_edges(source.order, [(u, v, 1) for u, v, _ in product])
    return balanced.is_switch_equivalent(positive)
