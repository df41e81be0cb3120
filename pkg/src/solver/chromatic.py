# Copyright (c) 2025, sghom developers.  All rights reserved.
#
# Use of this source code is governed by an MIT-style license that can be
# found in the LICENSE file at the root of this source tree.

from dataclasses import dataclass

from src.mappings import Mapping
from src.exceptions import CapExhausted
from src.signed_graph_model import SignedGraph
from src.generators.enumeration import enumerate_targets, MAX_ORDER_SP, MAX_ORDER_SIGNED
from src.solver.homomorphism import sp_hom, hom, DEFAULT_OPTIONS
from src.utils.system_utils import ordered_parallel_map


@dataclass(frozen=True)
class ChromaticResult:
    value: int
    witness_target: SignedGraph
    witness_map: Mapping
    mode: str = 'sp'


def _chi(g, mode, cap, opts, policy, start_order, max_order):
    '''
    Scan target catalogs of increasing order and return the first order
    admitting a (sp-)homomorphism. The source itself is a target of its own
    order, so catalogs above order |V(g)| - 1 are never needed.
    '''
    opts = opts or DEFAULT_OPTIONS
    deadline = opts.deadline()
    if cap is None:
        cap = MAX_ORDER_SP if mode == 'sp' else MAX_ORDER_SIGNED
    find = sp_hom if mode == 'sp' else hom

    if g.order and start_order > g.order:
        raise ValueError(
            f"start_order {start_order} exceeds the order {g.order}, which bounds the value from above.")
    if g.order == 0:
        return ChromaticResult(0, g, Mapping((), frozenset() if mode == 'signed' else None), mode)

    for order in range(max(start_order, 1), cap + 1):
        if order >= g.order:
            identity = Mapping(range(g.order), frozenset() if mode == 'signed' else None)
            return ChromaticResult(g.order, g, identity, mode)
        catalog = enumerate_targets(
            order, 'sp' if mode == 'sp' else 'signed', policy=policy,
            max_order=max_order, n_workers=opts.parallel)

        if opts.parallel <= 1:
            for target in catalog:
                found = find(g, target, deadline=deadline)
                if found is not None:
                    return ChromaticResult(order, target, found, mode)
        else:
            results = ordered_parallel_map(
                lambda t: find(g, t, deadline=deadline), catalog.graphs, n_workers=opts.parallel)
            for target, found in zip(catalog.graphs, results):
                if found is not None:
                    return ChromaticResult(order, target, found, mode)

    raise CapExhausted(
        f"No target of order <= {cap} admits a {'sp-' if mode == 'sp' else ''}homomorphism; value > {cap}.",
        lower_bound=cap)


def chi_sp(g, cap=None, opts=None, policy='all', start_order=1, max_order=None):
    '''
    Sign-preserving chromatic number. Raises CapExhausted when the value
    exceeds cap; its lower_bound is then cap.
    start_order is a known lower bound and may not exceed |V(g)|.
    '''
    return _chi(g, 'sp', cap, opts, policy, start_order, max_order)


def chi_s(g, cap=None, opts=None, policy='all', start_order=1, max_order=None):
    '''
    Signed chromatic number, scanning switching classes of targets.
    '''
    return _chi(g, 'signed', cap, opts, policy, start_order, max_order)


def sandwich_check(g, cap=None, opts=None, policy='all', max_order=None):
    s = chi_s(g, cap=cap, opts=opts, policy=policy, max_order=max_order).value
    sp = chi_sp(g, cap=cap, opts=opts, policy=policy, max_order=max_order).value
    return s <= sp <= 2 * s
