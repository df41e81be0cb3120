# Copyright (c) 2025, sghom developers.  All rights reserved.
#
# Use of this source code is governed by an MIT-style license that can be
# found in the LICENSE file at the root of this source tree.

import itertools
from dataclasses import dataclass
from typing import Tuple

from src.exceptions import GraphStructureError


@dataclass(frozen=True)
class SplitterRecord:
    '''
    A pair agreeing on exactly two of the remaining four vertices. The two
    teams are sorted and carry no agree/disagree tag, so switching leaves
    the record unchanged.
    '''
    pair: Tuple[int, int]
    teams: Tuple[Tuple[int, int], Tuple[int, int]]


def _check_target(t):
    if t.order != 6 or not t.is_complete():
        raise GraphStructureError("Splitters are defined on complete signed graphs of order 6.")


def splitters(t):
    _check_target(t)
    records = []
    for i, j in itertools.combinations(range(6), 2):
        rest = [w for w in range(6) if w not in (i, j)]
        agree = tuple(w for w in rest if t.sign(i, w) is t.sign(j, w))
        if len(agree) != 2:
            continue
        disagree = tuple(w for w in rest if w not in agree)
        records.append(SplitterRecord((i, j), tuple(sorted([agree, disagree]))))
    return records


def non_splitter_partners(t):
    '''
    For every vertex, the vertices it does not form a splitter with.
    '''
    pairs = {r.pair for r in splitters(t)}
    return {
        v: sorted(u for u in range(6) if u != v and (min(u, v), max(u, v)) not in pairs)
        for v in range(6)}


def splitter_counts(t):
    counts = [0] * 6
    for r in splitters(t):
        for v in r.pair:
            counts[v] += 1
    return counts
