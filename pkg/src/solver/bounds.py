# Copyright (c) 2025, sghom developers.  All rights reserved.
#
# Use of this source code is governed by an MIT-style license that can be
# found in the LICENSE file at the root of this source tree.

import math
from typing import NamedTuple

from src.exceptions import FormulaDomainError

MAX_DEGREE_MIN_DELTA = 29


class MaxDegreeBounds(NamedTuple):
    lower: float         # 2^(delta/2 - 1) as a real number
    lower_floor: int     # its floor, exact for odd delta
    upper: int           # (delta-3)(delta-1) 2^(delta-1) + 2


def kn_lower_bound_formulas(n):
    '''
    Lower bounds (chi_sp, chi_s) for K_n-minor-free graphs, split by the
    parity of n.
    '''
    if n < 2:
        raise FormulaDomainError(f"K_n-minor lower bounds need n >= 2, got {n}.")
    if n % 2 == 0:
        return (2 ** (n + 1) - 5) // 3, (2 ** n - 1) // 3
    return (2 ** (n + 1) - 4) // 3, (2 ** n - 2) // 3


def kn_upper_bound_formulas(n):
    '''
    Upper bounds (chi_s, chi_sp) for K_n-minor-free graphs from acyclic
    colourings with m = 5 * C(n-1, 2) colours.
    '''
    if n < 3:
        raise FormulaDomainError(f"K_n-minor upper bounds need n >= 3, got {n}.")
    m = 5 * math.comb(n - 1, 2)
    return m * 2 ** (m - 2), m * 2 ** (m - 1)


def acyclic_bound_formulas(k):
    '''
    (chi_s, chi_sp) upper bounds for graphs of acyclic chromatic number k.
    '''
    if k < 1:
        raise FormulaDomainError(f"Acyclic chromatic number must be >= 1, got {k}.")
    if k == 1:
        return 1, 1
    return k * 2 ** (k - 2), k * 2 ** (k - 1)


def max_degree_bound_formulas(delta):
    if delta < MAX_DEGREE_MIN_DELTA:
        raise FormulaDomainError(
            f"Maximum degree bounds hold for delta >= {MAX_DEGREE_MIN_DELTA}, got {delta}: outside the theorem's validity.")
    if delta % 2 == 0:
        floor = 2 ** (delta // 2 - 1)
    else:
        # 2^((delta-2)/2) = sqrt(2^(delta-2))
        floor = math.isqrt(2 ** (delta - 2))
    return MaxDegreeBounds(
        lower=2.0 ** (delta / 2 - 1),
        lower_floor=floor,
        upper=(delta - 3) * (delta - 1) * 2 ** (delta - 1) + 2)


def chi_s_lower_from_sp(value):
    # chi_sp <= 2 chi_s
    return (value + 1) // 2
