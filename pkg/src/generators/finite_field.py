# Copyright (c) 2025, sghom developers.  All rights reserved.
#
# Use of this source code is governed by an MIT-style license that can be
# found in the LICENSE file at the root of this source tree.

import itertools
from functools import lru_cache

import numpy as np
from sympy import factorint
from sympy.polys.domains import ZZ
from sympy.polys.galoistools import gf_irreducible_p, gf_add, gf_mul, gf_rem, gf_strip

from src.exceptions import FieldOrderError

MAX_FIELD_ORDER = 128


def int_to_poly(e, p):
    # Base-p digit i is the coefficient of x^i; sympy lists start at the top degree.
    digits = []
    while e:
        digits.append(e % p)
        e //= p
    return gf_strip([ZZ(d) for d in reversed(digits)])


def poly_to_int(poly, p):
    e = 0
    for c in poly:
        e = e * p + int(c)
    return e


class FiniteField:

    def __init__(self, q):
        '''
        GF(q) with elements encoded as integers 0..q-1.
        Extension fields are polynomial quotients GF(p)[x] / (modulus), where
        the modulus is the lexicographically least monic irreducible of degree k.
        '''
        q = int(q)
        if q < 2:
            raise FieldOrderError(f"Field order must be a prime power, got {q}.")
        if q > MAX_FIELD_ORDER:
            raise FieldOrderError(f"Field order {q} exceeds the supported maximum {MAX_FIELD_ORDER}.")
        factors = factorint(q)
        if len(factors) != 1:
            raise FieldOrderError(f"Field order {q} is not a prime power.")
        (p, k), = factors.items()
        self.q = q
        self.p = int(p)
        self.k = int(k)

        self.modulus = None
        for c in itertools.product(range(self.p), repeat=self.k):
            poly = [ZZ(1)] + [ZZ(v) for v in c]
            if gf_irreducible_p(poly, self.p, ZZ):
                self.modulus = poly
                break
        assert self.modulus is not None

        polys = [int_to_poly(e, self.p) for e in range(q)]
        self.add_table = np.zeros((q, q), dtype=np.int64)
        self.mul_table = np.zeros((q, q), dtype=np.int64)
        for a in range(q):
            for b in range(a, q):
                s = poly_to_int(gf_add(polys[a], polys[b], self.p, ZZ), self.p)
                m = poly_to_int(gf_rem(gf_mul(polys[a], polys[b], self.p, ZZ), self.modulus, self.p, ZZ), self.p)
                self.add_table[a, b] = self.add_table[b, a] = s
                self.mul_table[a, b] = self.mul_table[b, a] = m

        self.neg_table = np.argmin(self.add_table, axis=1)
        self.squares = frozenset(int(self.mul_table[a, a]) for a in range(1, q))

    @property
    def elements(self):
        return range(self.q)

    @property
    def modulus_coeffs(self):
        return tuple(int(c) for c in self.modulus)

    def add(self, a, b):
        return int(self.add_table[a, b])

    def mul(self, a, b):
        return int(self.mul_table[a, b])

    def neg(self, a):
        return int(self.neg_table[a])

    def sub(self, a, b):
        return int(self.add_table[a, self.neg_table[b]])

    def is_square(self, a):
        return a in self.squares

    def __repr__(self):
        return f"FiniteField(q={self.q}, p={self.p}, k={self.k})"


@lru_cache(maxsize=None)
def make_field(q):
    return FiniteField(q)
