# Copyright (c) 2025, sghom developers.  All rights reserved.
#
# Use of this source code is governed by an MIT-style license that can be
# found in the LICENSE file at the root of this source tree.

import enum
import itertools


class Sign(enum.IntEnum):
    '''
    Edge sign. The integer values are the entries of the dense sign matrix,
    where 0 encodes a non-edge.
    '''
    POS = 1
    NEG = -1

    def __neg__(self):
        return Sign.NEG if self is Sign.POS else Sign.POS

    def __mul__(self, other):
        return Sign(int(self) * int(other))

    def __str__(self):
        return '+' if self is Sign.POS else '-'

    def __format__(self, spec):
        return format(str(self), spec)

    @property
    def symbol(self):
        return str(self)

    @classmethod
    def parse(cls, value):
        if isinstance(value, Sign):
            return value
        if isinstance(value, str):
            if value in ('+', '1', '+1', 'pos', 'positive'):
                return cls.POS
            if value in ('-', '-1', 'neg', 'negative'):
                return cls.NEG
            raise ValueError(f"Not a sign: {value!r}")
        if int(value) == 1:
            return cls.POS
        if int(value) == -1:
            return cls.NEG
        raise ValueError(f"Not a sign: {value!r}")


POS = Sign.POS
NEG = Sign.NEG
SIGNS = (Sign.POS, Sign.NEG)


class SignVector(tuple):
    '''
    Nonempty tuple of signs, alpha = (alpha_1, ..., alpha_k).
    '''

    def __new__(cls, entries):
        entries = tuple(Sign.parse(s) for s in entries)
        if len(entries) == 0:
            raise ValueError("SignVector must be nonempty.")
        return super().__new__(cls, entries)

    def __neg__(self):
        return SignVector(-s for s in self)

    def __str__(self):
        return ''.join(str(s) for s in self)

    @classmethod
    def all_of_length(cls, k):
        # '+' before '-' in every position.
        return [cls(p) for p in itertools.product(SIGNS, repeat=k)]
