# Copyright (c) 2025, sghom developers.  All rights reserved.
#
# Use of this source code is governed by an MIT-style license that can be
# found in the LICENSE file at the root of this source tree.

from src.mappings import Mapping
from src.utils import refine_utils
from src.signed_graph_gears.switching import anti_twin


MODES = ('sp', 'signed')


def check_mode(mode):
    if mode not in MODES:
        raise ValueError(f"Unknown mode {mode!r}, expected one of {MODES}.")
    return mode


class SGIsomorphism:

    def canonical_labeling(self, mode='sp'):
        '''
        Output:
            @order:  order[i] is the vertex placed at position i of the
                     canonical form (of the double switching graph in signed mode)
            @key:    canonical key bytes
        '''
        check_mode(mode)
        cache_key = ('canon', mode)
        if cache_key not in self._derived:
            base = self if mode == 'sp' else self.double_switching()
            self._derived[cache_key] = refine_utils.canonical_labeling(base.sign_matrix)
        return self._derived[cache_key]

    def canonical_key(self, mode='sp'):
        return self.canonical_labeling(mode)[1]

    def canonical_form(self):
        '''
        The sp canonical representative, labels dropped.
        '''
        order, _ = self.canonical_labeling('sp')
        perm = [0] * self.order
        for pos, v in enumerate(order):
            perm[v] = pos
        return self.without_labels().relabel(perm)

    def sp_isomorphic(self, other, deadline=None):
        '''
        Lexicographically least sign-preserving isomorphism onto other, or None.
        '''
        if (self.order != other.order or
                self.num_positive_edges != other.num_positive_edges or
                self.num_negative_edges != other.num_negative_edges):
            return None
        image = refine_utils.find_isomorphism(
            self.sign_matrix, other.sign_matrix, deadline=deadline)
        return None if image is None else Mapping(image)

    def signed_isomorphic(self, other, deadline=None):
        if self.order != other.order or self.num_edges != other.num_edges:
            return False
        image = refine_utils.find_isomorphism(
            self.double_switching().sign_matrix,
            other.double_switching().sign_matrix,
            deadline=deadline)
        return image is not None

    def signed_isomorphism(self, other, deadline=None):
        '''
        A bijection f with witness S such that switching self at S makes f a
        sign-preserving isomorphism onto other, or None.
        Found as an isomorphism of the double switching graphs that maps
        anti-twin pairs onto anti-twin pairs.
        '''
        n = self.order
        if n != other.order or self.num_edges != other.num_edges:
            return None
        if n == 0:
            return Mapping((), frozenset())
        pairing = [anti_twin(v, n) for v in range(2 * n)]
        d1 = self.double_switching().sign_matrix
        d2 = other.double_switching().sign_matrix
        # A global swap of originals and twins is an automorphism, so the
        # first vertex may be pinned to an original.
        for t in range(n):
            image = refine_utils.find_isomorphism(
                d1, d2, pins=[(0, t)], pairing=(pairing, pairing), deadline=deadline)
            if image is not None:
                return Mapping(
                    [image[v] % n for v in range(n)],
                    frozenset(v for v in range(n) if image[v] >= n))
        return None

    def automorphism_with_pins(self, pins, deadline=None):
        '''
        Least sign-preserving automorphism sending u to t for every (u, t) in pins.
        '''
        image = refine_utils.find_isomorphism(
            self.sign_matrix, self.sign_matrix, pins=list(pins), deadline=deadline)
        return None if image is None else Mapping(image)

    def switching_automorphism_with_pins(self, pins, deadline=None):
        '''
        A switching automorphism (switch at S, then a sign-preserving self-map)
        sending u to t for every (u, t) in pins, searched on the double
        switching graph. Pin targets t may be anti-twins (t + N), meaning u
        is switched relative to the first pinned vertex.
        '''
        n = self.order
        pairing = [anti_twin(v, n) for v in range(2 * n)]
        d = self.double_switching().sign_matrix
        image = refine_utils.find_isomorphism(
            d, d, pins=list(pins), pairing=(pairing, pairing), deadline=deadline)
        if image is None:
            return None
        return Mapping(
            [image[v] % n for v in range(n)],
            frozenset(v for v in range(n) if image[v] >= n))
