# Copyright (c) 2025, sghom developers.  All rights reserved.
#
# Use of this source code is governed by an MIT-style license that can be
# found in the LICENSE file at the root of this source tree.

from dataclasses import dataclass
from typing import Optional, Tuple, FrozenSet


@dataclass(frozen=True)
class Mapping:
    '''
    Vertex map from a source to a target signed graph.

    Fields:
        @image:           image[v] is the target vertex of source vertex v.
        @switch_witness:  Optional set of source vertices. When present, the map
                          is an sp-homomorphism of the source switched at it.
    '''
    image: Tuple[int, ...]
    switch_witness: Optional[FrozenSet[int]] = None

    def __post_init__(self):
        object.__setattr__(self, 'image', tuple(int(t) for t in self.image))
        if self.switch_witness is not None:
            object.__setattr__(self, 'switch_witness', frozenset(int(v) for v in self.switch_witness))

    def __len__(self):
        return len(self.image)

    def __getitem__(self, v):
        return self.image[v]

    def is_injective(self):
        return len(set(self.image)) == len(self.image)

    def check_target(self, target):
        assert all(0 <= t < target.order for t in self.image), 'Image vertex out of target range.'

    def as_dict(self):
        return {
            'image': list(self.image),
            'switch_witness': None if self.switch_witness is None else sorted(self.switch_witness),
        }
