# Copyright (c) 2025, sghom developers.  All rights reserved.
#
# Use of this source code is governed by an MIT-style license that can be
# found in the LICENSE file at the root of this source tree.

import os

from src.harness import graph_file


class SGInOut:

    def to_text(self):
        return graph_file.serialize_graph(self)

    def to_json(self):
        return graph_file.serialize_graph_json(self)

    def save(self, path, fmt=None):
        '''
        Write the graph file. The format follows the extension unless given.
        '''
        fmt = fmt or ('json' if path.endswith('.json') else 'text')
        dirname = os.path.dirname(path)
        if dirname:
            os.makedirs(dirname, exist_ok=True)
        with open(path, 'w') as f:
            f.write(self.to_json() if fmt == 'json' else self.to_text())
        return path

    @classmethod
    def load(cls, path, fmt=None):
        fmt = fmt or ('json' if path.endswith('.json') else 'text')
        with open(path) as f:
            text = f.read()
        if fmt == 'json':
            return graph_file.graph_from_json(text)
        return graph_file.parse_graph(text)

    @classmethod
    def from_text(cls, text):
        return graph_file.parse_graph(text)
